#include "ih/surgery.hpp"

#include "ih/errors.hpp"

namespace ih {

namespace {

// Coefficient bookkeeping inverse to cone_chain: given the apex-containing
// part of a chain, recover eta with cone(eta) equal to that part.
Chain uncone(int apex, const Chain& apex_part) {
    Chain eta;
    eta.degree = apex_part.degree - 1;
    for (const auto& [s, v] : apex_part.terms) {
        Simplex rest;
        int rank = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == apex)
                rank = static_cast<int>(i);
            else
                rest.push_back(s[i]);
        }
        eta.add(rest, (rank % 2 == 0) ? v : -v);
    }
    return eta;
}

} // namespace

Chain extract_link_cycle(const SurgeryProblem& p) {
    const SimplicialComplex& x = p.x.complex;
    int apex = x.require_vertex(p.apex);
    if (!chain_supported_on(x, p.xi))
        throw precondition_error("surgery cycle is not supported on the subspace");
    if (!boundary(p.xi).is_zero())
        throw precondition_error("surgery input is not a cycle");

    Chain apex_part;
    apex_part.degree = p.xi.degree;
    for (const auto& [s, v] : p.xi.terms)
        if (std::binary_search(s.begin(), s.end(), apex)) apex_part.add(s, v);

    Chain eta = uncone(apex, apex_part);
    if (!boundary(eta).is_zero())
        throw precondition_error(
            "cycle is not cone-shaped near the apex; apply one barycentric subdivision "
            "(subdivide_problem) and retry");
    return eta;
}

std::optional<RepairOutcome> repair_cycle(const SurgeryProblem& p) {
    const SimplicialComplex& xc = p.x.complex;
    const SimplicialComplex& yc = p.y.complex;
    if (!is_subcomplex_of(xc, yc))
        throw precondition_error("surgery subspace is not a subcomplex of the ambient space");
    int apex_y = yc.require_vertex(p.apex);

    Chain eta_x = extract_link_cycle(p);
    Chain xi_y = translate_chain(xc, yc, p.xi);

    RepairOutcome out;
    out.link_cycle = eta_x;
    if (eta_x.is_zero()) {
        out.repaired = xi_y;
        out.bounding.degree = p.xi.degree;
        out.middle_allowable_in_y = is_allowable(xi_y, Perversity::middle(), p.y.strat);
        out.log_allowable_in_y = is_allowable(xi_y, Perversity::logarithmic(), p.y.strat);
        return out;
    }

    StratifiedComplex ly = link(yc, p.y.strat, p.apex);
    Chain eta_link = translate_chain(yc, ly.complex, translate_chain(xc, yc, eta_x));

    int d = p.xi.degree;
    RationalMatrix bd = ly.complex.boundary_matrix(d);
    auto zeta_coords = solve(bd, chain_to_vector(ly.complex, eta_link));
    if (!zeta_coords) return std::nullopt; // eta does not bound: obstructed

    Chain zeta_link;
    zeta_link.degree = d;
    const auto& level = ly.complex.simplices_of_dim(d);
    for (int j = 0; j < static_cast<int>(zeta_coords->size()); ++j)
        if ((*zeta_coords)[j] != 0) zeta_link.add(level[j], (*zeta_coords)[j]);
    Chain zeta = translate_chain(ly.complex, yc, zeta_link);

    Chain eta_y = translate_chain(xc, yc, eta_x);
    Chain xi_new = xi_y - cone_chain(apex_y, eta_y) + zeta;

    if (!boundary(xi_new).is_zero())
        throw invariant_error("repaired chain fails to be a cycle");
    for (const auto& [s, v] : xi_new.terms)
        if (std::binary_search(s.begin(), s.end(), apex_y))
            throw invariant_error("repaired chain still meets the apex");
    // xi - xi' must bound the cone over zeta (up to sign).
    Chain diff = xi_y - xi_new;
    Chain cone_zeta_bd = boundary(cone_chain(apex_y, zeta));
    if (!(diff == cone_zeta_bd) && !(diff == cone_zeta_bd * Rational(-1)))
        throw invariant_error("repaired chain is not homologous to the input");

    out.repaired = xi_new;
    out.bounding = zeta;
    out.middle_allowable_in_y = is_allowable(xi_new, Perversity::middle(), p.y.strat);
    out.log_allowable_in_y = is_allowable(xi_new, Perversity::logarithmic(), p.y.strat);
    return out;
}

SurgeryProblem subdivide_problem(const SurgeryProblem& p) {
    SurgeryProblem out;
    out.apex = p.apex; // a vertex keeps its name under subdivision
    StratifiedComplex sx = barycentric_subdivide(p.x.complex, p.x.strat);
    StratifiedComplex sy = barycentric_subdivide(p.y.complex, p.y.strat);
    out.xi = subdivide_chain(p.x.complex, sx.complex, p.xi);
    out.x = std::move(sx);
    out.y = std::move(sy);
    return out;
}

} // namespace ih
