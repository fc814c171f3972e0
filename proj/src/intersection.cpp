#include "ih/intersection.hpp"

#include <algorithm>
#include <deque>

#include "ih/conecalc.hpp"
#include "ih/errors.hpp"

namespace ih {

namespace {

std::string simplex_names(const SimplicialComplex& x, const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += x.vertex_name(s[i]);
    }
    return out + "}";
}

} // namespace

IntersectionComplex::IntersectionComplex(const SimplicialComplex& x, const Stratification& s,
                                         const Perversity& p,
                                         const std::optional<Subcomplex>& rel)
    : x_(x) {
    s.check_structure();
    int top = x.dim();
    basis_.resize(top + 1);
    coord_solver_.resize(top + 1);
    rel_cols_.assign(top + 1, 0);

    // Allowable simplices per degree (the chain condition is simplex-wise).
    std::vector<std::vector<int>> allowed(top + 1);
    for (int d = 0; d <= top; ++d) {
        const auto& level = x.simplices_of_dim(d);
        for (int i = 0; i < static_cast<int>(level.size()); ++i)
            if (simplex_allowable(level[i], d, p, s)) allowed[d].push_back(i);
    }

    std::vector<std::vector<bool>> allowed_mask(top + 1);
    for (int d = 0; d <= top; ++d) {
        allowed_mask[d].assign(x.count_in_dim(d), false);
        for (int i : allowed[d]) allowed_mask[d][i] = true;
    }

    std::vector<std::vector<SparseVec>> reps(top + 1); // quotient representatives
    for (int d = 0; d <= top; ++d) {
        // Intersection chains of degree d: allowable chains whose boundary
        // hits no non-allowable (d-1)-simplex.
        RationalMatrix bd = x.boundary_matrix(d); // zero rows when d = 0
        std::vector<int> bad_rows;
        for (int r = 0; r < bd.rows; ++r)
            if (!allowed_mask[d - 1][r]) bad_rows.push_back(r);

        RationalMatrix constraint(static_cast<int>(bad_rows.size()),
                                  static_cast<int>(allowed[d].size()));
        std::map<int, int> row_pos;
        for (int i = 0; i < static_cast<int>(bad_rows.size()); ++i) row_pos[bad_rows[i]] = i;
        for (int j = 0; j < static_cast<int>(allowed[d].size()); ++j) {
            SparseVec col = bd.column(allowed[d][j]);
            for (const auto& [r, v] : col) {
                auto it = row_pos.find(r);
                if (it != row_pos.end()) constraint.set(it->second, j, v);
            }
        }

        std::vector<SparseVec> chains;
        for (const SparseVec& k : kernel_basis(constraint)) {
            SparseVec full;
            for (const auto& [j, v] : k) full[allowed[d][j]] = v;
            chains.push_back(std::move(full));
        }

        std::vector<SparseVec> rel_basis;
        if (rel) {
            // Chains of the intersection complex supported inside rel: the
            // kernel of the projection onto simplices off rel, in the
            // coordinates of `chains`.
            const auto& level = x.simplices_of_dim(d);
            std::vector<int> outside;
            for (int i = 0; i < static_cast<int>(level.size()); ++i)
                if (!rel->contains(level[i])) outside.push_back(i);
            std::map<int, int> out_pos;
            for (int i = 0; i < static_cast<int>(outside.size()); ++i) out_pos[outside[i]] = i;
            RationalMatrix proj(static_cast<int>(outside.size()),
                                static_cast<int>(chains.size()));
            for (int j = 0; j < static_cast<int>(chains.size()); ++j)
                for (const auto& [i, v] : chains[j]) {
                    auto it = out_pos.find(i);
                    if (it != out_pos.end()) proj.set(it->second, j, v);
                }
            for (const SparseVec& k : kernel_basis(proj)) {
                SparseVec full;
                for (const auto& [j, coeff] : k)
                    for (const auto& [i, v] : chains[j]) {
                        full[i] += coeff * v;
                    }
                std::erase_if(full, [](const auto& kv) { return kv.second == 0; });
                rel_basis.push_back(std::move(full));
            }
        }

        IncrementalSpan span;
        for (const auto& r : rel_basis) span.add(r);
        for (auto& c : chains)
            if (span.add(c)) reps[d].push_back(std::move(c));

        rel_cols_[d] = static_cast<int>(rel_basis.size());
        std::vector<SparseVec> solver_cols = rel_basis;
        for (const auto& r : reps[d]) solver_cols.push_back(r);
        coord_solver_[d] = RationalMatrix::from_columns(x.count_in_dim(d), solver_cols);
        basis_[d] = reps[d];
    }

    // Boundary matrices in the quotient bases.
    if (top < 0) return;
    matrices_.boundary.resize(top + 1);
    matrices_.boundary[0] = RationalMatrix(0, static_cast<int>(reps[0].size()));
    for (int d = 1; d <= top; ++d) {
        RationalMatrix bd = x.boundary_matrix(d);
        RationalMatrix images(x.count_in_dim(d - 1), static_cast<int>(reps[d].size()));
        for (int j = 0; j < static_cast<int>(reps[d].size()); ++j)
            for (const auto& [i, v] : bd.apply(reps[d][j])) images.set(i, j, v);
        auto sol = solve_many(coord_solver_[d - 1], images);
        if (!sol)
            throw invariant_error("intersection chain boundary left the intersection complex");
        RationalMatrix q(static_cast<int>(reps[d - 1].size()), static_cast<int>(reps[d].size()));
        for (const auto& [rc, v] : sol->entries)
            if (rc.first >= rel_cols_[d - 1]) q.set(rc.first - rel_cols_[d - 1], rc.second, v);
        matrices_.boundary[d] = std::move(q);
    }
}

Chain IntersectionComplex::basis_chain(int degree, int i) const {
    return chain_from_sparse(x_, degree, basis_.at(degree).at(i));
}

std::optional<std::vector<Rational>> IntersectionComplex::coords(const Chain& z) const {
    int d = z.degree;
    if (d < 0 || d > top_degree()) return std::nullopt;
    auto sol = solve(coord_solver_[d], chain_to_vector(x_, z));
    if (!sol) return std::nullopt;
    return std::vector<Rational>(sol->begin() + rel_cols_[d], sol->end());
}

Chain IntersectionComplex::chain_of(int degree, const std::vector<Rational>& coords) const {
    Chain out;
    out.degree = degree;
    const auto& level = x_.simplices_of_dim(degree);
    for (int j = 0; j < static_cast<int>(coords.size()); ++j) {
        if (coords[j] == 0) continue;
        for (const auto& [i, v] : basis_[degree][j]) out.add(level[i], v * coords[j]);
    }
    return out;
}

ChainComplexMatrices intersection_chain_complex(const SimplicialComplex& x,
                                                const Stratification& s, const Perversity& p,
                                                const std::optional<Subcomplex>& rel) {
    return IntersectionComplex(x, s, p, rel).matrices();
}

IHTable ih_betti(const SimplicialComplex& x, const Stratification& s, const Perversity& p,
                 const std::optional<Subcomplex>& rel) {
    IntersectionComplex ic(x, s, p, rel);
    IHTable table;
    table.perversity = p;
    for (int d = 0; d <= ic.top_degree(); ++d) {
        HomologySpace h(ic.matrices(), d);
        table.dims.dims.push_back(h.dim());
        std::vector<Chain> cycles;
        for (const auto& rep : h.representatives()) {
            std::vector<Rational> coords(ic.dim_at(d), Rational(0));
            for (const auto& [i, v] : rep) coords[i] = v;
            cycles.push_back(ic.chain_of(d, coords));
        }
        table.basis_cycles.push_back(std::move(cycles));
    }
    return table;
}

ConeFormulaReport verify_cone_formula(const SimplicialComplex& l, const Stratification& s) {
    ConeFormulaReport report;
    report.link_ih = ih_betti(l, s, Perversity::middle()).dims;

    std::string apex = "apex";
    while (l.vertex_id(apex) >= 0) apex += "*";
    StratifiedComplex c = cone(l, s, apex);
    int cone_dim = l.dim() + 1;
    report.apex_codim = cone_dim;
    report.apex_perversity_value = (cone_dim - 1) / 2; // = ceil((codim-2)/2)

    // Perversity table: middle away from the apex, the cutoff-matching value
    // at the apex codimension.
    std::map<int, int> values;
    for (const auto& m : c.strat.members)
        values[m.codim] =
            (m.codim == cone_dim) ? report.apex_perversity_value : (m.codim - 2) / 2;
    Perversity q = Perversity::custom(values);

    Subcomplex base(c.complex, [&] {
        std::vector<Simplex> gens;
        for (int d = 0; d <= l.dim(); ++d)
            for (const auto& simp : l.simplices_of_dim(d)) {
                Simplex t;
                for (int v : simp) t.push_back(c.complex.require_vertex(l.vertex_name(v)));
                gens.push_back(t);
            }
        return gens;
    }());

    report.engine_side = ih_betti(c.complex, c.strat, q, base).dims;
    report.formula_side = cone_formula(report.link_ih, cone_dim);

    report.match = true;
    for (int d = 0; d <= cone_dim; ++d) {
        int lhs = report.engine_side.at(d);
        int rhs = report.formula_side.at(d);
        if (lhs != rhs) {
            report.match = false;
            report.diffs.push_back("degree " + std::to_string(d) + ": engine " +
                                   std::to_string(lhs) + " vs formula " + std::to_string(rhs));
        }
    }
    return report;
}

Chain translate_chain(const SimplicialComplex& from, const SimplicialComplex& to, const Chain& c) {
    Chain out;
    out.degree = c.degree;
    for (const auto& [s, v] : c.terms) {
        Simplex t;
        for (int w : s) t.push_back(to.require_vertex(from.vertex_name(w)));
        auto [norm, sign] = normalize_simplex(std::move(t));
        if (sign == 0) throw invariant_error("degenerate simplex under vertex translation");
        out.add(norm, sign > 0 ? v : -v);
    }
    return out;
}

bool is_subcomplex_of(const SimplicialComplex& x, const SimplicialComplex& y) {
    for (const auto& name : x.vertex_names())
        if (y.vertex_id(name) < 0) return false;
    for (int d = 0; d <= x.dim(); ++d)
        for (const auto& simp : x.simplices_of_dim(d)) {
            Simplex t;
            for (int v : simp) t.push_back(y.vertex_id(x.vertex_name(v)));
            std::sort(t.begin(), t.end());
            if (!y.contains(t)) return false;
        }
    return true;
}

RationalMatrix induced_ih_map(const StratifiedComplex& xsub, const StratifiedComplex& ysup,
                              const Perversity& p_src, const Perversity& p_tgt, int degree) {
    if (!is_subcomplex_of(xsub.complex, ysup.complex))
        throw precondition_error("the source is not a subcomplex of the target");

    IHTable src = ih_betti(xsub.complex, xsub.strat, p_src);
    IntersectionComplex tgt(ysup.complex, ysup.strat, p_tgt);
    HomologySpace h(tgt.matrices(), degree);

    int src_dim = (degree <= src.dims.top_degree()) ? src.dims.at(degree) : 0;
    RationalMatrix out(h.dim(), src_dim);
    for (int j = 0; j < src_dim; ++j) {
        Chain z = translate_chain(xsub.complex, ysup.complex, src.basis_cycles[degree][j]);
        if (auto bad = first_violation(z, p_tgt, ysup.strat))
            throw precondition_error("allowability transfer fails on simplex " +
                                     simplex_names(ysup.complex, *bad));
        auto qc = tgt.coords(z);
        if (!qc) throw invariant_error("transferred cycle escaped the intersection complex");
        auto hc = h.coords(to_sparse(*qc));
        if (!hc) throw invariant_error("transferred cycle is not a cycle in the target");
        for (int i = 0; i < h.dim(); ++i) out.set(i, j, (*hc)[i]);
    }
    return out;
}

LinkMapResult link_map(const StratifiedComplex& x, const StratifiedComplex& y,
                       const std::string& vertex_name, int degree, const Perversity& p) {
    int vx = x.complex.vertex_id(vertex_name);
    int vy = y.complex.vertex_id(vertex_name);
    if (vx < 0 || vy < 0) throw precondition_error("vertex '" + vertex_name + "' absent");
    if (!x.strat.vertex_is_singular(vx) || !y.strat.vertex_is_singular(vy))
        throw precondition_error("vertex '" + vertex_name + "' is not singular in both spaces");

    LinkMapResult out;
    out.link_x = link(x.complex, x.strat, vertex_name);
    out.link_y = link(y.complex, y.strat, vertex_name);
    if (!is_subcomplex_of(out.link_x.complex, out.link_y.complex))
        throw precondition_error("link of the subspace is not contained in the ambient link");
    out.matrix = induced_ih_map(out.link_x, out.link_y, p, p, degree);
    out.is_zero = out.matrix.is_zero();
    return out;
}

std::optional<Chain> lift_class(const SimplicialComplex& y, const Stratification& s,
                                const Chain& z) {
    if (!chain_supported_on(y, z)) throw precondition_error("cycle is not supported on the complex");
    Perversity log = Perversity::logarithmic();
    Perversity mid = Perversity::middle();
    if (!is_allowable(z, log, s))
        throw precondition_error("input cycle is not log-perversity allowable");
    if (!boundary(z).is_zero()) throw precondition_error("input chain is not a cycle");
    if (is_allowable(z, mid, s)) return z;

    int d = z.degree;
    IntersectionComplex log_complex(y, s, log);

    // Middle-allowable cycles of degree d (their boundaries vanish, so no
    // boundary-allowability constraint is needed).
    const auto& level = y.simplices_of_dim(d);
    std::vector<int> mid_cols;
    for (int i = 0; i < static_cast<int>(level.size()); ++i)
        if (simplex_allowable(level[i], d, mid, s)) mid_cols.push_back(i);
    RationalMatrix bd = y.boundary_matrix(d);
    RationalMatrix restricted(bd.rows, static_cast<int>(mid_cols.size()));
    for (int j = 0; j < static_cast<int>(mid_cols.size()); ++j)
        for (const auto& [r, v] : bd.column(mid_cols[j])) restricted.set(r, j, v);
    std::vector<SparseVec> mid_cycles;
    for (const SparseVec& k : kernel_basis(restricted)) {
        SparseVec full;
        for (const auto& [j, v] : k) full[mid_cols[j]] = v;
        mid_cycles.push_back(std::move(full));
    }

    // Combined system [log-boundaries | middle cycles] = z.
    int nb = (d + 1 <= log_complex.top_degree()) ? log_complex.dim_at(d + 1) : 0;
    std::vector<SparseVec> cols;
    for (int j = 0; j < nb; ++j) {
        std::vector<Rational> coords(nb, Rational(0));
        coords[j] = 1;
        Chain gen = log_complex.chain_of(d + 1, coords);
        cols.push_back(chain_to_sparse(y, boundary(gen)));
    }
    for (const auto& c : mid_cycles) cols.push_back(c);

    RationalMatrix system = RationalMatrix::from_columns(y.count_in_dim(d), cols);
    auto sol = solve(system, chain_to_vector(y, z));
    if (!sol) return std::nullopt;

    Chain lifted;
    lifted.degree = d;
    for (int j = 0; j < static_cast<int>(mid_cycles.size()); ++j) {
        Rational coeff = (*sol)[nb + j];
        if (coeff == 0) continue;
        for (const auto& [i, v] : mid_cycles[j]) lifted.add(level[i], v * coeff);
    }
    return lifted;
}

Chain fundamental_class(const SimplicialComplex& x, const Stratification& s) {
    if (x.empty()) throw precondition_error("fundamental class of the empty complex");
    if (!x.pure()) throw precondition_error("fundamental class requires a pure complex");
    int n = x.dim();
    const auto& tops = x.simplices_of_dim(n);
    const Subcomplex* sing = s.singular_set();

    // Adjacency through (n-1)-faces off the singular set; a pseudomanifold
    // has exactly two top cofaces at each such face.
    std::map<Simplex, std::vector<int>> coface;
    for (int t = 0; t < static_cast<int>(tops.size()); ++t) {
        const Simplex& simp = tops[t];
        for (std::size_t i = 0; i < simp.size(); ++i) {
            Simplex face;
            for (std::size_t k = 0; k < simp.size(); ++k)
                if (k != i) face.push_back(simp[k]);
            if (sing && sing->contains(face)) continue;
            coface[face].push_back(t);
        }
    }

    std::vector<int> sign(tops.size(), 0);
    for (int root = 0; root < static_cast<int>(tops.size()); ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int t = queue.front();
            queue.pop_front();
            const Simplex& simp = tops[t];
            int face_sign = 1;
            for (std::size_t i = 0; i < simp.size(); ++i) {
                Simplex face;
                for (std::size_t k = 0; k < simp.size(); ++k)
                    if (k != i) face.push_back(simp[k]);
                auto it = coface.find(face);
                if (it != coface.end() && it->second.size() == 2) {
                    int other = it->second[0] == t ? it->second[1] : it->second[0];
                    // The induced orientations on the shared face must cancel.
                    const Simplex& osimp = tops[other];
                    int pos = 0;
                    for (std::size_t k = 0; k < osimp.size(); ++k)
                        if (!std::binary_search(face.begin(), face.end(), osimp[k])) pos = static_cast<int>(k);
                    int other_face_sign = (pos % 2 == 0) ? 1 : -1;
                    int needed = -sign[t] * face_sign * other_face_sign;
                    if (sign[other] == 0) {
                        sign[other] = needed;
                        queue.push_back(other);
                    } else if (sign[other] != needed) {
                        throw precondition_error(
                            "not orientable along codimension-zero adjacencies");
                    }
                }
                face_sign = -face_sign;
            }
        }
    }

    Chain out;
    out.degree = n;
    for (int t = 0; t < static_cast<int>(tops.size()); ++t) out.add(tops[t], Rational(sign[t]));

    // Cycle condition away from the singular set.
    Chain bd = boundary(out);
    for (const auto& [face, v] : bd.terms) {
        if (sing && sing->contains(face)) continue;
        throw precondition_error("fundamental chain has boundary off the singular set at " +
                                 simplex_names(x, face));
    }
    return out;
}

std::vector<std::vector<Rational>> flag_classes(const FlagInput& flag) {
    if (flag.steps.empty()) throw precondition_error("empty flag");
    const StratifiedComplex& ambient = flag.steps[0];
    int n = ambient.complex.dim();

    for (std::size_t i = 0; i < flag.steps.size(); ++i) {
        const auto& step = flag.steps[i];
        if (step.complex.dim() != n - static_cast<int>(i))
            throw precondition_error("flag step " + std::to_string(i) +
                                     " does not have codimension " + std::to_string(i));
        if (i > 0) {
            const auto& prev = flag.steps[i - 1];
            if (!is_subcomplex_of(step.complex, prev.complex))
                throw precondition_error("flag step " + std::to_string(i) +
                                         " is not a subcomplex of its predecessor");
            // Some maximal simplex must avoid the predecessor's filtration.
            const Subcomplex* sing = prev.strat.singular_set();
            bool outside = sing == nullptr;
            if (!outside) {
                for (const auto& m : step.complex.maximal_simplices()) {
                    Simplex t;
                    for (int v : m)
                        t.push_back(prev.complex.require_vertex(step.complex.vertex_name(v)));
                    std::sort(t.begin(), t.end());
                    if (!sing->contains(t)) {
                        outside = true;
                        break;
                    }
                }
            }
            if (!outside)
                throw precondition_error("flag step " + std::to_string(i) +
                                         " lies inside the singular set of its predecessor");
        }
    }

    IntersectionComplex ambient_mid(ambient.complex, ambient.strat, Perversity::middle());

    std::vector<std::vector<Rational>> classes;
    for (std::size_t i = 0; i < flag.steps.size(); ++i) {
        Chain xi = fundamental_class(flag.steps[i].complex, flag.steps[i].strat);
        for (int j = static_cast<int>(i) - 1; j >= 0; --j) {
            const auto& target = flag.steps[j];
            xi = translate_chain(flag.steps[j + 1].complex, target.complex, xi);
            if (auto bad = first_violation(xi, Perversity::logarithmic(), target.strat))
                throw precondition_error("flag step " + std::to_string(j + 1) +
                                         ": representative not log-allowable at " +
                                         simplex_names(target.complex, *bad));
            auto lifted = lift_class(target.complex, target.strat, xi);
            if (!lifted)
                throw precondition_error("lift obstruction at flag step " + std::to_string(j + 1));
            xi = *lifted;
        }
        if (i == 0 && !is_allowable(xi, Perversity::middle(), ambient.strat)) {
            auto lifted = lift_class(ambient.complex, ambient.strat, xi);
            if (!lifted) throw precondition_error("lift obstruction at flag step 0");
            xi = *lifted;
        }
        HomologySpace h(ambient_mid.matrices(), xi.degree);
        auto qc = ambient_mid.coords(xi);
        if (!qc) throw invariant_error("flag class escaped the intersection complex");
        auto hc = h.coords(to_sparse(*qc));
        if (!hc) throw invariant_error("flag class is not a cycle");
        classes.push_back(*hc);
    }
    return classes;
}

} // namespace ih
