#include "ih/constructions.hpp"

#include <algorithm>

#include "ih/errors.hpp"

namespace ih {

namespace {

// Members of s coned to the new apex id inside the cone complex.
std::vector<Stratification::Member> cone_members(const SimplicialComplex& cx,
                                                 const Stratification& s, int apex) {
    std::vector<Stratification::Member> out;
    for (const auto& m : s.members) {
        std::vector<Simplex> gens;
        for (const auto& simp : m.part.simplices()) {
            gens.push_back(simp);
            Simplex joined = simp;
            joined.push_back(apex);
            gens.push_back(normalize_simplex(std::move(joined)).first);
        }
        gens.push_back({apex});
        out.push_back({m.codim, Subcomplex(cx, gens)});
    }
    return out;
}

} // namespace

StratifiedComplex cone(const SimplicialComplex& x, const Stratification& s,
                       const std::string& apex_name) {
    if (x.empty()) throw precondition_error("cone of the empty complex");
    if (x.vertex_id(apex_name) >= 0)
        throw precondition_error("apex name '" + apex_name + "' collides with an existing vertex");
    int apex_codim = x.dim() + 1;
    if (apex_codim < 2)
        throw precondition_error("cone apex would have codimension " + std::to_string(apex_codim) +
                                 " < 2");

    std::vector<std::string> names = x.vertex_names();
    int apex = static_cast<int>(names.size());
    names.push_back(apex_name);

    std::vector<Simplex> simplices;
    for (int d = 0; d <= x.dim(); ++d) {
        for (const auto& simp : x.simplices_of_dim(d)) {
            simplices.push_back(simp);
            Simplex joined = simp;
            joined.push_back(apex);
            simplices.push_back(joined); // apex id is largest, already sorted
        }
    }
    simplices.push_back({apex});

    StratifiedComplex out;
    out.complex = SimplicialComplex(std::move(names), simplices);
    out.strat.members = cone_members(out.complex, s, apex);
    out.strat.members.push_back({apex_codim, Subcomplex(out.complex, {{apex}})});
    out.strat.check_structure();
    return out;
}

StratifiedComplex suspension(const SimplicialComplex& x, const Stratification& s,
                             const std::string& north_name, const std::string& south_name) {
    if (x.empty()) throw precondition_error("suspension of the empty complex");
    if (north_name == south_name) throw precondition_error("suspension apexes must differ");
    for (const auto& n : {north_name, south_name})
        if (x.vertex_id(n) >= 0)
            throw precondition_error("apex name '" + n + "' collides with an existing vertex");

    std::vector<std::string> names = x.vertex_names();
    int north = static_cast<int>(names.size());
    int south = north + 1;
    names.push_back(north_name);
    names.push_back(south_name);

    std::vector<Simplex> simplices;
    for (int d = 0; d <= x.dim(); ++d) {
        for (const auto& simp : x.simplices_of_dim(d)) {
            simplices.push_back(simp);
            Simplex up = simp, down = simp;
            up.push_back(north);
            down.push_back(south);
            simplices.push_back(up);
            simplices.push_back(down);
        }
    }
    simplices.push_back({north});
    simplices.push_back({south});

    StratifiedComplex out;
    out.complex = SimplicialComplex(std::move(names), simplices);

    for (const auto& m : s.members) {
        std::vector<Simplex> gens;
        for (const auto& simp : m.part.simplices()) {
            gens.push_back(simp);
            Simplex up = simp, down = simp;
            up.push_back(north);
            down.push_back(south);
            gens.push_back(up);
            gens.push_back(down);
        }
        out.strat.members.push_back({m.codim, Subcomplex(out.complex, gens)});
    }
    int apex_codim = x.dim() + 1;
    if (apex_codim >= 2)
        out.strat.members.push_back({apex_codim, Subcomplex(out.complex, {{north}, {south}})});
    out.strat.check_structure();
    return out;
}

StratifiedComplex link(const SimplicialComplex& x, const Stratification& s,
                       const std::string& vertex_name) {
    int v = x.require_vertex(vertex_name);

    // Simplices of the link: s with v removed, for every s containing v.
    std::set<Simplex> link_simplices;
    std::set<int> used;
    for (int d = 1; d <= x.dim(); ++d) {
        for (const auto& simp : x.simplices_of_dim(d)) {
            if (!std::binary_search(simp.begin(), simp.end(), v)) continue;
            Simplex rest;
            for (int w : simp)
                if (w != v) rest.push_back(w);
            link_simplices.insert(rest);
            for (int w : rest) used.insert(w);
        }
    }

    std::vector<std::string> names;
    std::map<int, int> remap;
    for (int w : used) {
        remap[w] = static_cast<int>(names.size());
        names.push_back(x.vertex_name(w));
    }
    std::vector<Simplex> remapped;
    for (const auto& simp : link_simplices) {
        Simplex t;
        for (int w : simp) t.push_back(remap[w]);
        remapped.push_back(t);
    }

    StratifiedComplex out;
    out.complex = SimplicialComplex(std::move(names), remapped);

    for (const auto& m : s.members) {
        std::vector<Simplex> gens;
        for (const auto& simp : link_simplices) {
            if (!m.part.contains(simp)) continue;
            Simplex t;
            for (int w : simp) t.push_back(remap[w]);
            gens.push_back(t);
        }
        if (!gens.empty()) out.strat.members.push_back({m.codim, Subcomplex(out.complex, gens)});
    }
    out.strat.check_structure();
    return out;
}

namespace {

std::string barycenter_name(const SimplicialComplex& x, const Simplex& s) {
    std::string name;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) name += ".";
        name += x.vertex_name(s[i]);
    }
    return name;
}

// Depth-first enumeration of proper-inclusion chains starting at `current`;
// a chain may skip dimensions.
void extend_chains(const SimplicialComplex& x, const std::map<Simplex, int>& ids,
                   std::vector<int>& current, const Simplex& top,
                   std::vector<Simplex>& out) {
    out.push_back(Simplex(current.begin(), current.end()));
    for (int d = static_cast<int>(top.size()); d <= x.dim(); ++d) {
        for (const auto& next : x.simplices_of_dim(d)) {
            if (!std::includes(next.begin(), next.end(), top.begin(), top.end())) continue;
            current.push_back(ids.at(next));
            extend_chains(x, ids, current, next, out);
            current.pop_back();
        }
    }
}

} // namespace

StratifiedComplex barycentric_subdivide(const SimplicialComplex& x, const Stratification& s) {
    std::vector<std::string> names;
    std::map<Simplex, int> ids;
    for (int d = 0; d <= x.dim(); ++d) {
        for (const auto& simp : x.simplices_of_dim(d)) {
            ids[simp] = static_cast<int>(names.size());
            names.push_back(barycenter_name(x, simp));
        }
    }

    // Chains of proper inclusions; ids grow along a chain because faces get
    // smaller ids than cofaces, so each chain is already sorted.
    std::vector<Simplex> chains;
    for (int d = 0; d <= x.dim(); ++d) {
        for (const auto& simp : x.simplices_of_dim(d)) {
            std::vector<int> current{ids.at(simp)};
            extend_chains(x, ids, current, simp, chains);
        }
    }

    StratifiedComplex out;
    out.complex = SimplicialComplex(std::move(names), chains);

    std::vector<Simplex> simplex_by_id(ids.size());
    for (const auto& [simp, id] : ids) simplex_by_id[id] = simp;

    for (const auto& m : s.members) {
        std::vector<Simplex> gens;
        for (const auto& chain : chains) {
            bool inside = true;
            for (int id : chain)
                if (!m.part.contains(simplex_by_id[id])) {
                    inside = false;
                    break;
                }
            if (inside) gens.push_back(chain);
        }
        if (!gens.empty()) out.strat.members.push_back({m.codim, Subcomplex(out.complex, gens)});
    }
    out.strat.check_structure();
    return out;
}

namespace {

Chain subdivide_simplex(const SimplicialComplex& x, const SimplicialComplex& sd, const Simplex& s,
                        std::map<Simplex, Chain>& memo) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    int barycenter = sd.require_vertex(barycenter_name(x, s));
    Chain out;
    if (s.size() == 1) {
        out.degree = 0;
        out.add({barycenter}, 1);
    } else {
        Chain boundary_sd;
        boundary_sd.degree = static_cast<int>(s.size()) - 2;
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != i) face.push_back(s[k]);
            Chain piece = subdivide_simplex(x, sd, face, memo);
            for (const auto& [t, v] : piece.terms) boundary_sd.add(t, v * sign);
            sign = -sign;
        }
        out = cone_chain(barycenter, boundary_sd);
    }
    memo.emplace(s, out);
    return out;
}

} // namespace

Chain subdivide_chain(const SimplicialComplex& x, const SimplicialComplex& sd, const Chain& c) {
    std::map<Simplex, Chain> memo;
    Chain out;
    out.degree = c.degree;
    for (const auto& [s, v] : c.terms) {
        Chain piece = subdivide_simplex(x, sd, s, memo);
        for (const auto& [t, coeff] : piece.terms) out.add(t, coeff * v);
    }
    return out;
}

Subcomplex subdivide_subcomplex(const SimplicialComplex& x, const SimplicialComplex& sd,
                                const Subcomplex& part) {
    std::vector<Simplex> gens;
    std::map<int, bool> vertex_inside;
    for (int id = 0; id < sd.vertex_count(); ++id) {
        // Vertex names of sd are dot-joined vertex names of x.
        const std::string& nm = sd.vertex_name(id);
        Simplex simp;
        std::size_t start = 0;
        bool ok = true;
        while (start <= nm.size()) {
            std::size_t dot = nm.find('.', start);
            std::string piece = nm.substr(start, dot == std::string::npos ? dot : dot - start);
            int v = x.vertex_id(piece);
            if (v < 0) {
                ok = false;
                break;
            }
            simp.push_back(v);
            if (dot == std::string::npos) break;
            start = dot + 1;
        }
        std::sort(simp.begin(), simp.end());
        vertex_inside[id] = ok && part.contains(simp);
    }
    for (int d = 0; d <= sd.dim(); ++d) {
        for (const auto& chain : sd.simplices_of_dim(d)) {
            bool inside = true;
            for (int id : chain) inside = inside && vertex_inside[id];
            if (inside) gens.push_back(chain);
        }
    }
    return Subcomplex(sd, gens);
}

} // namespace ih
