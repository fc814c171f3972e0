#include "ih/stratification.hpp"

#include <algorithm>

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

Subcomplex::Subcomplex(const SimplicialComplex& ambient, const std::vector<Simplex>& simplices) {
    std::vector<Simplex> stack;
    for (const auto& s : simplices) {
        auto [norm, sign] = normalize_simplex(s);
        if (sign == 0) throw parse_error("subcomplex simplex with repeated vertex");
        if (!ambient.contains(norm))
            throw parse_error("subcomplex simplex is not in the ambient complex");
        stack.push_back(std::move(norm));
    }
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (!simplices_.insert(s).second) continue;
        if (s.size() > 1) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face.push_back(s[j]);
                stack.push_back(std::move(face));
            }
        }
    }
}

int Subcomplex::dim() const {
    int d = -1;
    for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

bool Subcomplex::subset_of(const Subcomplex& other) const {
    return std::includes(other.simplices_.begin(), other.simplices_.end(), simplices_.begin(),
                         simplices_.end());
}

bool Stratification::vertex_is_singular(int v) const {
    const Subcomplex* sing = singular_set();
    return sing && sing->contains_vertex(v);
}

void Stratification::check_structure() const {
    for (std::size_t j = 0; j < members.size(); ++j) {
        if (members[j].codim < 2)
            throw invariant_error("filtration member with codimension < 2");
        if (j > 0) {
            if (members[j].codim <= members[j - 1].codim)
                throw invariant_error("filtration codimensions must be strictly increasing");
            if (!members[j].part.subset_of(members[j - 1].part))
                throw invariant_error("filtration members must be nested");
        }
    }
}

ValidationReport validate(const SimplicialComplex& x, const Stratification& s) {
    ValidationReport report;
    auto fault = [&](std::string code, std::string msg) {
        report.items.push_back({ValidationItem::Severity::Fault, std::move(code), std::move(msg)});
    };
    auto hint = [&](std::string code, std::string msg) {
        report.items.push_back({ValidationItem::Severity::Hint, std::move(code), std::move(msg)});
    };

    if (x.empty()) return report;
    int n = x.dim();

    if (!x.pure()) {
        for (const auto& m : x.maximal_simplices())
            if (static_cast<int>(m.size()) - 1 != n)
                fault("purity", "maximal simplex " + simplex_names(x, m) + " has dimension " +
                                    std::to_string(static_cast<int>(m.size()) - 1) +
                                    " < complex dimension " + std::to_string(n));
    }

    for (const auto& m : s.members) {
        if (m.codim < 2)
            fault("codim2", "filtration member declared at codim " + std::to_string(m.codim) +
                                "; the singular set must have codimension >= 2");
        // Declared codimensions are taken at face value (they drive
        // allowability); a mismatch with the simplicial dimension gap is
        // worth flagging but not fatal.
        int actual = m.part.dim();
        if (actual > n - m.codim)
            hint("codim-declared", "filtration member of declared codim " + std::to_string(m.codim) +
                                       " has dimension " + std::to_string(actual) + " > " +
                                       std::to_string(n - m.codim) +
                                       "; declared values are used as given");
    }

    // Pseudomanifold condition: every (n-1)-simplex off the singular set
    // lies in exactly two n-simplices.
    const Subcomplex* sing = s.singular_set();
    for (const auto& f : x.simplices_of_dim(n - 1)) {
        if (sing && sing->contains(f)) continue;
        int cofaces = 0;
        for (const auto& t : x.simplices_of_dim(n))
            if (std::includes(t.begin(), t.end(), f.begin(), f.end())) ++cofaces;
        if (cofaces != 2)
            fault("pseudomanifold", "face " + simplex_names(x, f) + " lies in " +
                                        std::to_string(cofaces) + " top simplices (want 2)");
    }

    // Fullness hint: chain-level results match the sheaf picture on full
    // triangulations; one barycentric subdivision restores fullness.
    for (const auto& m : s.members) {
        bool full = true;
        for (int d = 1; d <= n && full; ++d) {
            for (const auto& simp : x.simplices_of_dim(d)) {
                Simplex inside;
                for (int v : simp)
                    if (m.part.contains_vertex(v)) inside.push_back(v);
                if (inside.size() >= 2 && !m.part.contains(inside)) {
                    full = false;
                    break;
                }
            }
        }
        if (!full)
            hint("fullness", "filtration member of codim " + std::to_string(m.codim) +
                                 " is not a full subcomplex; apply one barycentric subdivision "
                                 "before trusting chain-level results");
    }

    return report;
}

} // namespace ih
