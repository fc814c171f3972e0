#include "ih/allowability.hpp"

namespace ih {

std::optional<int> face_dim_in(const Subcomplex& member, const Simplex& s) {
    Simplex inside;
    for (int v : s)
        if (member.contains_vertex(v)) inside.push_back(v);
    if (inside.empty()) return std::nullopt;
    if (member.contains(inside)) return static_cast<int>(inside.size()) - 1;
    // The member need not be full: fall back to the largest sub-face present.
    int best = -1;
    int m = static_cast<int>(inside.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        Simplex face;
        for (int b = 0; b < m; ++b)
            if (mask & (1u << b)) face.push_back(inside[b]);
        if (static_cast<int>(face.size()) - 1 <= best) continue;
        if (member.contains(face)) best = static_cast<int>(face.size()) - 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool simplex_allowable(const Simplex& s, int degree, const Perversity& p,
                       const Stratification& strat) {
    for (const auto& m : strat.members) {
        auto fd = face_dim_in(m.part, s);
        if (!fd) continue;
        if (*fd > degree - m.codim + p(m.codim)) return false;
    }
    return true;
}

bool is_allowable(const Chain& c, const Perversity& p, const Stratification& strat) {
    return !first_violation(c, p, strat).has_value();
}

std::optional<Simplex> first_violation(const Chain& c, const Perversity& p,
                                       const Stratification& strat) {
    for (const auto& [s, coeff] : c.terms)
        if (!simplex_allowable(s, c.degree, p, strat)) return s;
    return std::nullopt;
}

} // namespace ih
