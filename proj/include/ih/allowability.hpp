#pragma once

#include <optional>

#include "ih/perversity.hpp"
#include "ih/stratification.hpp"

namespace ih {

// Dimension of the largest face of s lying in the member; absent when no
// face does (the empty intersection passes every bound).
std::optional<int> face_dim_in(const Subcomplex& member, const Simplex& s);

// Chain condition for one simplex in degree `degree`: for every filtration
// member of codim c, the face lying in it has dimension <= degree - c + p(c).
bool simplex_allowable(const Simplex& s, int degree, const Perversity& p,
                       const Stratification& strat);

// A chain is allowable iff every simplex of its support is.
bool is_allowable(const Chain& c, const Perversity& p, const Stratification& strat);

// First offending simplex of a non-allowable chain, for error reporting.
std::optional<Simplex> first_violation(const Chain& c, const Perversity& p,
                                       const Stratification& strat);

} // namespace ih
