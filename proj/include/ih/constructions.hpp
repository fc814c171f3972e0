#pragma once

#include <string>

#include "ih/stratification.hpp"

namespace ih {

/// A complex together with its declared filtration.
struct StratifiedComplex {
    SimplicialComplex complex;
    Stratification strat;
};

/**
 * Cone with a fresh apex joined to every simplex.  Filtration members are
 * coned as well, and the apex becomes the deepest member with codimension
 * dim(x) + 1.  Rejects apexes of codimension < 2 and name collisions.
 */
StratifiedComplex cone(const SimplicialComplex& x, const Stratification& s,
                       const std::string& apex_name);

/**
 * Two cones glued along x.  For dim(x) >= 1 the pair of apexes forms the
 * deepest filtration member (codimension dim(x) + 1); the suspension of a
 * 0-dimensional complex is a manifold and gets no apex member.
 */
StratifiedComplex suspension(const SimplicialComplex& x, const Stratification& s,
                             const std::string& north_name = "north",
                             const std::string& south_name = "south");

/**
 * Simplicial link of a vertex, with the filtration inherited by
 * intersection (declared codimensions are kept; empty members are dropped).
 * Vertex ids are remapped; names survive.
 */
StratifiedComplex link(const SimplicialComplex& x, const Stratification& s,
                       const std::string& vertex_name);

/**
 * Barycentric subdivision.  The vertices of the result are the simplices of
 * the input (named by joining vertex names with '.'), its simplices the
 * chains of proper inclusions, and each filtration member subdivides to the
 * chains lying inside it.
 */
StratifiedComplex barycentric_subdivide(const SimplicialComplex& x, const Stratification& s);

// Carries a subcomplex of x through barycentric_subdivide(x).
Subcomplex subdivide_subcomplex(const SimplicialComplex& x, const SimplicialComplex& sd,
                                const Subcomplex& part);

// The subdivision chain map: each simplex becomes the cone from its
// barycenter over the subdivision of its boundary.  Commutes with boundary.
Chain subdivide_chain(const SimplicialComplex& x, const SimplicialComplex& sd, const Chain& c);

} // namespace ih
