#pragma once

#include <optional>
#include <vector>

#include "ih/linalg.hpp"
#include "ih/matrix.hpp"

namespace ih {

/// Dimensions of a graded vector space, indexed by homological degree from 0.
struct GradedVectorSpace {
    std::vector<int> dims;

    GradedVectorSpace() = default;
    explicit GradedVectorSpace(std::vector<int> d) : dims(std::move(d)) {}

    int at(int degree) const {
        return (degree >= 0 && degree < static_cast<int>(dims.size())) ? dims[degree] : 0;
    }
    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    int total() const;
    bool palindromic() const;
    bool operator==(const GradedVectorSpace&) const = default;
};

/**
 * A chain complex presented by its boundary matrices.  boundary[d] maps
 * degree d to degree d-1; boundary[0] has zero rows and records the number
 * of degree-0 generators in its column count.
 */
struct ChainComplexMatrices {
    std::vector<RationalMatrix> boundary;

    int top_degree() const { return static_cast<int>(boundary.size()) - 1; }
    int dim_at(int degree) const {
        return (degree >= 0 && degree <= top_degree()) ? boundary[degree].cols : 0;
    }
    const RationalMatrix* boundary_at(int degree) const {
        return (degree >= 1 && degree <= top_degree()) ? &boundary[degree] : nullptr;
    }

    // Shape consistency; throws invariant_error when violated.
    void check_shapes() const;
    // Whether every consecutive product of boundaries vanishes.
    bool boundaries_square_to_zero() const;
};

// Betti numbers: dims[d] = dim ker boundary[d] - rank boundary[d+1].
// Rejects complexes whose boundaries do not square to zero.
GradedVectorSpace homology_dims(const ChainComplexMatrices& c);

/**
 * Deterministic homology basis in a single degree.
 *
 * Cycle vectors come from the canonical RREF kernel basis; representatives
 * are the kernel vectors that enlarge the span of the boundary image, taken
 * greedily in kernel order.  Coordinates of a cycle with respect to this
 * basis are read off a pivot-minimal solve, so repeated runs agree exactly.
 */
class HomologySpace {
  public:
    HomologySpace(const ChainComplexMatrices& c, int degree);

    int degree() const { return degree_; }
    int dim() const { return static_cast<int>(representatives_.size()); }
    int chain_dim() const { return chain_dim_; }
    const std::vector<SparseVec>& representatives() const { return representatives_; }

    // Homology coordinates of a cycle (length = dim()); absent when the
    // vector is not a cycle of the complex.
    std::optional<std::vector<Rational>> coords(const SparseVec& cycle) const;
    // Column-wise variant; absent if any column fails.
    std::optional<RationalMatrix> coords_many(const RationalMatrix& cycles) const;

  private:
    int degree_ = 0;
    int chain_dim_ = 0;
    int span_cols_ = 0; // columns of solver_ that present the boundary image
    std::vector<SparseVec> representatives_;
    RationalMatrix solver_; // [independent boundary columns | representatives]
};

/**
 * Matrix of the map induced on degree-d homology by a chain map, with
 * respect to the deterministic bases of HomologySpace.  The chain map is
 * required to commute with the boundaries.
 */
RationalMatrix induced_map_on_homology(const ChainComplexMatrices& src,
                                       const ChainComplexMatrices& tgt,
                                       const std::vector<RationalMatrix>& chain_map,
                                       int degree);

} // namespace ih
