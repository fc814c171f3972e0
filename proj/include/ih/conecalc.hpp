#pragma once

#include <string>
#include <vector>

#include "ih/chain_complex.hpp"

namespace ih {

/**
 * Graded dimensions with the degree-lowering operator given by capping with
 * the hyperplane class.  lambda[i] maps degree i to degree i-2; indices
 * outside the stored range act as zero maps of the forced shapes.
 */
struct LefschetzData {
    GradedVectorSpace dims;
    std::vector<RationalMatrix> lambda;

    void check_shapes() const;
    RationalMatrix lambda_between(int source_degree) const;
    // Whether lambda: source -> source-2 is an isomorphism.
    bool lambda_iso(int source_degree) const;
};

/// A degree-preserving morphism between two Lefschetz packages.
struct PairMorphismData {
    LefschetzData x; // the smaller space, one complex dimension down
    LefschetzData y;
    std::vector<RationalMatrix> alpha; // alpha[i]: x_i -> y_i

    void check_shapes() const;
    RationalMatrix alpha_at(int degree) const;
};

/// Degree-tagged polar class vectors with the hyperplane cap action.
struct PolarData {
    int n = 0;                                // complex dimension
    GradedVectorSpace dims;                   // homology, degrees 0..2n
    std::vector<std::vector<Rational>> classes; // classes[j] in degree 2(n-j)
    std::vector<RationalMatrix> h_action;     // per source degree, lowers by 2

    void check_shapes() const;
    RationalMatrix h_between(int source_degree) const;
};

// The cone identity: output[i] = ih_l[i-1] above half the cone dimension,
// zero at or below it.  cone_dim must equal the length of ih_l's range.
GradedVectorSpace cone_formula(const GradedVectorSpace& ih_l, int cone_dim);

/// Output of the projective-cone table evaluation.
struct ConeTableResult {
    GradedVectorSpace kx; // degrees 0..2n
    GradedVectorSpace ky; // degrees 0..2n+2
    std::vector<RationalMatrix> maps; // per degree 0..2n+2
    std::vector<std::string> kind_x;  // "base" / "cone" / "zero" per row
    std::vector<std::string> kind_y;
};

/**
 * Intersection homology of the projective cones over a pair and the induced
 * map, evaluated from the table: base rows copy the input, the middle rows
 * pass through the image of the hyperplane operator, cone rows shift by
 * two.  Requires the hyperplane operators x_n -> x_{n-2} and
 * y_{n+1} -> y_{n-1} to be isomorphisms.
 */
ConeTableResult projective_cone_table(const PairMorphismData& d, int n);

/// Homology of the circle-bundle total space with its structural maps.
struct GysinLinkResult {
    GradedVectorSpace link_dims;
    std::vector<RationalMatrix> p_pull; // base_{k-1} -> link_k (cokernel part)
    std::vector<RationalMatrix> p_push; // link_k -> base_k  (kernel part)
};

/**
 * link_k = coker(lambda: b_{k+1} -> b_{k-1}) + ker(lambda: b_k -> b_{k-2}),
 * with the splitting chosen by echelon pivots so maps are reproducible.
 */
GysinLinkResult gysin_link(const LefschetzData& base);

struct ChaseResult {
    RationalMatrix matrix; // the induced middle-degree link map (zero)
    bool zero = false;
    std::vector<std::string> certificate;
};

/**
 * The vanishing chase: under Hard Lefschetz at x_k -> x_{k-2} and
 * y_{k+1} -> y_{k-1}, the pushforward on the small link and the pullback on
 * the big link vanish, the small pullback is surjective, and the induced
 * middle-degree link map is forced to be zero.  Each step is certified.
 */
ChaseResult link_map_chase(const PairMorphismData& d, int k);

struct HardLefschetzVerdict {
    bool weak_lefschetz_ok = false; // i_{n-1} surjective
    bool palindromic_ok = false;
    bool link_map_zero = false;     // input hypothesis
    bool concluded = false;         // all preconditions in place
    bool lambda_surjective = false; // verified on the data
    bool lambda_iso = false;
    int lambda_rank = 0;
    int target_dim = 0;
    std::vector<std::string> certificate;
};

/**
 * Derives the hyperplane-operator isomorphism y_{n+1} -> y_{n-1} from
 * link-map vanishing, weak Lefschetz surjectivity and palindromic
 * dimensions, and checks the derived rank on the given data.  Higher powers
 * are reported as a standard step, not re-derived.
 */
HardLefschetzVerdict hard_lefschetz_from_links(const LefschetzData& x, const LefschetzData& y,
                                               const std::vector<RationalMatrix>& i_star,
                                               bool link_middle_map_is_zero, int n);

/**
 * c_i = sum_j binom(n+1-j, i-j) (-1)^j h^{i-j} cap [X^j], evaluated exactly;
 * the result lives in degree 2(n-i).
 */
std::vector<std::vector<Rational>> chern_mather_lift(const PolarData& p);

} // namespace ih
