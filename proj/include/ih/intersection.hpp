#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ih/allowability.hpp"
#include "ih/chain_complex.hpp"
#include "ih/constructions.hpp"

namespace ih {

/**
 * The complex of chains that are allowable with allowable boundary, in
 * deterministic bases.  In the relative variant, chains supported in `rel`
 * are quotiented out; basis chains are then coset representatives.
 */
class IntersectionComplex {
  public:
    IntersectionComplex(const SimplicialComplex& x, const Stratification& s, const Perversity& p,
                        const std::optional<Subcomplex>& rel = std::nullopt);

    const ChainComplexMatrices& matrices() const { return matrices_; }
    int top_degree() const { return matrices_.top_degree(); }
    int dim_at(int degree) const { return matrices_.dim_at(degree); }
    const SimplicialComplex& space() const { return x_; }

    Chain basis_chain(int degree, int i) const;
    // Coordinates of an allowable chain in the degree-d basis, modulo the
    // relative subspace; absent when the chain is not an intersection chain.
    std::optional<std::vector<Rational>> coords(const Chain& z) const;
    // Chain represented by a coordinate vector in the degree-d basis.
    Chain chain_of(int degree, const std::vector<Rational>& coords) const;

  private:
    SimplicialComplex x_;
    ChainComplexMatrices matrices_;
    // Per degree: basis vectors in full simplex coordinates.
    std::vector<std::vector<SparseVec>> basis_;
    // Per degree: [relative-part basis | quotient representatives].
    std::vector<RationalMatrix> coord_solver_;
    std::vector<int> rel_cols_;
};

[[nodiscard]] ChainComplexMatrices intersection_chain_complex(
    const SimplicialComplex& x, const Stratification& s, const Perversity& p,
    const std::optional<Subcomplex>& rel = std::nullopt);

/// Graded Betti data of an intersection chain complex with basis cycles.
struct IHTable {
    Perversity perversity = Perversity::middle();
    GradedVectorSpace dims;
    std::vector<std::vector<Chain>> basis_cycles; // per degree
};

IHTable ih_betti(const SimplicialComplex& x, const Stratification& s, const Perversity& p,
                 const std::optional<Subcomplex>& rel = std::nullopt);

/**
 * Checks the cone identity: closed-support intersection homology of the
 * open cone, realized as relative IH of (cone(l), l), must equal the link's
 * IH shifted above half the cone dimension and vanish at or below it.
 *
 * The apex codimension's perversity value is pinned by the half-dimension
 * cutoff to ceil((codim-2)/2); on even codimensions this is the middle
 * perversity.  The report carries both sides degree by degree.
 */
struct ConeFormulaReport {
    GradedVectorSpace link_ih;      // middle IH of the link l
    GradedVectorSpace formula_side; // shifted-and-truncated link IH
    GradedVectorSpace engine_side;  // relative IH of (cone l, l)
    int apex_codim = 0;
    int apex_perversity_value = 0;
    bool match = false;
    std::vector<std::string> diffs;
};

ConeFormulaReport verify_cone_formula(const SimplicialComplex& l, const Stratification& s);

// Chain of x re-expressed over y's vertex ids (matched by name).
Chain translate_chain(const SimplicialComplex& from, const SimplicialComplex& to, const Chain& c);
// Whether every simplex of x occurs in y under the name translation.
bool is_subcomplex_of(const SimplicialComplex& x, const SimplicialComplex& y);

/**
 * Matrix of IH^{p_src}_d(x) -> IH^{p_tgt}_d(y) for a subcomplex inclusion,
 * in the deterministic bases.  Degree is preserved.  Fails when some basis
 * cycle of x is not p_tgt-allowable in y, naming the offending simplex.
 */
RationalMatrix induced_ih_map(const StratifiedComplex& xsub, const StratifiedComplex& ysup,
                              const Perversity& p_src, const Perversity& p_tgt, int degree);

/// Induced map on the links of a singular vertex, plus its vanishing verdict.
struct LinkMapResult {
    RationalMatrix matrix;
    bool is_zero = false;
    StratifiedComplex link_x;
    StratifiedComplex link_y;
};

LinkMapResult link_map(const StratifiedComplex& x, const StratifiedComplex& y,
                       const std::string& vertex_name, int degree, const Perversity& p);

/**
 * Decides whether the class of a log-perversity cycle lies in the image of
 * middle-perversity IH, returning a middle-allowable representative of the
 * same class when one exists.  One linear solve over the combined
 * boundary-plus-generator matrix.
 */
std::optional<Chain> lift_class(const SimplicialComplex& y, const Stratification& s,
                                const Chain& z);

/**
 * Sum of compatibly oriented top simplices.  Orientations propagate over a
 * spanning tree of the codimension-zero adjacency graph (adjacency through
 * faces off the singular set), rooted at the lexicographically smallest top
 * simplex of each component.
 */
Chain fundamental_class(const SimplicialComplex& x, const Stratification& s);

/// Descending flag of stratified complexes; step i has codimension i.
struct FlagInput {
    std::vector<StratifiedComplex> steps;
};

/**
 * For each flag step: the fundamental class pushed forward and lifted step
 * by step into middle-perversity IH of the ambient space, as coordinates in
 * the deterministic IH basis.  Lift failure names the obstructed step.
 */
std::vector<std::vector<Rational>> flag_classes(const FlagInput& flag);

} // namespace ih
