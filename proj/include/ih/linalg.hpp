#pragma once

#include <optional>
#include <vector>

#include "ih/matrix.hpp"

namespace ih {

/**
 * Reduced row echelon form of [A | B], with pivots restricted to the
 * columns of A.  The RREF of a matrix is unique, so results do not depend
 * on the internal pivot-row choices; that uniqueness is what makes every
 * basis produced by this module reproducible.
 */
struct RrefSystem {
    using Row = std::vector<std::pair<int, Rational>>; // sorted by column

    int acols = 0;
    int bcols = 0;
    std::vector<Row> rows;        // reduced nonzero rows, ordered by pivot column
    std::vector<int> pivot_cols;  // ascending, all < acols

    int rank() const { return static_cast<int>(pivot_cols.size()); }

    // Entry lookup in the reduced rows (0 when absent).
    Rational entry(int row, int col) const;

    // True if the b-th appended column is consistent (no pivotless residue).
    bool consistent(int b) const;

    // The pivot-minimal solution of A x = B[:, b]; free variables are zero.
    std::optional<std::vector<Rational>> solution(int b) const;
};

RrefSystem eliminate(const RationalMatrix& a, const RationalMatrix* b = nullptr);

// Rank over the rationals, computed exactly.
int rank(const RationalMatrix& m);

// Canonical basis of the null space (one vector per free column of the RREF,
// unit coefficient on the free column).  size = cols - rank.
std::vector<SparseVec> kernel_basis(const RationalMatrix& m);

// Some x with m x = b when b lies in the column space; absent otherwise.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

// Column-wise simultaneous solve: X with m X = b, absent if any column fails.
std::optional<RationalMatrix> solve_many(const RationalMatrix& m, const RationalMatrix& b);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/**
 * Incremental column-span tracker: add vectors one at a time and learn
 * whether each enlarges the span.  Used for the greedy (and therefore
 * deterministic) choice of complements and homology representatives.
 */
class IncrementalSpan {
  public:
    // Returns true if v was independent of the current span (and absorbs it).
    bool add(const SparseVec& v);
    int rank() const { return static_cast<int>(echelon_.size()); }
    // Whether v lies in the current span (without absorbing it).
    bool contains(const SparseVec& v) const;

  private:
    std::vector<RrefSystem::Row> echelon_; // forward-eliminated, by leading col
    RrefSystem::Row reduce(const SparseVec& v) const;
};

} // namespace ih
