#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ih/rational.hpp"

namespace ih {

// Sparse vector: index -> nonzero value.
using SparseVec = std::map<int, Rational>;

/**
 * Sparse matrix with exact rational entries.
 *
 * Invariants: no stored entry is zero, all indices lie within the declared
 * bounds.  Entry iteration order is row-major and deterministic.
 */
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, Rational> entries;

    RationalMatrix() = default;
    RationalMatrix(int r, int c);

    static RationalMatrix identity(int n);
    static RationalMatrix zero(int r, int c) { return RationalMatrix(r, c); }
    // Columns of the result are the given sparse vectors (length = rows).
    static RationalMatrix from_columns(int rows, const std::vector<SparseVec>& columns);

    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;
    bool is_zero() const { return entries.empty(); }

    SparseVec column(int c) const;
    SparseVec row(int r) const;

    RationalMatrix operator*(const RationalMatrix& other) const;
    bool operator==(const RationalMatrix& other) const = default;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    SparseVec apply(const SparseVec& x) const;
};

std::vector<Rational> to_dense(const SparseVec& v, int n);
SparseVec to_sparse(const std::vector<Rational>& v);

} // namespace ih
