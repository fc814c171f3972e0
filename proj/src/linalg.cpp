#include "ih/linalg.hpp"

#include <algorithm>
#include <list>

#include "ih/errors.hpp"

namespace ih {

namespace {

using Row = RrefSystem::Row;

// target += coeff * source, merging sorted rows.
Row axpy(const Row& target, const Rational& coeff, const Row& source) {
    Row out;
    out.reserve(target.size() + source.size());
    auto t = target.begin();
    auto s = source.begin();
    while (t != target.end() || s != source.end()) {
        if (s == source.end() || (t != target.end() && t->first < s->first)) {
            out.push_back(*t++);
        } else if (t == target.end() || s->first < t->first) {
            out.emplace_back(s->first, coeff * s->second);
            ++s;
        } else {
            Rational v = t->second + coeff * s->second;
            if (v != 0) out.emplace_back(t->first, std::move(v));
            ++t;
            ++s;
        }
    }
    return out;
}

Rational row_entry(const Row& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    return (it != row.end() && it->first == col) ? it->second : Rational(0);
}

std::vector<Row> matrix_rows(const RationalMatrix& a, const RationalMatrix* b, int& total_rows) {
    total_rows = a.rows;
    if (b && b->rows != a.rows) throw invariant_error("eliminate: row count mismatch");
    std::vector<Row> rows(a.rows);
    for (const auto& [rc, v] : a.entries) rows[rc.first].emplace_back(rc.second, v);
    if (b)
        for (const auto& [rc, v] : b->entries) rows[rc.first].emplace_back(a.cols + rc.second, v);
    return rows;
}

} // namespace

Rational RrefSystem::entry(int row, int col) const { return row_entry(rows[row], col); }

bool RrefSystem::consistent(int b) const {
    // Rows past the pivots are zero on the A-columns; a nonzero value in the
    // appended column there certifies b is outside the column space.
    for (std::size_t r = pivot_cols.size(); r < rows.size(); ++r)
        if (row_entry(rows[r], acols + b) != 0) return false;
    return true;
}

std::optional<std::vector<Rational>> RrefSystem::solution(int b) const {
    if (!consistent(b)) return std::nullopt;
    std::vector<Rational> x(acols, Rational(0));
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = row_entry(rows[r], acols + b);
    return x;
}

RrefSystem eliminate(const RationalMatrix& a, const RationalMatrix* b) {
    int nrows = 0;
    std::vector<Row> work = matrix_rows(a, b, nrows);

    RrefSystem out;
    out.acols = a.cols;
    out.bcols = b ? b->cols : 0;

    std::vector<Row> placed;       // pivot rows, in pivot-column order
    std::vector<int> pivot_cols;
    std::list<int> pending;
    for (int i = 0; i < nrows; ++i)
        if (!work[i].empty()) pending.push_back(i);

    for (int col = 0; col < a.cols; ++col) {
        // Any remaining row leads at a column >= col, so candidates are the
        // rows leading exactly at col.  Among them the sparsest is taken; the
        // final RREF is the same for every choice.
        auto best = pending.end();
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            if (work[*it].front().first == col &&
                (best == pending.end() || work[*it].size() < work[*best].size()))
                best = it;
        }
        if (best == pending.end()) continue;

        Row pivot = std::move(work[*best]);
        pending.erase(best);
        Rational lead = pivot.front().second;
        if (lead != 1)
            for (auto& [c, v] : pivot) v /= lead;

        for (auto it = pending.begin(); it != pending.end();) {
            Rational coeff = (work[*it].front().first == col) ? -work[*it].front().second
                                                              : -row_entry(work[*it], col);
            if (coeff != 0) work[*it] = axpy(work[*it], coeff, pivot);
            if (work[*it].empty())
                it = pending.erase(it);
            else
                ++it;
        }
        for (auto& row : placed) {
            Rational coeff = -row_entry(row, col);
            if (coeff != 0) row = axpy(row, coeff, pivot);
        }
        placed.push_back(std::move(pivot));
        pivot_cols.push_back(col);
    }

    out.rows = std::move(placed);
    out.pivot_cols = std::move(pivot_cols);
    // Keep leftover rows (zero on A-columns) for consistency checks.
    for (int i : pending) out.rows.push_back(std::move(work[i]));
    return out;
}

int rank(const RationalMatrix& m) { return eliminate(m).rank(); }

std::vector<SparseVec> kernel_basis(const RationalMatrix& m) {
    RrefSystem r = eliminate(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    std::vector<SparseVec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            Rational coeff = r.entry(static_cast<int>(i), f);
            if (coeff != 0) v[r.pivot_cols[i]] = -coeff;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw invariant_error("solve: length of b must equal rows");
    RationalMatrix bm(m.rows, 1);
    for (int i = 0; i < m.rows; ++i) bm.set(i, 0, b[i]);
    return eliminate(m, &bm).solution(0);
}

std::optional<RationalMatrix> solve_many(const RationalMatrix& m, const RationalMatrix& b) {
    RrefSystem sys = eliminate(m, &b);
    RationalMatrix x(m.cols, b.cols);
    for (int j = 0; j < b.cols; ++j) {
        auto col = sys.solution(j);
        if (!col) return std::nullopt;
        for (int i = 0; i < m.cols; ++i) x.set(i, j, (*col)[i]);
    }
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    return solve_many(m, RationalMatrix::identity(m.rows));
}

RrefSystem::Row IncrementalSpan::reduce(const SparseVec& v) const {
    Row row(v.begin(), v.end());
    for (const auto& ech : echelon_) {
        if (row.empty()) break;
        Rational coeff = -row_entry(row, ech.front().first);
        if (coeff != 0) row = axpy(row, coeff / ech.front().second, ech);
    }
    return row;
}

bool IncrementalSpan::add(const SparseVec& v) {
    Row row = reduce(v);
    if (row.empty()) return false;
    echelon_.push_back(std::move(row));
    std::sort(echelon_.begin(), echelon_.end(),
              [](const Row& a, const Row& b) { return a.front().first < b.front().first; });
    return true;
}

bool IncrementalSpan::contains(const SparseVec& v) const { return reduce(v).empty(); }

} // namespace ih
