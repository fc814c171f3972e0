#include "ih/matrix.hpp"

#include "ih/errors.hpp"

namespace ih {

RationalMatrix::RationalMatrix(int r, int c) : rows(r), cols(c) {
    if (r < 0 || c < 0) throw invariant_error("matrix dimensions must be nonnegative");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.entries[{i, i}] = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(int rows, const std::vector<SparseVec>& columns) {
    RationalMatrix m(rows, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : columns[j]) m.set(i, j, v);
    return m;
}

void RationalMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw invariant_error("matrix index out of bounds");
    if (v == 0)
        entries.erase({r, c});
    else
        entries[{r, c}] = v;
}

Rational RationalMatrix::get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Rational(0) : it->second;
}

SparseVec RationalMatrix::column(int c) const {
    SparseVec out;
    for (int r = 0; r < rows; ++r) {
        auto it = entries.find({r, c});
        if (it != entries.end()) out[r] = it->second;
    }
    return out;
}

SparseVec RationalMatrix::row(int r) const {
    SparseVec out;
    auto it = entries.lower_bound({r, 0});
    for (; it != entries.end() && it->first.first == r; ++it) out[it->first.second] = it->second;
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols != other.rows) throw invariant_error("matrix product shape mismatch");
    RationalMatrix out(rows, other.cols);
    // (this * other)[i][j] = sum_k this[i][k] * other[k][j]
    for (const auto& [ik, v] : entries) {
        auto [i, k] = ik;
        auto it = other.entries.lower_bound({k, 0});
        for (; it != other.entries.end() && it->first.first == k; ++it) {
            Rational& cell = out.entries[{i, it->first.second}];
            cell += v * it->second;
        }
    }
    std::erase_if(out.entries, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols) throw invariant_error("matrix apply shape mismatch");
    std::vector<Rational> out(rows, Rational(0));
    for (const auto& [rc, v] : entries) out[rc.first] += v * x[rc.second];
    return out;
}

SparseVec RationalMatrix::apply(const SparseVec& x) const {
    SparseVec out;
    if (!x.empty() && (x.begin()->first < 0 || x.rbegin()->first >= cols))
        throw invariant_error("matrix apply shape mismatch");
    for (const auto& [rc, v] : entries) {
        auto it = x.find(rc.second);
        if (it != x.end()) out[rc.first] += v * it->second;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<Rational> to_dense(const SparseVec& v, int n) {
    std::vector<Rational> out(n, Rational(0));
    for (const auto& [i, val] : v) out[i] = val;
    return out;
}

SparseVec to_sparse(const std::vector<Rational>& v) {
    SparseVec out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) out[i] = v[i];
    return out;
}

} // namespace ih
