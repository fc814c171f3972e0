#include "ih/chain_complex.hpp"

#include "ih/errors.hpp"

namespace ih {

int GradedVectorSpace::total() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

bool GradedVectorSpace::palindromic() const {
    for (std::size_t i = 0, j = dims.size(); i < j; ++i)
        if (dims[i] != dims[j - 1 - i]) return false;
    return true;
}

void ChainComplexMatrices::check_shapes() const {
    if (boundary.empty()) return;
    if (boundary[0].rows != 0) throw invariant_error("boundary[0] must have zero rows");
    for (int d = 1; d <= top_degree(); ++d)
        if (boundary[d].rows != boundary[d - 1].cols)
            throw invariant_error("boundary shape mismatch at degree " + std::to_string(d));
}

bool ChainComplexMatrices::boundaries_square_to_zero() const {
    for (int d = 2; d <= top_degree(); ++d)
        if (!(boundary[d - 1] * boundary[d]).is_zero()) return false;
    return true;
}

GradedVectorSpace homology_dims(const ChainComplexMatrices& c) {
    c.check_shapes();
    if (!c.boundaries_square_to_zero())
        throw invariant_error("boundary composed with boundary is nonzero");
    GradedVectorSpace out;
    if (c.boundary.empty()) return out;
    std::vector<int> ranks(c.top_degree() + 2, 0);
    for (int d = 1; d <= c.top_degree(); ++d) ranks[d] = rank(c.boundary[d]);
    for (int d = 0; d <= c.top_degree(); ++d)
        out.dims.push_back(c.dim_at(d) - ranks[d] - ranks[d + 1]);
    return out;
}

HomologySpace::HomologySpace(const ChainComplexMatrices& c, int degree) : degree_(degree) {
    chain_dim_ = c.dim_at(degree);

    std::vector<SparseVec> cycles;
    if (const RationalMatrix* b = c.boundary_at(degree)) {
        cycles = kernel_basis(*b);
    } else {
        for (int i = 0; i < chain_dim_; ++i) cycles.push_back({{i, Rational(1)}});
    }

    IncrementalSpan span;
    std::vector<SparseVec> solver_cols;
    if (const RationalMatrix* b = c.boundary_at(degree + 1)) {
        for (int j = 0; j < b->cols; ++j) {
            SparseVec col = b->column(j);
            if (span.add(col)) solver_cols.push_back(std::move(col));
        }
    }
    span_cols_ = static_cast<int>(solver_cols.size());

    for (auto& z : cycles) {
        if (span.add(z)) {
            solver_cols.push_back(z);
            representatives_.push_back(std::move(z));
        }
    }
    solver_ = RationalMatrix::from_columns(chain_dim_, solver_cols);
}

std::optional<std::vector<Rational>> HomologySpace::coords(const SparseVec& cycle) const {
    auto sol = solve(solver_, to_dense(cycle, chain_dim_));
    if (!sol) return std::nullopt;
    return std::vector<Rational>(sol->begin() + span_cols_, sol->end());
}

std::optional<RationalMatrix> HomologySpace::coords_many(const RationalMatrix& cycles) const {
    if (cycles.rows != chain_dim_) throw invariant_error("coords_many: chain dimension mismatch");
    auto sol = solve_many(solver_, cycles);
    if (!sol) return std::nullopt;
    RationalMatrix out(dim(), cycles.cols);
    for (const auto& [rc, v] : sol->entries)
        if (rc.first >= span_cols_) out.set(rc.first - span_cols_, rc.second, v);
    return out;
}

RationalMatrix induced_map_on_homology(const ChainComplexMatrices& src,
                                       const ChainComplexMatrices& tgt,
                                       const std::vector<RationalMatrix>& chain_map,
                                       int degree) {
    src.check_shapes();
    tgt.check_shapes();
    for (int d = 0; d < static_cast<int>(chain_map.size()); ++d) {
        if (chain_map[d].cols != src.dim_at(d) || chain_map[d].rows != tgt.dim_at(d))
            throw invariant_error("chain map shape mismatch at degree " + std::to_string(d));
        if (d >= 1 && d <= src.top_degree() && d <= tgt.top_degree()) {
            if (!(chain_map[d - 1] * src.boundary[d] == tgt.boundary[d] * chain_map[d]))
                throw invariant_error("chain map does not commute with boundaries at degree " +
                                      std::to_string(d));
        }
    }
    if (degree < 0 || degree >= static_cast<int>(chain_map.size()))
        throw invariant_error("induced map degree outside chain map range");

    HomologySpace hs(src, degree), ht(tgt, degree);
    RationalMatrix images(tgt.dim_at(degree), hs.dim());
    for (int j = 0; j < hs.dim(); ++j) {
        SparseVec img = chain_map[degree].apply(hs.representatives()[j]);
        for (const auto& [i, v] : img) images.set(i, j, v);
    }
    auto m = ht.coords_many(images);
    if (!m) throw invariant_error("image of a cycle is not a cycle in the target");
    return *m;
}

} // namespace ih
