#include "ih/simplicial.hpp"

#include <algorithm>

#include "ih/errors.hpp"

namespace ih {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_names,
                                     const std::vector<Simplex>& simplices)
    : vertex_names_(std::move(vertex_names)) {
    for (int i = 0; i < static_cast<int>(vertex_names_.size()); ++i) {
        if (!vertex_ids_.emplace(vertex_names_[i], i).second)
            throw parse_error("duplicate vertex name '" + vertex_names_[i] + "'");
    }

    std::set<Simplex> closed;
    for (int i = 0; i < vertex_count(); ++i) closed.insert({i});
    // Close under faces by peeling one vertex at a time.
    std::vector<Simplex> stack = simplices;
    for (auto& s : stack) {
        auto [norm, sign] = normalize_simplex(s);
        if (sign == 0) throw parse_error("simplex with repeated vertex");
        s = norm;
    }
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        for (int v : s)
            if (v < 0 || v >= vertex_count()) throw parse_error("simplex names unknown vertex id");
        if (!closed.insert(s).second) continue;
        if (s.size() > 1) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face.push_back(s[j]);
                stack.push_back(std::move(face));
            }
        }
    }

    for (const auto& s : closed) {
        int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
        by_dim_[d].push_back(s);
    }
    for (auto& level : by_dim_) std::sort(level.begin(), level.end());
}

bool SimplicialComplex::pure() const {
    for (const auto& s : maximal_simplices())
        if (static_cast<int>(s.size()) - 1 != dim()) return false;
    return true;
}

int SimplicialComplex::vertex_id(const std::string& name) const {
    auto it = vertex_ids_.find(name);
    return it == vertex_ids_.end() ? -1 : it->second;
}

int SimplicialComplex::require_vertex(const std::string& name) const {
    int id = vertex_id(name);
    if (id < 0) throw parse_error("unknown vertex '" + name + "'");
    return id;
}

int SimplicialComplex::simplex_count() const {
    int n = 0;
    for (const auto& level : by_dim_) n += static_cast<int>(level.size());
    return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices_of_dim(int d) const {
    static const std::vector<Simplex> kEmpty;
    return (d >= 0 && d <= dim()) ? by_dim_[d] : kEmpty;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s) >= 0; }

int SimplicialComplex::index_of(const Simplex& s) const {
    int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > dim()) return -1;
    const auto& level = by_dim_[d];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return -1;
    return static_cast<int>(it - level.begin());
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d) {
        for (const auto& s : by_dim_[d]) {
            bool maximal = true;
            // s is maximal iff no (d+1)-simplex contains it.
            for (const auto& t : simplices_of_dim(d + 1)) {
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) out.push_back(s);
        }
    }
    return out;
}

int SimplicialComplex::euler_characteristic() const {
    int chi = 0;
    for (int d = 0; d <= dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * count_in_dim(d);
    return chi;
}

RationalMatrix SimplicialComplex::boundary_matrix(int d) const {
    RationalMatrix m(count_in_dim(d - 1), count_in_dim(d));
    if (d < 1 || d > dim()) return m;
    const auto& level = by_dim_[d];
    for (int j = 0; j < static_cast<int>(level.size()); ++j) {
        const Simplex& s = level[j];
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != i) face.push_back(s[k]);
            m.set(index_of(face), j, Rational(sign));
            sign = -sign;
        }
    }
    return m;
}

ChainComplexMatrices SimplicialComplex::chain_complex() const {
    ChainComplexMatrices c;
    for (int d = 0; d <= dim(); ++d) c.boundary.push_back(boundary_matrix(d));
    return c;
}

void Chain::add(const Simplex& s, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms.emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

Chain Chain::operator+(const Chain& other) const {
    Chain out = *this;
    for (const auto& [s, v] : other.terms) out.add(s, v);
    return out;
}

Chain Chain::operator-(const Chain& other) const {
    Chain out = *this;
    for (const auto& [s, v] : other.terms) out.add(s, -v);
    return out;
}

Chain Chain::operator*(const Rational& scalar) const {
    Chain out;
    out.degree = degree;
    if (scalar == 0) return out;
    for (const auto& [s, v] : terms) out.terms.emplace(s, v * scalar);
    return out;
}

std::pair<Simplex, int> normalize_simplex(Simplex s) {
    int sign = 1;
    // Insertion sort, tracking the permutation parity.
    for (std::size_t i = 1; i < s.size(); ++i) {
        for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
            std::swap(s[j - 1], s[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[i - 1]) return {s, 0};
    return {s, sign};
}

Chain boundary(const Chain& c) {
    Chain out;
    out.degree = c.degree - 1;
    if (c.degree == 0) {
        out.degree = 0;
        return out;
    }
    for (const auto& [s, v] : c.terms) {
        int sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != i) face.push_back(s[k]);
            out.add(face, v * sign);
            sign = -sign;
        }
    }
    return out;
}

Chain cone_chain(int apex, const Chain& c) {
    Chain out;
    out.degree = c.degree + 1;
    for (const auto& [s, v] : c.terms) {
        Simplex joined = s;
        joined.push_back(apex);
        auto [norm, sign] = normalize_simplex(std::move(joined));
        if (sign == 0) throw invariant_error("cone apex already occurs in the chain");
        // The oriented join [apex, s] equals sign' * sorted, where sign'
        // accounts for moving the apex from the front to its sorted slot.
        int rank = static_cast<int>(std::lower_bound(s.begin(), s.end(), apex) - s.begin());
        out.add(norm, (rank % 2 == 0 ? v : -v));
    }
    return out;
}

std::vector<Rational> chain_to_vector(const SimplicialComplex& x, const Chain& c) {
    return to_dense(chain_to_sparse(x, c), x.count_in_dim(c.degree));
}

SparseVec chain_to_sparse(const SimplicialComplex& x, const Chain& c) {
    SparseVec v;
    for (const auto& [s, coeff] : c.terms) {
        int idx = x.index_of(s);
        if (idx < 0) throw invariant_error("chain term is not a simplex of the complex");
        v[idx] = coeff;
    }
    return v;
}

Chain chain_from_sparse(const SimplicialComplex& x, int degree, const SparseVec& v) {
    Chain c;
    c.degree = degree;
    const auto& level = x.simplices_of_dim(degree);
    for (const auto& [i, coeff] : v) c.terms.emplace(level.at(i), coeff);
    return c;
}

bool chain_supported_on(const SimplicialComplex& x, const Chain& c) {
    for (const auto& [s, coeff] : c.terms) {
        if (static_cast<int>(s.size()) - 1 != c.degree) return false;
        if (!x.contains(s)) return false;
    }
    return true;
}

} // namespace ih
