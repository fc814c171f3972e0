#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ih/chain_complex.hpp"
#include "ih/matrix.hpp"

namespace ih {

// A simplex is a strictly increasing list of vertex ids.
using Simplex = std::vector<int>;

/**
 * Finite abstract simplicial complex over named vertices.
 *
 * Simplices are stored per dimension in lexicographic order of their sorted
 * vertex ids; the stored order fixes the basis of every chain group.  The
 * orientation of a stored simplex is the one given by increasing vertex ids;
 * a vertex list in any other order denotes the stored simplex times the sign
 * of the sorting permutation.
 */
class SimplicialComplex {
  public:
    SimplicialComplex() = default;
    // Face closure of the given simplices; every declared vertex becomes a
    // 0-simplex even if it spans nothing larger.
    SimplicialComplex(std::vector<std::string> vertex_names,
                      const std::vector<Simplex>& simplices);

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }
    bool pure() const;

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    const std::string& vertex_name(int id) const { return vertex_names_.at(id); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    int vertex_id(const std::string& name) const;        // -1 when absent
    int require_vertex(const std::string& name) const;   // throws when absent

    int simplex_count() const;
    int count_in_dim(int d) const {
        return (d >= 0 && d <= dim()) ? static_cast<int>(by_dim_[d].size()) : 0;
    }
    const std::vector<Simplex>& simplices_of_dim(int d) const;
    bool contains(const Simplex& s) const;
    // Position of a simplex within its dimension's ordered list; -1 if absent.
    int index_of(const Simplex& s) const;

    std::vector<Simplex> maximal_simplices() const;
    int euler_characteristic() const;

    // Simplicial boundary matrix from degree d chains to degree d-1 chains.
    RationalMatrix boundary_matrix(int d) const;
    // The full complex as boundary matrices (degrees 0..dim).
    ChainComplexMatrices chain_complex() const;

    bool operator==(const SimplicialComplex&) const = default;

  private:
    std::vector<std::string> vertex_names_;
    std::map<std::string, int> vertex_ids_;
    std::vector<std::vector<Simplex>> by_dim_; // sorted within each dimension
};

/**
 * Formal sum of oriented simplices of one degree with rational coefficients.
 * Keys are id-sorted simplices; coefficients refer to that orientation.
 */
struct Chain {
    int degree = 0;
    std::map<Simplex, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Simplex& s, const Rational& coeff);
    Chain operator+(const Chain& other) const;
    Chain operator-(const Chain& other) const;
    Chain operator*(const Rational& scalar) const;
    bool operator==(const Chain&) const = default;
};

// Normalizes an arbitrarily ordered vertex list: (sorted simplex, sign of
// the sorting permutation).  Repeated vertices yield sign 0.
std::pair<Simplex, int> normalize_simplex(Simplex s);

Chain boundary(const Chain& c);
// The cone apex * c, with orientation signs placing the apex by vertex id.
Chain cone_chain(int apex, const Chain& c);

// Chain as a coefficient vector over x's degree-d simplex basis, and back.
std::vector<Rational> chain_to_vector(const SimplicialComplex& x, const Chain& c);
SparseVec chain_to_sparse(const SimplicialComplex& x, const Chain& c);
Chain chain_from_sparse(const SimplicialComplex& x, int degree, const SparseVec& v);

// Whether every term of c names a simplex of x (of the stated degree).
bool chain_supported_on(const SimplicialComplex& x, const Chain& c);

} // namespace ih
