#pragma once

#include <set>
#include <string>
#include <vector>

#include "ih/simplicial.hpp"

namespace ih {

/// Face-closed set of simplices of an ambient complex.
class Subcomplex {
  public:
    Subcomplex() = default;
    // Face closure of the given simplices (ids refer to the ambient complex).
    Subcomplex(const SimplicialComplex& ambient, const std::vector<Simplex>& simplices);

    bool empty() const { return simplices_.empty(); }
    int dim() const;
    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool contains_vertex(int v) const { return simplices_.count({v}) > 0; }
    const std::set<Simplex>& simplices() const { return simplices_; }

    bool subset_of(const Subcomplex& other) const;
    bool operator==(const Subcomplex&) const = default;

  private:
    std::set<Simplex> simplices_;
};

/**
 * Descending filtration by closed subcomplexes with declared codimensions.
 * Only the filtration shadow of a stratification is modeled; allowability
 * consumes nothing else.
 */
struct Stratification {
    struct Member {
        int codim = 0;
        Subcomplex part;
    };
    std::vector<Member> members; // codims strictly increasing

    bool empty() const { return members.empty(); }
    // Largest member (the singular set), empty when unstratified.
    const Subcomplex* singular_set() const { return members.empty() ? nullptr : &members[0].part; }
    bool vertex_is_singular(int v) const;

    // Nesting and codim monotonicity; throws invariant_error when violated.
    void check_structure() const;
};

/// One fault or hint discovered by validate().
struct ValidationItem {
    enum class Severity { Fault, Hint };
    Severity severity;
    std::string code;    // stable machine-readable tag
    std::string message; // human-readable description
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    bool clean() const {
        for (const auto& i : items)
            if (i.severity == ValidationItem::Severity::Fault) return false;
        return true;
    }
};

/**
 * Diagnostic sweep: purity, codimension bounds of the declared filtration,
 * the pseudomanifold two-cofaces condition away from the singular set, and
 * a fullness hint recommending one barycentric subdivision when a member is
 * not a full subcomplex.
 */
ValidationReport validate(const SimplicialComplex& x, const Stratification& s);

} // namespace ih
