#pragma once

#include <vector>

#include "simplicial/complex.hpp"

namespace simplicial {

// A set of simplices of an ambient complex, not necessarily closed under
// taking faces. Members are kept in DimensionThenLex order.
class SimplexSet {
  public:
    SimplexSet() = default;
    SimplexSet(Complex ambient, std::vector<Simplex> members);

    const Complex& ambient() const { return ambient_; }
    const std::vector<Simplex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const Simplex& s) const;

  private:
    Complex ambient_;
    std::vector<Simplex> members_;
};

// All simplices of X containing s (s included). Requires s non-empty and in
// X; otherwise throws kNotASimplex.
SimplexSet star(const Complex& X, const Simplex& s);

// All faces of members of S, as a complex over the ambient label table.
Complex closure(const SimplexSet& S);

// Simplices tau of X with tau disjoint from s and tau u s in X. Built from
// the facets containing s with s removed. The link of a facet is the
// empty-face-only complex. The link of the empty simplex would be X itself;
// that input is rejected along with simplices not in X (kNotASimplex).
Complex link(const Complex& X, const Simplex& s);

// Same result computed the long way: closure of the star, then keep the
// members disjoint from s. Slower; kept for cross-checking link().
Complex link_via_closed_star(const Complex& X, const Simplex& s);

}  // namespace simplicial
