#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "simplicial/complex.hpp"

namespace simplicial {

// Exact binomial coefficient; 0 when k < 0 or k > n. Throws kOverflow when
// the result does not fit in int64.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Number of l-simplices of Y. For l = -1 this is 1 when Y has the empty
// simplex as a face (any non-void complex) and 0 for the void complex.
std::int64_t count_faces(const Complex& Y, int l);

// Number of l-simplices of X containing s. Counted by scanning the
// l-simplices of X; shares nothing with link(). Throws kNotASimplex when s
// is not in X.
std::int64_t count_cofaces(const Complex& X, const Simplex& s, int l);

enum class Identity {
    kCofaceDoubleCount,  // sum over k-simplices of l-coface counts = C(l+1,k+1) s_l
    kLinkCofaceCount,    // l-cofaces of s = (l-dim s-1)-simplices of link(s)
    kCoefficientSum,     // alternating binomial coefficient sum
    kSummedLinkIdentity  // Euler relations summed over k = 0..n-1
};

const char* to_string(Identity id);

// Both sides of one identity instance. holds is exactly lhs == rhs; for the
// link/coface identity the explicit bijection check is reported separately.
struct LemmaReport {
    Identity identity{};
    std::optional<int> k;
    std::optional<int> l;
    std::optional<Simplex> simplex;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
    std::optional<bool> bijection;

    bool passed() const { return holds && bijection.value_or(true); }
};

// sum_{sigma in X^k} coface count(sigma, l)  vs  C(l+1, k+1) * s_l(X).
// Requires 0 <= k <= l <= dim X (kParameter otherwise).
LemmaReport verify_coface_double_count(const Complex& X, int k, int l);

// coface count(s, l)  vs  s_{l-k-1}(link(X, s)) with k = dim s, plus an
// explicit check that tau -> s u tau maps the (l-k-1)-simplices of the link
// one-to-one onto the l-cofaces of s. Requires s non-empty, in X, and
// dim s <= l <= dim X (kParameter otherwise).
LemmaReport verify_link_coface_count(const Complex& X, const Simplex& s, int l);

// sum_{k=0}^{l-1} (-1)^{l-k-1} C(l+1, k+1), summed term by term. The exponent
// l-k-1 differs from l-k+1 by 2, so either sign convention gives the same
// terms. Requires l >= 1.
std::int64_t coefficient_sum(int l);

// coefficient_sum(l) against the closed form 1 + (-1)^(l+1).
LemmaReport verify_coefficient_sum(int l);

// 2 * sum_{k even} s_k  vs  sum_{k=0}^{n-1} sum_{l=k+1}^{n}
// (-1)^{l-k-1} C(l+1,k+1) s_l, both evaluated term by term. Requires X to be
// an Euler complex of odd dimension; throws kPrecondition naming the failed
// hypothesis otherwise.
LemmaReport verify_summed_link_identity(const Complex& X);

namespace detail {
// Evaluates both sides from an f-vector without checking hypotheses.
LemmaReport summed_link_identity_sides(const FVector& f);
}  // namespace detail

}  // namespace simplicial
