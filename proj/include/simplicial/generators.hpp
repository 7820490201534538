#pragma once

#include <cstdint>
#include <string>

#include "simplicial/complex.hpp"

namespace simplicial {

// Seed for random_pure_complex. Same seed and parameters give the same complex.
struct Seed {
    std::uint64_t value = 0;
};

// One facet on vertices v0..vn. Throws kParameter for n < 0.
Complex full_simplex(int n);

// All (n+1)-subsets of v0..v(n+1): the boundary of the (n+1)-simplex.
Complex simplex_boundary(int n);

// Cycle v0 - v1 - ... - v(m-1) - v0. Requires m >= 3.
Complex cycle(int m);

// Boundary of the n-dimensional cross-polytope: antipodal pairs (p_i, q_i),
// facets pick one vertex from each pair. 2^n facets of dimension n-1.
Complex cross_polytope_boundary(int n);

// Every facet extended by a new apex vertex. Throws kLabel if the apex label
// is invalid or already a vertex of X.
Complex cone(const Complex& X, const std::string& apex_label);

// Every facet extended by either of two new apexes. The apexes are named
// apex0, apex1 unless those labels are taken, in which case the next free
// apex<i> labels are used. Throws kEmptyInput for the void complex.
Complex suspension(const Complex& X);

// Facets f u g for f in X, g in Y. Labels are prefixed "L:" and "R:" so the
// vertex sets are disjoint.
Complex join(const Complex& X, const Complex& Y);

// Union on disjoint vertex sets, labels prefixed "L:" and "R:". A void
// operand leaves the other one unchanged.
Complex disjoint_union(const Complex& X, const Complex& Y);

/**
 * num_facets distinct n-simplices on vertices v0..v(V-1), chosen uniformly
 * without replacement.
 *
 * Randomness comes from std::mt19937_64 seeded with seed.value; bounded
 * draws use rejection sampling (see FORMAT.md for the exact procedure so
 * other implementations can reproduce the output). Throws kParameter when
 * num_vertices < n+1 or num_facets < 1, and kInfeasible when num_facets
 * exceeds C(num_vertices, n+1).
 */
Complex random_pure_complex(Seed seed, int n, int num_facets, int num_vertices);

}  // namespace simplicial
