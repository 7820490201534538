#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "simplicial/complex.hpp"
#include "simplicial/counting.hpp"

namespace simplicial {

// Euler characteristic of the d-sphere, 1 + (-1)^d; 0 for d = -1 (the
// empty-face-only complex).
std::int64_t sphere_euler_characteristic(int d);

struct LinkCheck {
    Simplex simplex;
    int link_dim = -1;
    std::int64_t link_chi = 0;
    std::int64_t expected_chi = 0;
    bool ok = false;
};

struct EulerCheckOptions {
    std::size_t max_failures = 100;  // cap on failing checks kept in the report
    bool verbose = false;            // also keep passing checks
};

struct EulerReport {
    bool pure = false;
    int dimension = -1;
    std::int64_t chi = 0;

    // Failing checks (up to the cap), plus passing ones in verbose mode, in
    // DimensionThenLex order of the simplex.
    std::vector<LinkCheck> checks;
    std::size_t simplices_checked = 0;
    std::size_t failures = 0;  // total, not capped

    bool is_euler = false;
    bool theorem_applicable = false;   // dimension is odd
    std::optional<bool> theorem_holds;  // chi == 0; set iff is_euler and odd

    // Filled by verify_theorem for odd-dimensional Euler complexes.
    std::optional<LemmaReport> summed_identity;
};

/**
 * Classifies X as an Euler complex.
 *
 * Purity is tested first; an impure complex is rejected with no link checks.
 * Otherwise every non-empty simplex s of dimension k is checked: the link
 * must have dimension n - k - 1 (forced by purity, asserted) and Euler
 * characteristic 1 + (-1)^(n-k-1). Facets have the empty-face-only link and
 * pass with chi 0. The link of the empty simplex (X itself) is not checked.
 *
 * Throws kEmptyInput when X has no vertices.
 */
EulerReport check_euler(const Complex& X, const EulerCheckOptions& options = {});

// check_euler, then for odd-dimensional Euler complexes records whether
// chi == 0 and evaluates the summed link identity.
EulerReport verify_theorem(const Complex& X, const EulerCheckOptions& options = {});

}  // namespace simplicial
