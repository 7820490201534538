#include "simplicial/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "simplicial/counting.hpp"
#include "simplicial/error.hpp"

namespace simplicial {

namespace {

using LabelFacets = std::vector<std::vector<std::string>>;

// from_facets, except that empty facets are allowed: a list made only of
// empty facets gives the empty-face-only complex.
Complex build(LabelFacets facets) {
    if (facets.empty()) return Complex();
    std::erase_if(facets, [](const auto& f) { return f.empty(); });
    if (facets.empty()) return Complex::empty_face_only();
    return Complex::from_facets(facets);
}

std::string indexed(const char* prefix, int i) { return prefix + std::to_string(i); }

LabelFacets prefixed_facets(const Complex& X, const std::string& prefix) {
    LabelFacets out;
    for (const auto& f : X.facets()) {
        auto labels = X.labels_of(f);
        for (auto& l : labels) l = prefix + l;
        out.push_back(std::move(labels));
    }
    return out;
}

void require(bool condition, const std::string& message) {
    if (!condition) throw Error(ErrorKind::kParameter, message);
}

// Uniform integer in [0, bound) by rejection: draws below 2^64 mod bound are
// discarded so that the final modulo is unbiased.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

// Exhaustive enumeration is used up to this many candidate facets.
constexpr std::int64_t kEnumerationLimit = 1 << 16;

}  // namespace

Complex full_simplex(int n) {
    require(n >= 0, "full_simplex needs n >= 0");
    std::vector<std::string> facet;
    for (int i = 0; i <= n; ++i) facet.push_back(indexed("v", i));
    return Complex::from_facets({facet});
}

Complex simplex_boundary(int n) {
    require(n >= 0, "simplex_boundary needs n >= 0");
    LabelFacets facets;
    for (int skip = 0; skip <= n + 1; ++skip) {
        std::vector<std::string> facet;
        for (int i = 0; i <= n + 1; ++i) {
            if (i != skip) facet.push_back(indexed("v", i));
        }
        facets.push_back(std::move(facet));
    }
    return Complex::from_facets(facets);
}

Complex cycle(int m) {
    require(m >= 3, "cycle needs at least 3 vertices");
    LabelFacets facets;
    for (int i = 0; i < m; ++i) facets.push_back({indexed("v", i), indexed("v", (i + 1) % m)});
    return Complex::from_facets(facets);
}

Complex cross_polytope_boundary(int n) {
    require(n >= 1 && n <= 20, "cross_polytope_boundary needs 1 <= n <= 20");
    LabelFacets facets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::string> facet;
        for (int i = 0; i < n; ++i) facet.push_back(indexed((mask >> i) & 1u ? "q" : "p", i));
        facets.push_back(std::move(facet));
    }
    return Complex::from_facets(facets);
}

Complex cone(const Complex& X, const std::string& apex_label) {
    if (!is_valid_label(apex_label)) {
        throw Error(ErrorKind::kLabel, "invalid apex label '" + apex_label + "'");
    }
    if (X.find_vertex(apex_label)) {
        throw Error(ErrorKind::kLabel, "apex label '" + apex_label + "' is already a vertex");
    }
    LabelFacets facets = prefixed_facets(X, "");
    for (auto& f : facets) f.push_back(apex_label);
    return build(std::move(facets));
}

Complex suspension(const Complex& X) {
    if (X.empty()) throw Error(ErrorKind::kEmptyInput, "cannot suspend the void complex");
    std::vector<std::string> apexes;
    for (int i = 0; apexes.size() < 2; ++i) {
        std::string candidate = indexed("apex", i);
        if (!X.find_vertex(candidate)) apexes.push_back(std::move(candidate));
    }
    LabelFacets facets;
    for (const auto& f : prefixed_facets(X, "")) {
        for (const auto& apex : apexes) {
            facets.push_back(f);
            facets.back().push_back(apex);
        }
    }
    return build(std::move(facets));
}

Complex join(const Complex& X, const Complex& Y) {
    LabelFacets facets;
    const LabelFacets left = prefixed_facets(X, "L:");
    const LabelFacets right = prefixed_facets(Y, "R:");
    for (const auto& f : left) {
        for (const auto& g : right) {
            facets.push_back(f);
            facets.back().insert(facets.back().end(), g.begin(), g.end());
        }
    }
    return build(std::move(facets));
}

Complex disjoint_union(const Complex& X, const Complex& Y) {
    if (X.empty()) return Y;
    if (Y.empty()) return X;
    LabelFacets facets = prefixed_facets(X, "L:");
    for (auto& g : prefixed_facets(Y, "R:")) facets.push_back(std::move(g));
    return build(std::move(facets));
}

Complex random_pure_complex(Seed seed, int n, int num_facets, int num_vertices) {
    require(n >= 0, "random_pure_complex needs n >= 0");
    require(num_facets >= 1, "random_pure_complex needs at least one facet");
    require(num_vertices >= n + 1, "random_pure_complex needs num_vertices >= n + 1");

    const std::int64_t available = binomial(num_vertices, n + 1);
    if (num_facets > available) {
        throw Error(ErrorKind::kInfeasible,
                    std::to_string(num_facets) + " facets requested but only " +
                        std::to_string(available) + " distinct " + std::to_string(n) +
                        "-simplices exist on " + std::to_string(num_vertices) + " vertices");
    }

    std::mt19937_64 rng(seed.value);
    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<int>> chosen;

    if (available <= kEnumerationLimit) {
        // All candidates in lexicographic order, then a partial Fisher-Yates
        // shuffle of the first num_facets positions.
        std::vector<std::vector<int>> pool;
        std::vector<int> combo(size);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            pool.push_back(combo);
            std::size_t i = size;
            while (i > 0 && combo[i - 1] == num_vertices - static_cast<int>(size - i) - 1) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
        for (std::size_t i = 0; i < static_cast<std::size_t>(num_facets); ++i) {
            const auto j = i + uniform_below(rng, pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(static_cast<std::size_t>(num_facets));
        chosen = std::move(pool);
    } else {
        // Draw (n+1)-subsets by a partial Fisher-Yates shuffle of 0..V-1,
        // discarding repeats.
        std::set<std::vector<int>> seen;
        std::vector<int> verts(static_cast<std::size_t>(num_vertices));
        while (chosen.size() < static_cast<std::size_t>(num_facets)) {
            std::iota(verts.begin(), verts.end(), 0);
            for (std::size_t i = 0; i < size; ++i) {
                const auto j = i + uniform_below(rng, verts.size() - i);
                std::swap(verts[i], verts[j]);
            }
            std::vector<int> facet(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(size));
            std::sort(facet.begin(), facet.end());
            if (seen.insert(facet).second) chosen.push_back(std::move(facet));
        }
    }

    LabelFacets facets;
    for (const auto& c : chosen) {
        std::vector<std::string> labels;
        for (int v : c) labels.push_back(indexed("v", v));
        facets.push_back(std::move(labels));
    }
    return Complex::from_facets(facets);
}

}  // namespace simplicial
