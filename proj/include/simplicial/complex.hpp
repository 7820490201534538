#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplicial/simplex.hpp"

namespace simplicial {

// Number of simplices per dimension, s_0 .. s_n. Empty for a complex with
// no non-empty simplex.
struct FVector {
    std::vector<std::int64_t> counts;

    int dimension() const { return static_cast<int>(counts.size()) - 1; }
    std::int64_t operator[](std::size_t k) const { return counts.at(k); }

    friend bool operator==(const FVector&, const FVector&) = default;
};

/**
 * A finite abstract simplicial complex, stored by its facets.
 *
 * Values are immutable and cheap to copy (copies share storage). The face
 * set is never materialized eagerly: simplices of dimension k are the
 * (k+1)-subsets of facets, enumerated once per dimension on first request
 * and cached behind std::call_once, so a Complex may be read concurrently.
 *
 * Two complexes are distinguished at the bottom of the face lattice:
 *  - the void complex (default constructed) has no simplices at all;
 *  - the complex whose only simplex is the empty simplex. This is what the
 *    link of a facet evaluates to. Its f-vector is empty and its Euler
 *    characteristic is 0, but it contains the empty simplex.
 *
 * Vertex ids are dense and ordered by the lexicographic order of labels.
 */
class Complex {
  public:
    // The void complex.
    Complex();

    // Builds a complex from label sets. Facets contained in other facets are
    // absorbed; duplicates are dropped. Throws kMalformedInput on an empty
    // facet, a repeated label within a facet, or an invalid label (empty or
    // containing whitespace).
    static Complex from_facets(const std::vector<std::vector<std::string>>& facets);

    // Builds a complex over an existing label table. Non-maximal generators
    // are absorbed and labels not used by any surviving facet are dropped
    // (ids are renumbered accordingly). A generator list consisting only of
    // empty simplices yields the empty-face-only complex; an empty list
    // yields the void complex.
    static Complex from_simplices(std::span<const std::string> labels,
                                  std::vector<Simplex> generators);

    static Complex empty_face_only();

    std::span<const std::string> labels() const;
    const std::string& label(VertexId v) const;
    std::optional<VertexId> find_vertex(std::string_view label) const;
    std::size_t num_vertices() const { return labels().size(); }

    // Resolves labels to a simplex. Throws kNotASimplex when a label is
    // unknown, kMalformedInput on a repeated label.
    Simplex simplex_of(std::span<const std::string> labels) const;
    std::vector<std::string> labels_of(const Simplex& s) const;

    // Facets in canonical (lexicographic) order.
    std::span<const Simplex> facets() const;

    // True iff the complex has no simplices at all (the void complex).
    bool empty() const;

    // Membership: s is a face of some facet. The empty simplex belongs to
    // every non-void complex.
    bool contains(const Simplex& s) const;

    // Maximum facet dimension; -1 for the void and empty-face-only complexes.
    int dimension() const;

    // All k-simplices, in lexicographic order. Empty for k < 0 or k > dim.
    const std::vector<Simplex>& simplices_of_dim(int k) const;

    FVector f_vector() const;
    std::int64_t euler_characteristic() const;

    // All facets have the same size. True for the void complex.
    bool is_pure() const;

    friend bool operator==(const Complex& a, const Complex& b);

  private:
    struct Data;
    explicit Complex(std::shared_ptr<const Data> data);

    std::shared_ptr<const Data> data_;
};

// Validates a vertex label: non-empty, no whitespace or control characters.
bool is_valid_label(std::string_view label);

// Renders s with its labels, e.g. "{a b}".
std::string describe(const Complex& X, const Simplex& s);

Complex make_complex(const std::vector<std::vector<std::string>>& facets);

}  // namespace simplicial
