#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace simplicial {

// Dense index into a complex's label table.
enum class VertexId : std::uint32_t {};

constexpr VertexId vertex(std::uint32_t index) { return VertexId{index}; }
constexpr std::uint32_t index_of(VertexId v) { return static_cast<std::uint32_t>(v); }

/**
 * A finite vertex set in canonical form (strictly increasing ids).
 *
 * The empty simplex is a valid value with dimension -1. Ordering is
 * lexicographic on the sorted id sequence, which coincides with the
 * lexicographic order of label tokens because ids follow label order.
 */
class Simplex {
  public:
    Simplex() = default;

    // Sorts and validates; throws ErrorKind::kMalformedInput on duplicates.
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<std::uint32_t> indices);

    std::span<const VertexId> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }

    bool contains(VertexId v) const;
    bool is_face_of(const Simplex& other) const;
    bool disjoint_from(const Simplex& other) const;

    Simplex united_with(const Simplex& other) const;
    Simplex without(const Simplex& other) const;

    // Calls visit(face) for every face with exactly `size` vertices.
    void for_each_face_of_size(std::size_t size,
                               const std::function<void(const Simplex&)>& visit) const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;

  private:
    struct Sorted {};
    Simplex(Sorted, std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {}

    std::vector<VertexId> vertices_;
};

// Orders by dimension first, then lexicographically. Used for reports and
// star listings so that lower-dimensional simplices come first.
struct DimensionThenLex {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

}  // namespace simplicial
