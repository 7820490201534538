#include "simplicial/simplex.hpp"

#include <algorithm>
#include <iterator>

#include "simplicial/error.hpp"

namespace simplicial {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw Error(ErrorKind::kMalformedInput, "simplex has a repeated vertex");
    }
}

Simplex::Simplex(std::initializer_list<std::uint32_t> indices) {
    std::vector<VertexId> v;
    v.reserve(indices.size());
    for (auto i : indices) v.push_back(vertex(i));
    *this = Simplex(std::move(v));
}

bool Simplex::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return false;
        if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return true;
}

Simplex Simplex::united_with(const Simplex& other) const {
    std::vector<VertexId> out;
    out.reserve(vertices_.size() + other.vertices_.size());
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                   other.vertices_.end(), std::back_inserter(out));
    return Simplex(Sorted{}, std::move(out));
}

Simplex Simplex::without(const Simplex& other) const {
    std::vector<VertexId> out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out));
    return Simplex(Sorted{}, std::move(out));
}

void Simplex::for_each_face_of_size(std::size_t size,
                                    const std::function<void(const Simplex&)>& visit) const {
    const std::size_t n = vertices_.size();
    if (size > n) return;

    // Walk the size-combinations of positions in lexicographic order.
    std::vector<std::size_t> pos(size);
    for (std::size_t i = 0; i < size; ++i) pos[i] = i;
    std::vector<VertexId> face(size);
    while (true) {
        for (std::size_t i = 0; i < size; ++i) face[i] = vertices_[pos[i]];
        visit(Simplex(Sorted{}, face));

        std::size_t i = size;
        while (i > 0 && pos[i - 1] == n - size + (i - 1)) --i;
        if (i == 0) return;
        ++pos[i - 1];
        for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
    }
}

}  // namespace simplicial
