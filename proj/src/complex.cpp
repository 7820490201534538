#include "simplicial/complex.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>

#include "simplicial/checked.hpp"
#include "simplicial/error.hpp"

namespace simplicial {

struct Complex::Data {
    std::vector<std::string> labels;
    std::vector<Simplex> facets;
    int dimension = -1;

    // One slot per dimension 0..dimension, filled on first use.
    std::unique_ptr<std::once_flag[]> once;
    mutable std::vector<std::vector<Simplex>> faces_by_dim;

    Data(std::vector<std::string> l, std::vector<Simplex> f)
        : labels(std::move(l)), facets(std::move(f)) {
        for (const auto& s : facets) dimension = std::max(dimension, s.dimension());
        const std::size_t slots = dimension >= 0 ? static_cast<std::size_t>(dimension) + 1 : 0;
        once = std::make_unique<std::once_flag[]>(slots);
        faces_by_dim.resize(slots);
    }
};

namespace {

std::vector<Simplex> absorb(std::vector<Simplex> generators) {
    std::sort(generators.begin(), generators.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    std::vector<Simplex> kept;
    for (auto& g : generators) {
        const bool covered = std::any_of(kept.begin(), kept.end(),
                                         [&](const Simplex& f) { return g.is_face_of(f); });
        if (!covered) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

bool is_valid_label(std::string_view label) {
    if (label.empty()) return false;
    return std::none_of(label.begin(), label.end(), [](char c) {
        const auto u = static_cast<unsigned char>(c);
        return u <= 0x20 || u == 0x7f;
    });
}

Complex::Complex() : Complex(std::make_shared<const Data>(std::vector<std::string>{},
                                                          std::vector<Simplex>{})) {}

Complex::Complex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Complex Complex::from_facets(const std::vector<std::vector<std::string>>& facets) {
    std::vector<std::string> labels;
    for (const auto& facet : facets) {
        if (facet.empty()) {
            throw Error(ErrorKind::kMalformedInput, "empty facet in input");
        }
        for (const auto& l : facet) {
            if (!is_valid_label(l)) {
                throw Error(ErrorKind::kMalformedInput, "invalid vertex label '" + l + "'");
            }
            labels.push_back(l);
        }
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::vector<Simplex> generators;
    generators.reserve(facets.size());
    for (const auto& facet : facets) {
        std::vector<VertexId> ids;
        ids.reserve(facet.size());
        for (const auto& l : facet) {
            auto it = std::lower_bound(labels.begin(), labels.end(), l);
            ids.push_back(vertex(static_cast<std::uint32_t>(it - labels.begin())));
        }
        std::vector<VertexId> sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw Error(ErrorKind::kMalformedInput,
                        "repeated vertex '" + labels[index_of(*dup)] + "' in facet");
        }
        generators.emplace_back(std::move(ids));
    }
    return from_simplices(labels, std::move(generators));
}

Complex Complex::from_simplices(std::span<const std::string> labels,
                                std::vector<Simplex> generators) {
    for (const auto& g : generators) {
        for (VertexId v : g.vertices()) {
            if (index_of(v) >= labels.size()) {
                throw Error(ErrorKind::kMalformedInput, "vertex id outside the label table");
            }
        }
    }
    std::vector<Simplex> facets = absorb(std::move(generators));

    // Compact the label table to the vertices that survive.
    std::vector<bool> used(labels.size(), false);
    for (const auto& f : facets) {
        for (VertexId v : f.vertices()) used[index_of(v)] = true;
    }
    std::vector<std::uint32_t> remap(labels.size(), 0);
    std::vector<std::string> kept_labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!used[i]) continue;
        remap[i] = static_cast<std::uint32_t>(kept_labels.size());
        kept_labels.push_back(labels[i]);
    }
    if (!std::is_sorted(kept_labels.begin(), kept_labels.end()) ||
        std::adjacent_find(kept_labels.begin(), kept_labels.end()) != kept_labels.end()) {
        throw Error(ErrorKind::kMalformedInput, "label table must be strictly increasing");
    }
    if (kept_labels.size() != labels.size()) {
        for (auto& f : facets) {
            std::vector<VertexId> ids;
            ids.reserve(f.size());
            for (VertexId v : f.vertices()) ids.push_back(vertex(remap[index_of(v)]));
            f = Simplex(std::move(ids));
        }
        std::sort(facets.begin(), facets.end());
    }
    return Complex(std::make_shared<const Data>(std::move(kept_labels), std::move(facets)));
}

Complex Complex::empty_face_only() {
    return Complex(
        std::make_shared<const Data>(std::vector<std::string>{}, std::vector<Simplex>{Simplex{}}));
}

std::span<const std::string> Complex::labels() const { return data_->labels; }

const std::string& Complex::label(VertexId v) const { return data_->labels.at(index_of(v)); }

std::optional<VertexId> Complex::find_vertex(std::string_view label) const {
    const auto& labels = data_->labels;
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return std::nullopt;
    return vertex(static_cast<std::uint32_t>(it - labels.begin()));
}

Simplex Complex::simplex_of(std::span<const std::string> labels) const {
    std::vector<VertexId> ids;
    ids.reserve(labels.size());
    for (const auto& l : labels) {
        auto v = find_vertex(l);
        if (!v) throw Error(ErrorKind::kNotASimplex, "unknown vertex '" + l + "'");
        ids.push_back(*v);
    }
    return Simplex(std::move(ids));
}

std::vector<std::string> Complex::labels_of(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (VertexId v : s.vertices()) out.push_back(label(v));
    return out;
}

std::span<const Simplex> Complex::facets() const { return data_->facets; }

bool Complex::empty() const { return data_->facets.empty(); }

bool Complex::contains(const Simplex& s) const {
    const auto& facets = data_->facets;
    return std::any_of(facets.begin(), facets.end(),
                       [&](const Simplex& f) { return s.is_face_of(f); });
}

int Complex::dimension() const { return data_->dimension; }

const std::vector<Simplex>& Complex::simplices_of_dim(int k) const {
    static const std::vector<Simplex> kNone;
    if (k < 0 || k > data_->dimension) return kNone;

    const auto slot = static_cast<std::size_t>(k);
    std::call_once(data_->once[slot], [&] {
        std::vector<Simplex> faces;
        for (const auto& f : data_->facets) {
            f.for_each_face_of_size(slot + 1, [&](const Simplex& s) { faces.push_back(s); });
        }
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        data_->faces_by_dim[slot] = std::move(faces);
    });
    return data_->faces_by_dim[slot];
}

FVector Complex::f_vector() const {
    FVector f;
    for (int k = 0; k <= dimension(); ++k) {
        const std::size_t n = simplices_of_dim(k).size();
        if (n > static_cast<std::size_t>(std::numeric_limits<std::int64_t>::max())) {
            throw Error(ErrorKind::kOverflow, "face count exceeds 64-bit range");
        }
        f.counts.push_back(static_cast<std::int64_t>(n));
    }
    return f;
}

std::int64_t Complex::euler_characteristic() const {
    const FVector f = f_vector();
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < f.counts.size(); ++k) {
        chi = checked::add(chi, checked::mul(checked::sign(static_cast<std::int64_t>(k)),
                                             f.counts[k]));
    }
    return chi;
}

bool Complex::is_pure() const {
    const auto& facets = data_->facets;
    return std::all_of(facets.begin(), facets.end(), [&](const Simplex& f) {
        return f.size() == facets.front().size();
    });
}

bool operator==(const Complex& a, const Complex& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->labels == b.data_->labels && a.data_->facets == b.data_->facets;
}

std::string describe(const Complex& X, const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += X.label(s.vertices()[i]);
    }
    return out + "}";
}

Complex make_complex(const std::vector<std::vector<std::string>>& facets) {
    return Complex::from_facets(facets);
}

}  // namespace simplicial
