#include "simplicial/corpus.hpp"

#include <array>
#include <utility>

#include "simplicial/complex_io.hpp"
#include "simplicial/error.hpp"

namespace simplicial {

namespace {

constexpr std::string_view kTetrahedronSurface =
    "# boundary of the 3-simplex\n"
    "a b c\n"
    "a b d\n"
    "a c d\n"
    "b c d\n";

// Minimal 6-vertex triangulation of the real projective plane (the
// hemi-icosahedron).
constexpr std::string_view kRp2 =
    "# 6-vertex real projective plane\n"
    "1 2 3\n"
    "1 2 6\n"
    "1 3 4\n"
    "1 4 5\n"
    "1 5 6\n"
    "2 3 5\n"
    "2 4 5\n"
    "2 4 6\n"
    "3 4 6\n"
    "3 5 6\n";

// Moebius 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
constexpr std::string_view kTorus =
    "# 7-vertex torus\n"
    "0 1 3\n"
    "0 1 5\n"
    "0 2 3\n"
    "0 2 6\n"
    "0 4 5\n"
    "0 4 6\n"
    "1 2 4\n"
    "1 2 6\n"
    "1 3 4\n"
    "1 5 6\n"
    "2 3 5\n"
    "2 4 5\n"
    "3 4 6\n"
    "3 5 6\n";

constexpr std::string_view kBowtie =
    "# two triangles sharing vertex a\n"
    "a b c\n"
    "a d e\n";

constexpr std::string_view kPath =
    "# path a - b - c\n"
    "a b\n"
    "b c\n";

constexpr std::array<std::pair<std::string_view, std::string_view>, 5> kCorpus{{
    {"tetrahedron-surface", kTetrahedronSurface},
    {"rp2-6", kRp2},
    {"torus-7", kTorus},
    {"bowtie", kBowtie},
    {"path-2", kPath},
}};

}  // namespace

std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : kCorpus) names.emplace_back(name);
    return names;
}

std::string_view corpus_text(std::string_view name) {
    for (const auto& [n, text] : kCorpus) {
        if (n == name) return text;
    }
    std::string valid;
    for (const auto& [n, text] : kCorpus) {
        if (!valid.empty()) valid += ", ";
        valid += n;
    }
    throw Error(ErrorKind::kLookup,
                "unknown corpus member '" + std::string(name) + "' (valid: " + valid + ")");
}

Complex load_corpus(std::string_view name) { return parse(corpus_text(name)); }

}  // namespace simplicial
