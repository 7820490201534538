#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simplicial/complex.hpp"

namespace simplicial {

// Bundled example complexes:
//   tetrahedron-surface  boundary of the 3-simplex
//   rp2-6                6-vertex real projective plane (10 facets)
//   torus-7              7-vertex Moebius torus (14 facets)
//   bowtie               two triangles sharing one vertex
//   path-2               path with two edges
std::vector<std::string> corpus_names();

// Raw facet-file text of a corpus member. Throws kLookup listing the valid
// names when the name is unknown.
std::string_view corpus_text(std::string_view name);

Complex load_corpus(std::string_view name);

}  // namespace simplicial
