#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "simplicial/complex.hpp"

namespace simplicial {

// Facet-list text format (see FORMAT.md):
//   - one facet per non-blank line; lines whose first character is '#' are
//     comments
//   - vertex labels separated by runs of spaces or tabs
//   - LF or CRLF line endings
//
// Throws ParseError (with line number) on a repeated label within a line,
// Error(kEncoding) on invalid UTF-8 and Error(kEmptyInput) when no facet is
// present.
Complex parse(std::string_view text);
Complex parse(std::istream& in);

// Reads a file; Error(kLookup) if it cannot be opened.
Complex parse_file(const std::string& path);

// Canonical form: labels sorted within a facet and separated by one space,
// facets sorted lexicographically, LF endings, trailing newline. The void
// and empty-face-only complexes serialize to the empty string.
std::string serialize(const Complex& X);

// Writes one simplex per line in the same token format, in the given order.
std::string serialize_simplices(const Complex& X, const std::vector<Simplex>& simplices);

}  // namespace simplicial
