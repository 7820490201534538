#include "simplicial/complex_io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "simplicial/error.hpp"

namespace simplicial {

namespace {

// Returns the byte offset of the first invalid sequence, or npos.
std::size_t find_invalid_utf8(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        const auto c = static_cast<unsigned char>(text[i]);
        std::size_t len = 0;
        std::uint32_t cp = 0;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xe0) == 0xc0) {
            len = 2;
            cp = c & 0x1f;
        } else if ((c & 0xf0) == 0xe0) {
            len = 3;
            cp = c & 0x0f;
        } else if ((c & 0xf8) == 0xf0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return i;
        }
        if (i + len > text.size()) return i;
        for (std::size_t j = 1; j < len; ++j) {
            const auto cc = static_cast<unsigned char>(text[i + j]);
            if ((cc & 0xc0) != 0x80) return i;
            cp = (cp << 6) | (cc & 0x3f);
        }
        // Overlong forms, surrogates, and values past U+10FFFF.
        static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMin[len] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) return i;
        i += len;
    }
    return std::string_view::npos;
}

}  // namespace

Complex parse(std::string_view text) {
    if (const auto bad = find_invalid_utf8(text); bad != std::string_view::npos) {
        throw Error(ErrorKind::kEncoding, "input is not valid UTF-8 (byte offset " +
                                              std::to_string(bad) + ")");
    }

    std::vector<std::vector<std::string>> facets;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() == '#') continue;

        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            if (i > start) tokens.emplace_back(line.substr(start, i - start));
        }
        if (tokens.empty()) continue;

        for (const auto& t : tokens) {
            if (!is_valid_label(t)) throw ParseError(line_no, "invalid vertex label '" + t + "'");
        }
        std::vector<std::string> sorted = tokens;
        std::sort(sorted.begin(), sorted.end());
        if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
            throw ParseError(line_no, "vertex '" + *dup + "' repeated in facet");
        }
        facets.push_back(std::move(tokens));
    }
    if (facets.empty()) {
        throw Error(ErrorKind::kEmptyInput, "no facets in input");
    }
    return Complex::from_facets(facets);
}

Complex parse(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    return parse(std::string_view(text));
}

Complex parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::kLookup, "cannot open '" + path + "'");
    return parse(in);
}

std::string serialize_simplices(const Complex& X, const std::vector<Simplex>& simplices) {
    std::string out;
    for (const auto& s : simplices) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ' ';
            out += X.label(s.vertices()[i]);
        }
        out += '\n';
    }
    return out;
}

std::string serialize(const Complex& X) {
    if (X.dimension() < 0) return {};
    return serialize_simplices(X, {X.facets().begin(), X.facets().end()});
}

}  // namespace simplicial
