#pragma once

#include <cstddef>
#include <string>

#include "gecon/graph.hpp"

namespace gecon {

// graph6 line format: header byte 63+n (n <= 62), then the upper-triangle
// adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into
// 6-bit groups, each group offset by 63, zero padded.

struct Graph6ParseError : std::runtime_error {
    std::size_t byte_offset;
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
};

inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw Graph6ParseError("empty graph6 line", 0);
    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header < 63 || header > 126) throw Graph6ParseError("byte outside [63,126]", 0);
    if (header == 126) throw Graph6ParseError("long-form header unsupported", 0);
    const int n = header - 63;
    if (n > kMaxVertices) throw Graph6ParseError("vertex count beyond supported cap", 0);

    const int nbits = n * (n - 1) / 2;
    const std::size_t expected = 1 + (nbits + 5) / 6;
    if (text.size() != expected)
        throw Graph6ParseError("malformed length, expected " + std::to_string(expected) +
                                   " bytes got " + std::to_string(text.size()),
                               text.size() < expected ? text.size() : expected);

    EdgeList edges;
    int bit_index = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit_index) {
            const std::size_t pos = 1 + bit_index / 6;
            const unsigned char c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126) throw Graph6ParseError("byte outside [63,126]", pos);
            if ((c - 63) >> (5 - bit_index % 6) & 1) edges.emplace_back(u, v);
        }
    }
    // trailing pad bits must come from valid bytes too
    for (std::size_t pos = 1 + bit_index / 6; pos < text.size(); ++pos) {
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw Graph6ParseError("byte outside [63,126]", pos);
    }
    return Graph(n, edges);
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxVertices) throw UnsupportedSizeError("graph6 single-byte header caps n at 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

}  // namespace gecon
