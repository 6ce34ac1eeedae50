#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "rcgraph/graph.hpp"

namespace rcg {

/// Malformed graph6 input; byte_offset points at the offending byte.
struct Graph6ParseError : Error {
    Graph6ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

/// Header-less graph6, bit-exact per the published format. Upper triangle
/// column by column: for j in 1..n-1, bits x(0,j)..x(j-1,j), packed six per
/// byte MSB-first, each byte offset by 63.
inline std::string encode_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw ValidationError("graph6 encoding supports n <= 258047");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError("empty graph6 string", 0);
    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= text.size())
            throw Graph6ParseError("truncated graph6 string", text.size());
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw Graph6ParseError("byte outside graph6 alphabet", i);
        return c - 63;
    };
    long n;
    if (byte(0) == 63) {  // '~' marker, long form
        if (text.size() >= 2 && text[1] == 126)
            throw Graph6ParseError("graph6 orders above 258047 unsupported", 1);
        n = (long(byte(1)) << 12) | (long(byte(2)) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    long nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != pos + nbytes)
        throw Graph6ParseError(
            text.size() < pos + nbytes ? "truncated graph6 string"
                                       : "trailing bytes after graph6 data",
            std::min(text.size(), pos + nbytes));
    GraphBuilder b(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int v = byte(pos + bit / 6);
            if ((v >> (5 - bit % 6)) & 1) b.add_edge(i, j);
        }
    // padding bits must be zero
    if (nbits % 6 != 0) {
        int last = byte(text.size() - 1);
        if (last & ((1 << (6 - nbits % 6)) - 1))
            throw Graph6ParseError("nonzero padding bits", text.size() - 1);
    }
    return b.build();
}

inline std::string encode_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace rcg
