#include "wsat/graph6.hpp"

#include "wsat/errors.hpp"

namespace wsat {

namespace {

constexpr int kBias = 63;   // printable offset: values 0..63 map to '?'..'~'

int value_at(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        throw ParseError("graph6: unexpected end of input at byte " + std::to_string(pos));
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte " + std::to_string(pos) + " out of range");
    return c - kBias;
}

} // namespace

LabeledGraph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("graph6: empty input");
    std::size_t pos = 0;
    long long n = 0;
    if (text[0] == '~') {
        ++pos;
        if (pos < text.size() && text[pos] == '~')
            throw ParseError("graph6: 8-byte order prefix not supported (byte 1)");
        for (int k = 0; k < 3; ++k) n = (n << 6) | value_at(text, pos++);
    } else {
        n = value_at(text, pos++);
    }
    if (n > kMaxVertices)
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxVertices));
    LabeledGraph g(static_cast<int>(n));

    // adjacency bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
    int bit = 0;
    int word = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                word = value_at(text, pos++);
                bit = 6;
            }
            --bit;
            if ((word >> bit) & 1) g.add_edge(u, v);
        }
    }
    if (bit > 0 && (word & ((1 << bit) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits at byte " + std::to_string(pos - 1));
    if (pos != text.size())
        throw ParseError("graph6: trailing garbage at byte " + std::to_string(pos));
    return g;
}

std::string to_graph6(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int word = 0;
    int bit = 6;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            --bit;
            if (g.has_edge(u, v)) word |= 1 << bit;
            if (bit == 0) {
                out.push_back(static_cast<char>(word + kBias));
                word = 0;
                bit = 6;
            }
        }
    }
    if (bit < 6) out.push_back(static_cast<char>(word + kBias));
    return out;
}

} // namespace wsat
