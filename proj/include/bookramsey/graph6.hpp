#ifndef BOOKRAMSEY_GRAPH6_HPP
#define BOOKRAMSEY_GRAPH6_HPP

#include "error.hpp"
#include "graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bookramsey {

namespace detail {

inline void append_size(std::string& out, std::uint64_t n)
{
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    }
}

inline int sextet(std::string_view text, std::size_t pos)
{
    if (pos >= text.size())
        throw ParseError("unexpected end of input", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw ParseError("byte outside the printable range 63..126", pos);
    return c - 63;
}

/// Reads N(n); advances pos past it.
inline std::uint64_t read_size(std::string_view text, std::size_t& pos)
{
    const int first = sextet(text, pos);
    if (first < 63) {
        ++pos;
        return static_cast<std::uint64_t>(first);
    }
    const bool eight = pos + 1 < text.size() && text[pos + 1] == 126;
    const int digits = eight ? 6 : 3;
    pos += eight ? 2 : 1;
    std::uint64_t n = 0;
    for (int i = 0; i < digits; ++i)
        n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
    return n;
}

inline std::string_view strip(std::string_view text, std::string_view header)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    return text;
}

} // namespace detail

/// graph6: N(n) then the upper triangle, column by column, packed six bits per byte (offset 63).
inline std::string graph6_encode(const Graph& g)
{
    const int n = g.order();
    std::string out;
    detail::append_size(out, static_cast<std::uint64_t>(n));
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(acc + 63);
                acc = bits = 0;
            }
        }
    if (bits > 0)
        out += static_cast<char>((acc << (6 - bits)) + 63);
    return out;
}

/// Accepts an optional ">>graph6<<" header and trailing newline.
inline Graph graph6_decode(std::string_view text)
{
    const std::size_t header = text.substr(0, 10) == ">>graph6<<" ? 10 : 0;
    text = detail::strip(text, ">>graph6<<");
    std::size_t pos = 0;
    const std::uint64_t n = detail::read_size(text, pos);
    if (n > static_cast<std::uint64_t>(max_order))
        throw CapacityError("graph6 order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
    const std::uint64_t pair_bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (pair_bits + 5) / 6;
    if (text.size() - pos != body)
        throw ParseError("expected " + std::to_string(body) + " body bytes, found " + std::to_string(text.size() - pos),
                         header + std::min(text.size(), pos + body));
    GraphBuilder b(static_cast<int>(n));
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int s = detail::sextet(text, pos + k / 6);
            if ((s >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    if (k % 6 != 0) {
        const int last = detail::sextet(text, pos + k / 6);
        if (last & ((1 << (6 - k % 6)) - 1))
            throw ParseError("nonzero padding bits", header + pos + k / 6);
    }
    return std::move(b).build();
}

/// sparse6 reader (":" prefix, optional ">>sparse6<<" header). Multi-edges collapse; loops are rejected.
inline Graph sparse6_decode(std::string_view text)
{
    const std::size_t header = text.substr(0, 11) == ">>sparse6<<" ? 11 : 0;
    text = detail::strip(text, ">>sparse6<<");
    if (text.empty() || text[0] != ':')
        throw ParseError("sparse6 must start with ':'", header);
    std::size_t pos = 1;
    const std::uint64_t n = detail::read_size(text, pos);
    if (n > static_cast<std::uint64_t>(max_order))
        throw CapacityError("sparse6 order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
    int width = 0;
    while ((std::uint64_t{1} << width) < n)
        ++width;

    std::vector<int> stream;
    for (std::size_t i = pos; i < text.size(); ++i) {
        const int s = detail::sextet(text, i);
        for (int b = 5; b >= 0; --b)
            stream.push_back((s >> b) & 1);
    }
    GraphBuilder g(static_cast<int>(n));
    std::uint64_t v = 0;
    std::size_t at = 0;
    while (at + 1 + width <= stream.size()) {
        const std::size_t unit = at;
        if (stream[at++])
            ++v;
        std::uint64_t x = 0;
        for (int i = 0; i < width; ++i)
            x = (x << 1) | static_cast<std::uint64_t>(stream[at++]);
        if (v >= n)
            break;
        if (x > v) {
            v = x;
        } else {
            if (x == v)
                throw ParseError("sparse6 self-loop", header + pos + unit / 6);
            g.add_edge(static_cast<int>(x), static_cast<int>(v));
        }
    }
    return std::move(g).build();
}

/// Dispatches on the leading ':' (sparse6) or header.
inline Graph decode_graph(std::string_view text)
{
    if (text.substr(0, 11) == ">>sparse6<<" || (!text.empty() && text[0] == ':'))
        return sparse6_decode(text);
    return graph6_decode(text);
}

} // namespace bookramsey

#endif
