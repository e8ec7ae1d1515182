#pragma once

#include <kempe/error.hpp>
#include <kempe/graph.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kempe {

// graph6 (McKay). Bits of the upper triangle are read column by column:
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six per byte, each byte + 63.

inline auto to_graph6(const Graph & g) -> std::string
{
    const auto n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + 63));
    else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
    else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }

    unsigned acc = 0;
    int filled = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

inline auto from_graph6(std::string_view text) -> Graph
{
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        pos = header.size();
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    auto sextet = [&](std::size_t at) -> unsigned {
        if (at >= text.size())
            throw ParseError("graph6: truncated input at byte " + std::to_string(at), at);
        auto c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(at) + " is outside the printable range 63..126", at);
        return c - 63U;
    };

    std::uint64_t n = 0;
    if (pos >= text.size())
        throw ParseError("graph6: missing vertex-count header at byte " + std::to_string(pos), pos);
    if (static_cast<unsigned char>(text[pos]) != 126) {
        n = sextet(pos);
        pos += 1;
    }
    else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
        for (std::size_t k = 0; k < 6; ++k)
            n = (n << 6) | sextet(pos + 2 + k);
        pos += 8;
    }
    else {
        for (std::size_t k = 0; k < 3; ++k)
            n = (n << 6) | sextet(pos + 1 + k);
        pos += 4;
    }
    if (n > 100000)
        throw ParseError("graph6: vertex count " + std::to_string(n) + " is beyond supported sizes", pos);

    const auto bits = n * (n > 0 ? n - 1 : 0) / 2;
    const auto body = (bits + 5) / 6;
    if (text.size() - pos != body) {
        // first missing byte, or first surplus one
        auto at = std::min<std::size_t>(text.size(), pos + body);
        throw ParseError("graph6: expected " + std::to_string(body) + " data bytes after the header, found " +
                std::to_string(text.size() - pos) + " (byte " + std::to_string(at) + ")",
            at);
    }

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j)
        for (int i = 0; i < j; ++i, ++k) {
            auto byte = pos + k / 6;
            unsigned value = sextet(byte);
            if ((value >> (5 - k % 6)) & 1U)
                edges.emplace_back(i, j);
        }
    if (bits % 6 != 0) {
        auto last = pos + body - 1;
        unsigned pad_mask = (1U << (6 - bits % 6)) - 1U;
        if ((sextet(last) & pad_mask) != 0)
            throw ParseError("graph6: nonzero padding bits in byte " + std::to_string(last), last);
    }
    return Graph(static_cast<int>(n), edges);
}

/// {"n": int, "edges": [[u,v],...]} with u < v.
inline auto graph_to_json(const Graph & g) -> nlohmann::json
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

namespace detail {
    inline auto require_int(const nlohmann::json & j, const std::string & path) -> int
    {
        if (! j.is_number_integer())
            throw ParseError("expected an integer at " + path, 0, path);
        auto v = j.get<long long>();
        if (v < 0 || v > 1000000)
            throw ParseError("integer out of range at " + path, 0, path);
        return static_cast<int>(v);
    }

    inline auto require_array(const nlohmann::json & j, const std::string & path) -> const nlohmann::json &
    {
        if (! j.is_array())
            throw ParseError("expected an array at " + path, 0, path);
        return j;
    }

    inline auto require_field(const nlohmann::json & j, const char * key, const std::string & path) -> const nlohmann::json &
    {
        if (! j.is_object())
            throw ParseError("expected an object at " + (path.empty() ? std::string("/") : path), 0, path);
        auto it = j.find(key);
        if (it == j.end())
            throw ParseError("missing field " + path + "/" + key, 0, path + "/" + key);
        return *it;
    }

    inline auto parse_json_text(std::string_view text) -> nlohmann::json
    {
        try {
            return nlohmann::json::parse(text.begin(), text.end());
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what(), e.byte);
        }
    }
} // namespace detail

/// Strict decoding: u < v, no duplicates, indices in range. Errors carry the
/// JSON path of the offending entry.
inline auto graph_from_json(const nlohmann::json & j, const std::string & path = "") -> Graph
{
    int n = detail::require_int(detail::require_field(j, "n", path), path + "/n");
    const auto & edges_json = detail::require_array(detail::require_field(j, "edges", path), path + "/edges");
    std::vector<Edge> edges;
    std::vector<VertexSet> seen(static_cast<std::size_t>(n), VertexSet(n));
    for (std::size_t i = 0; i < edges_json.size(); ++i) {
        auto ep = path + "/edges/" + std::to_string(i);
        const auto & e = detail::require_array(edges_json[i], ep);
        if (e.size() != 2)
            throw ParseError("edge must have exactly two endpoints at " + ep, 0, ep);
        int u = detail::require_int(e[0], ep + "/0");
        int v = detail::require_int(e[1], ep + "/1");
        if (u >= n || v >= n)
            throw ParseError("vertex index out of range at " + ep, 0, ep);
        if (u == v)
            throw ParseError("self-loop at " + ep, 0, ep);
        if (seen[static_cast<std::size_t>(std::min(u, v))].contains(std::max(u, v)))
            throw ParseError("duplicate edge at " + ep, 0, ep);
        if (u > v)
            throw ParseError("edge endpoints must satisfy u < v at " + ep, 0, ep);
        seen[static_cast<std::size_t>(u)].insert(v);
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

/// Accepts either a JSON document (first non-blank byte '{') or graph6 text.
inline auto parse_graph(std::string_view text) -> Graph
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return graph_from_json(detail::parse_json_text(text));
    if (first != std::string_view::npos)
        text.remove_prefix(first);
    return from_graph6(text);
}

} // namespace kempe
