#include "indtree/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "indtree/errors.hpp"

namespace indtree {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<int> parse_label(std::string_view tok) {
    long long value = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        return std::nullopt;
    if (value < 0 || value > INT32_MAX)
        return std::nullopt;
    return static_cast<int>(value);
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    Graph g;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;

        auto toks = split_ws(line);
        if (toks.size() == 2 && toks[0] == "v") {
            auto id = parse_label(toks[1]);
            if (!id)
                throw ParseError("bad vertex id '" + std::string(toks[1]) + "'", line_no);
            g.add_vertex(*id);
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("expected two integers", line_no);
        auto u = parse_label(toks[0]);
        auto v = parse_label(toks[1]);
        if (!u || !v)
            throw ParseError("expected two nonnegative integers", line_no);
        if (*u == *v)
            throw ParseError("self-loop at vertex " + std::to_string(*u), line_no);
        if (g.has_edge(*u, *v))
            throw ParseError("duplicate edge " + std::to_string(*u) + " " + std::to_string(*v),
                             line_no);
        g.add_edge(*u, *v);
    }
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, nbrs] : g.adjacency())
        for (int v : nbrs)
            if (u < v)
                out << u << " " << v << "\n";
    for (const auto& [u, nbrs] : g.adjacency())
        if (nbrs.empty())
            out << "v " << u << "\n";
    return out.str();
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

class BitReader {
public:
    BitReader(std::string_view data, std::size_t offset) : data_(data), pos_(offset) {}

    // Next packed bit, MSB first within each 6-bit group.
    int next() {
        if (shift_ < 0) {
            if (pos_ >= data_.size())
                throw ParseError("truncated graph6 bit stream");
            unsigned char c = static_cast<unsigned char>(data_[pos_++]);
            if (c < 63 || c > 126)
                throw ParseError("bad graph6 character (code " + std::to_string(c) + ")");
            group_ = c - 63;
            shift_ = 5;
        }
        return (group_ >> shift_--) & 1;
    }

    std::size_t consumed() const { return pos_; }

private:
    std::string_view data_;
    std::size_t pos_;
    int group_ = 0;
    int shift_ = -1;
};

std::uint64_t read_graph6_order(std::string_view s, std::size_t& pos) {
    auto next_byte = [&]() -> std::uint64_t {
        if (pos >= s.size())
            throw ParseError("truncated graph6 size header");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126)
            throw ParseError("bad graph6 character (code " + std::to_string(c) + ")");
        return c - 63;
    };
    std::uint64_t b = next_byte();
    if (b < 63)
        return b;
    // 126: three bytes (18 bits); 126 126: six bytes (36 bits).
    int groups = 3;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
        ++pos;
        groups = 6;
    }
    std::uint64_t n = 0;
    for (int i = 0; i < groups; ++i)
        n = (n << 6) | next_byte();
    return n;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    std::string_view s = trim(text);
    if (s.rfind(">>", 0) == 0) {
        if (s.rfind(kGraph6Header, 0) != 0)
            throw ParseError("unrecognized header (expected '>>graph6<<')");
        s.remove_prefix(kGraph6Header.size());
    }
    if (s.empty())
        throw ParseError("empty graph6 input");

    std::size_t pos = 0;
    std::uint64_t n64 = read_graph6_order(s, pos);
    if (n64 > 1'000'000)
        throw ParseError("graph6 order too large: " + std::to_string(n64));
    int n = static_cast<int>(n64);

    Graph g;
    for (int v = 0; v < n; ++v)
        g.add_vertex(v);

    BitReader bits(s, pos);
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (bits.next())
                g.add_edge(row, col);
    if (bits.consumed() != s.size())
        throw ParseError("trailing data after graph6 bit stream");
    return g;
}

std::string emit_graph6(const Graph& g) {
    std::size_t n = g.vertex_count();
    std::string out;

    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
    }

    // Relabel to 0..n-1 in ascending label order.
    std::map<int, int> id;
    for (int v : g.vertices())
        id.emplace(v, static_cast<int>(id.size()));

    std::vector<bool> upper(n * (n - 1) / 2 + 1, false);
    for (const auto& [u, nbrs] : g.adjacency()) {
        for (int w : nbrs) {
            if (u >= w)
                continue;
            std::size_t i = id[u], j = id[w];
            if (i > j)
                std::swap(i, j);
            upper[j * (j - 1) / 2 + i] = true;
        }
    }

    int group = 0, filled = 0;
    std::size_t total = n * (n - 1) / 2;
    for (std::size_t b = 0; b < total; ++b) {
        group = (group << 1) | (upper[b] ? 1 : 0);
        if (++filled == 6) {
            out.push_back(static_cast<char>(group + 63));
            group = 0;
            filled = 0;
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

GraphFormat detect_format(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;
        auto toks = split_ws(line);
        if (toks.size() == 2 && (toks[0] == "v" || parse_label(toks[0])) && parse_label(toks[1]))
            return GraphFormat::edgelist;
        return GraphFormat::graph6;
    }
    return GraphFormat::edgelist; // nothing but comments/blank lines: empty edge list
}

} // namespace indtree
