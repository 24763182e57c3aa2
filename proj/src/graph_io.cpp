#include "atx/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace atx {

GraphFormat parse_format(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    if (name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
    if (name == "auto" || name.empty()) return GraphFormat::Auto;
    fail(ErrorCode::InvalidParameter, "unknown graph format '" + std::string(name) + "'");
}

namespace {

struct Tokenizer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    long long integer() {
        skip_space();
        std::size_t start = pos;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos) throw ParseError(start, "expected integer");
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
            throw ParseError(pos, "unexpected character");
        return value;
    }
};

} // namespace

Graph parse_edgelist(std::string_view text) {
    Tokenizer tok{text};
    if (tok.done()) throw ParseError(0, "empty edge list");
    std::size_t count_at = tok.pos;
    long long n = tok.integer();
    if (n < 0 || n > 1'000'000) throw ParseError(count_at, "invalid vertex count");
    std::vector<Edge> edges;
    while (!tok.done()) {
        std::size_t at = tok.pos;
        long long u = tok.integer();
        if (tok.done()) throw ParseError(tok.pos, "edge missing second endpoint");
        long long v = tok.integer();
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(at, "endpoint out of range");
        if (u == v) throw ParseError(at, "loop");
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    try {
        return make_graph(static_cast<int>(n), edges);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DuplicateEdge) throw ParseError(count_at, e.what());
        throw;
    }
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.n() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) pos = header.size();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError(i, "truncated graph6");
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError(i, "byte outside graph6 range");
        return c - 63;
    };
    long long n = byte_at(pos);
    ++pos;
    if (n == 63) {
        if (byte_at(pos) == 63) throw ParseError(pos, "graphs above 258047 vertices are not supported");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
    }
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError(text.size() < pos + bytes ? text.size() : pos + bytes, "graph6 length does not match vertex count");
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int word = byte_at(pos + k / 6);
            if ((word >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    if (bytes > 0 && bits % 6 != 0) {
        int tail = byte_at(pos + bytes - 1);
        if (tail & ((1 << (6 - bits % 6)) - 1)) throw ParseError(pos + bytes - 1, "nonzero graph6 padding");
    }
    return make_graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    const long long n = g.n();
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        if (n > 258047) fail(ErrorCode::TooLarge, "graph6 output limited to 258047 vertices");
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int word = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::Auto) {
        std::size_t i = 0;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == text.size()) throw ParseError(i, "empty input");
        format = std::isdigit(static_cast<unsigned char>(text[i])) ? GraphFormat::EdgeList : GraphFormat::Graph6;
        if (format == GraphFormat::Graph6) text.remove_prefix(i);
    }
    return format == GraphFormat::EdgeList ? parse_edgelist(text) : parse_graph6(text);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const Error& e) {
            throw ParseError(lineno, std::string("line: ") + e.what());
        }
    }
    return graphs;
}

std::string graph_to_dot(const Graph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace atx
