#include "packlab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "packlab/errors.hpp"

namespace packlab {

namespace {

struct Token {
    std::string_view text;
    std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), i});
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(const Token& t, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError("expected a non-negative integer, got '" + std::string(t.text) + "'", line_no, t.offset);
    return value;
}

// graph6 size limits for the 1-, 4- and 8-byte vertex-count encodings.
constexpr std::uint64_t kSmallN = 62;
constexpr std::uint64_t kMediumN = 258047;
constexpr std::uint64_t kLargeN = 68719476735ULL;

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens.front().text.front() == '#') continue;
        if (tokens.size() != 2) {
            const std::size_t off = tokens.size() > 2 ? tokens[2].offset : line.size();
            throw ParseError(have_header ? "edge line must contain exactly two vertex ids"
                                         : "header must be 'n m'",
                             line_no, off);
        }
        const std::uint64_t a = parse_uint(tokens[0], line_no);
        const std::uint64_t b = parse_uint(tokens[1], line_no);
        if (!have_header) {
            if (a > 0xFFFFFFFFULL) throw ParseError("vertex count too large", line_no, tokens[0].offset);
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (edges.size() == m) throw ParseError("more edge lines than announced in the header", line_no, 0);
        if (a >= n) throw ParseError("vertex id out of range", line_no, tokens[0].offset);
        if (b >= n) throw ParseError("vertex id out of range", line_no, tokens[1].offset);
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) throw ParseError("missing 'n m' header", line_no, 0);
    if (edges.size() != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                         line_no, 0);
    return build_graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    std::size_t pos = 0;
    auto byte_at = [&](std::size_t i) -> std::uint64_t {
        if (i >= text.size()) throw ParseError("graph6 string truncated", 1, i);
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 character out of range 63..126", 1, i);
        return c - 63U;
    };
    std::uint64_t n = 0;
    if (text.empty()) throw ParseError("empty graph6 string", 1, 0);
    if (byte_at(0) < 63) {
        n = byte_at(0);
        pos = 1;
    } else if (text.size() > 1 && byte_at(1) < 63) {
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
        pos = 4;
    } else {
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte_at(i);
        pos = 8;
    }
    if (n > 0xFFFFFFFFULL) throw ParseError("vertex count too large", 1, 0);
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t groups = (bits + 5) / 6;
    if (text.size() - pos != groups)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                             std::to_string(groups),
                         1, pos);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const std::uint64_t group = byte_at(pos + k / 6);
            if ((group >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
        }
    // Padding bits must be zero.
    if (bits % 6 != 0) {
        const std::uint64_t last = byte_at(pos + groups - 1);
        if (last & ((1U << (6 - bits % 6)) - 1)) throw ParseError("non-zero graph6 padding bits", 1, pos + groups - 1);
    }
    return build_graph(n, edges);
}

std::string format_graph6(const Graph& g) {
    const std::uint64_t n = g.vertex_count();
    std::string out;
    if (n <= kSmallN) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= kMediumN) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
    } else if (n <= kLargeN) {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
    } else {
        throw InputError("graph too large for graph6");
    }
    unsigned group = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    out.push_back('\n');
    return out;
}

Graph decode_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string encode_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? format_graph6(g) : format_edge_list(g);
}

GraphFormat format_from_path(std::string_view path) {
    return path.ends_with(".g6") ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
}

}  // namespace packlab
