#include "cubicity/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace cubicity {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<long long> to_int(std::string_view tok) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return v;
}

struct Header {
    int n1;
    int n2;
    long long m;
};

}  // namespace

BipartiteGraph parse_graph(std::string_view text) {
    std::optional<Header> header;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;

        if (tok[0] == "p") {
            if (header) throw ParseError(line_no, "second header line");
            if (tok.size() != 5 || tok[1] != "bipartite")
                throw ParseError(line_no, "malformed header, expected 'p bipartite <n1> <n2> <m>'");
            auto n1 = to_int(tok[2]);
            auto n2 = to_int(tok[3]);
            auto m = to_int(tok[4]);
            if (!n1 || !n2 || !m) throw ParseError(line_no, "malformed header: non-integer field");
            if (*n1 < 1 || *n2 < 1 || *n1 > 1'000'000'000 || *n2 > 1'000'000'000)
                throw ParseError(line_no, "malformed header: side sizes must be positive");
            if (*m < 0 || *m > *n1 * *n2)
                throw ParseError(line_no, "malformed header: edge count out of range");
            header = Header{static_cast<int>(*n1), static_cast<int>(*n2), *m};
            edges.reserve(static_cast<std::size_t>(*m));
            continue;
        }

        if (tok[0] == "e") {
            if (!header) throw ParseError(line_no, "edge before header");
            if (tok.size() != 3) throw ParseError(line_no, "malformed edge, expected 'e <a> <b>'");
            auto a = to_int(tok[1]);
            auto b = to_int(tok[2]);
            if (!a || !b) throw ParseError(line_no, "malformed edge: non-integer index");
            if (*a < 1 || *a > header->n1)
                throw ParseError(line_no, "A-index " + std::string(tok[1]) + " out of range 1.." +
                                              std::to_string(header->n1));
            if (*b < 1 || *b > header->n2)
                throw ParseError(line_no, "B-index " + std::string(tok[2]) + " out of range 1.." +
                                              std::to_string(header->n2));
            Edge e{static_cast<int>(*a), static_cast<int>(*b)};
            if (!seen.insert(e).second)
                throw ParseError(line_no, "duplicate edge " + std::to_string(e.a) + " " +
                                              std::to_string(e.b));
            edges.push_back(e);
            continue;
        }

        throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }

    if (!header) throw ParseError(line_no, "missing 'p bipartite' header");
    if (static_cast<long long>(edges.size()) != header->m)
        throw ParseError(line_no, "header declares " + std::to_string(header->m) +
                                      " edges, found " + std::to_string(edges.size()));
    return BipartiteGraph(header->n1, header->n2, std::move(edges));
}

std::string serialize_graph(const BipartiteGraph& g) {
    std::ostringstream os;
    os << "p bipartite " << g.a_count() << ' ' << g.b_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) os << "e " << e.a << ' ' << e.b << '\n';
    return os.str();
}

BipartiteGraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void write_graph_file(const std::filesystem::path& path, const BipartiteGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_graph(g);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace cubicity
