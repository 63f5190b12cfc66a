#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cubicity/graph.hpp"

namespace cubicity {

/// Parse failure carrying the 1-based line it refers to (0 = whole input).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Line-oriented text format:
//   c <anything>             comment
//   p bipartite <n1> <n2> <m>
//   e <a-index> <b-index>    m times, 1-based
BipartiteGraph parse_graph(std::string_view text);

/// Canonical form: header, then edges sorted by (a, b).
std::string serialize_graph(const BipartiteGraph& g);

BipartiteGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const BipartiteGraph& g);

}  // namespace cubicity
