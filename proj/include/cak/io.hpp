#pragma once

// Reader and writer for the `.cak` colored-graph text format:
//
//   c <comment>          (any number, anywhere)
//   p cak <n> <m>        (exactly one, before any edge line)
//   e <u> <v> <color>    (exactly m; 1-based ids, color in {g,b,w})

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cak/graph.hpp"

namespace cak {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

inline ColoredGraph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  std::size_t declared_edges = 0;
  std::size_t seen_edges = 0;
  ColoredGraph g;
  while (std::getline(in, raw)) {
    ++line;
    auto tok = detail::split_ws(raw);
    if (tok.empty()) continue;
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line, "duplicate header");
      if (tok.size() != 4 || tok[1] != "cak") throw ParseError(line, "header must be 'p cak <n> <m>'");
      g = ColoredGraph(detail::parse_count(tok[2], line, "n"));
      declared_edges = detail::parse_count(tok[3], line, "m");
      have_header = true;
      continue;
    }
    if (tok[0] == "e") {
      if (!have_header) throw ParseError(line, "edge before header");
      if (tok.size() != 4) throw ParseError(line, "edge must be 'e <u> <v> <color>'");
      const std::size_t u = detail::parse_count(tok[1], line, "u");
      const std::size_t v = detail::parse_count(tok[2], line, "v");
      if (u == 0 || v == 0 || u > g.order() || v > g.order())
        throw ParseError(line, "vertex id out of range 1.." + std::to_string(g.order()));
      Color c;
      if (tok[3] == "g") c = Color::Gray;
      else if (tok[3] == "b") c = Color::Black;
      else if (tok[3] == "w") c = Color::White;
      else throw ParseError(line, "unknown color '" + std::string(tok[3]) + "'");
      try {
        g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), c);
      } catch (const GraphError& e) {
        throw ParseError(line, e.what());
      }
      ++seen_edges;
      continue;
    }
    throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!have_header) throw ParseError(line, "missing header");
  if (seen_edges != declared_edges)
    throw ParseError(line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                               std::to_string(seen_edges));
  return g;
}

inline ColoredGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline std::string serialize_graph(const ColoredGraph& g) {
  std::string out = "p cak " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " ";
    out += color_letter(e.color);
    out += '\n';
  }
  return out;
}

inline ColoredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_graph(in);
}

inline void write_graph_file(const std::string& path, const ColoredGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize_graph(g);
}

}  // namespace cak
