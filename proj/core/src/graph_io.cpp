#include "densepm/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "densepm/errors.hpp"

namespace densepm {
namespace {

constexpr std::uint64_t kMaxVertices = 1u << 15;

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line, const char* what) {
  if (!token.empty() && token.front() == '-')
    throw ParseError(line, std::string("negative ") + what + " '" + std::string(token) + "'");
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  return value;
}

std::uint64_t parse_vertex_count(std::string_view token, std::size_t line) {
  const auto n = parse_count(token, line, "vertex count");
  if (n > kMaxVertices) throw ParseError(line, "vertex count " + std::string(token) + " too large");
  return n;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::optional<Graph> graph;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = split_tokens(raw);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!graph) {
      if (tokens.front() == "bipartite") {
        if (tokens.size() != 3) throw ParseError(line_no, "expected 'bipartite <n_left> <n_right>'");
        graph.emplace(BipartiteMultigraph(parse_vertex_count(tokens[1], line_no),
                                          parse_vertex_count(tokens[2], line_no)));
      } else if (tokens.front() == "general") {
        if (tokens.size() != 2) throw ParseError(line_no, "expected 'general <n>'");
        graph.emplace(SimpleGraph(parse_vertex_count(tokens[1], line_no)));
      } else {
        throw ParseError(line_no, "missing header, expected 'bipartite' or 'general'");
      }
      continue;
    }

    if (tokens.front() != "e") throw ParseError(line_no, "unknown directive '" + std::string(tokens.front()) + "'");
    if (tokens.size() != 3 && tokens.size() != 4)
      throw ParseError(line_no, "expected 'e <u> <v> [mult]'");
    const auto u = parse_count(tokens[1], line_no, "vertex index");
    const auto v = parse_count(tokens[2], line_no, "vertex index");
    const std::uint64_t mult = tokens.size() == 4 ? parse_count(tokens[3], line_no, "multiplicity") : 1;
    if (mult == 0) throw ParseError(line_no, "multiplicity must be at least 1");

    if (auto* bip = std::get_if<BipartiteMultigraph>(&*graph)) {
      if (u >= bip->n_left()) throw ParseError(line_no, "left index " + std::to_string(u) + " out of range");
      if (v >= bip->n_right()) throw ParseError(line_no, "right index " + std::to_string(v) + " out of range");
      if (bip->multiplicity(u, v) > std::numeric_limits<std::uint64_t>::max() - mult)
        throw ParseError(line_no, "multiplicity overflow");
      bip->add_edge(u, v, mult);
    } else {
      auto& gen = std::get<SimpleGraph>(*graph);
      if (u >= gen.n_vertices() || v >= gen.n_vertices())
        throw ParseError(line_no, "vertex index out of range");
      if (u == v) throw ParseError(line_no, "loop edge at vertex " + std::to_string(u));
      if (mult > 1 || gen.adjacent(u, v))
        throw ParseError(line_no, "general graphs do not allow parallel edges");
      gen.add_edge(u, v);
    }
  }
  if (!graph) throw ParseError(line_no, "empty input, no header found");
  return std::move(*graph);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string serialize(const BipartiteMultigraph& g) {
  std::ostringstream out;
  out << "bipartite " << g.n_left() << ' ' << g.n_right() << '\n';
  for (std::size_t u = 0; u < g.n_left(); ++u)
    for (std::size_t v = 0; v < g.n_right(); ++v) {
      const auto m = g.multiplicity(u, v);
      if (m == 0) continue;
      out << "e " << u << ' ' << v;
      if (m > 1) out << ' ' << m;
      out << '\n';
    }
  return out.str();
}

std::string serialize(const SimpleGraph& g) {
  std::ostringstream out;
  out << "general " << g.n_vertices() << '\n';
  for (std::size_t u = 0; u < g.n_vertices(); ++u)
    for (std::size_t v = u + 1; v < g.n_vertices(); ++v)
      if (g.adjacent(u, v)) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize(const Graph& g) {
  return std::visit([](const auto& concrete) { return serialize(concrete); }, g);
}

}  // namespace densepm
