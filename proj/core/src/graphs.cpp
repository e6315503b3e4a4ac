#include "densepm/graphs.hpp"

#include <numeric>
#include <string>

#include "densepm/errors.hpp"

namespace densepm {

BipartiteMultigraph::BipartiteMultigraph(std::size_t n_left, std::size_t n_right)
    : n_left_(n_left), n_right_(n_right), mult_(n_left * n_right, 0) {}

BipartiteMultigraph BipartiteMultigraph::from_rows(
    const std::vector<std::vector<Multiplicity>>& rows) {
  const std::size_t n_right = rows.empty() ? 0 : rows.front().size();
  BipartiteMultigraph g(rows.size(), n_right);
  for (std::size_t u = 0; u < rows.size(); ++u) {
    if (rows[u].size() != n_right) throw InputError("ragged multiplicity matrix");
    for (std::size_t v = 0; v < n_right; ++v) g.mult_[u * n_right + v] = rows[u][v];
  }
  return g;
}

bool BipartiteMultigraph::simple() const noexcept {
  for (auto m : mult_)
    if (m > 1) return false;
  return true;
}

void BipartiteMultigraph::check_index(std::size_t u, std::size_t v) const {
  if (u >= n_left_ || v >= n_right_)
    throw InputError("bipartite vertex pair (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") out of range");
}

BipartiteMultigraph::Multiplicity BipartiteMultigraph::multiplicity(std::size_t u,
                                                                   std::size_t v) const {
  check_index(u, v);
  return mult_[u * n_right_ + v];
}

void BipartiteMultigraph::set_multiplicity(std::size_t u, std::size_t v, Multiplicity m) {
  check_index(u, v);
  mult_[u * n_right_ + v] = m;
}

void BipartiteMultigraph::add_edge(std::size_t u, std::size_t v, Multiplicity m) {
  check_index(u, v);
  mult_[u * n_right_ + v] += m;
}

BipartiteMultigraph::Multiplicity BipartiteMultigraph::total_multiplicity() const noexcept {
  return std::accumulate(mult_.begin(), mult_.end(), Multiplicity{0});
}

SimpleGraph::SimpleGraph(std::size_t n_vertices) : n_(n_vertices), adj_(n_vertices * n_vertices, 0) {}

void SimpleGraph::check_vertex(std::size_t u) const {
  if (u >= n_) throw InputError("vertex " + std::to_string(u) + " out of range");
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u * n_ + v] != 0;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  adj_[u * n_ + v] = 1;
  adj_[v * n_ + u] = 1;
}

std::size_t SimpleGraph::edge_count() const noexcept {
  return static_cast<std::size_t>(std::accumulate(adj_.begin(), adj_.end(), std::size_t{0})) / 2;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

SimpleGraph SimpleGraph::from_bipartite(const BipartiteMultigraph& g) {
  if (!g.simple()) throw InputError("bipartite graph has parallel edges");
  SimpleGraph out(g.n_left() + g.n_right());
  for (std::size_t u = 0; u < g.n_left(); ++u)
    for (std::size_t v = 0; v < g.n_right(); ++v)
      if (g.multiplicity(u, v) != 0) out.add_edge(u, g.n_left() + v);
  return out;
}

BipartiteMultigraph augment_beta(const BipartiteMultigraph& g, std::size_t i) {
  if (!g.balanced())
    throw InputError("complete-bipartite overlay requires equal sides, got " +
                     std::to_string(g.n_left()) + " x " + std::to_string(g.n_right()));
  const std::size_t n = g.n_left();
  BipartiteMultigraph out(n + i, n + i);
  for (std::size_t u = 0; u < n + i; ++u)
    for (std::size_t v = 0; v < n + i; ++v)
      out.set_multiplicity(u, v, (u < n && v < n ? g.multiplicity(u, v) : 0) + 1);
  return out;
}

SimpleGraph augment_alpha(const BipartiteMultigraph& g, std::size_t i) {
  if (!g.balanced())
    throw InputError("side-clique construction requires equal sides, got " +
                     std::to_string(g.n_left()) + " x " + std::to_string(g.n_right()));
  if (!g.simple()) throw InputError("side-clique construction requires a simple bipartite graph");
  const std::size_t n = g.n_left();
  const std::size_t side = n + i;
  SimpleGraph out(2 * side);
  for (std::size_t u = 0; u < side; ++u)
    for (std::size_t v = u + 1; v < side; ++v) {
      out.add_edge(u, v);
      out.add_edge(side + u, side + v);
    }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (g.multiplicity(u, v) != 0) out.add_edge(u, side + v);
  return out;
}

namespace {

// Extends an independent set whose members are all < next; `need` more
// vertices are required.
bool has_independent_set(const SimpleGraph& g, std::vector<std::size_t>& chosen, std::size_t next,
                         std::size_t need) {
  if (need == 0) return true;
  for (std::size_t v = next; v + need <= g.n_vertices(); ++v) {
    bool free = true;
    for (auto c : chosen)
      if (g.adjacent(c, v)) {
        free = false;
        break;
      }
    if (!free) continue;
    chosen.push_back(v);
    if (has_independent_set(g, chosen, v + 1, need - 1)) return true;
    chosen.pop_back();
  }
  return false;
}

// `candidates` holds right vertices with zero multiplicity to every chosen left
// vertex.
bool has_biclique_free_pair(const BipartiteMultigraph& g, const std::vector<std::size_t>& candidates,
                            std::size_t next_left, std::size_t need_left, std::size_t target) {
  if (candidates.size() < target) return false;
  if (need_left == 0) return true;
  for (std::size_t u = next_left; u + need_left <= g.n_left(); ++u) {
    std::vector<std::size_t> narrowed;
    narrowed.reserve(candidates.size());
    for (auto v : candidates)
      if (g.multiplicity(u, v) == 0) narrowed.push_back(v);
    if (has_biclique_free_pair(g, narrowed, u + 1, need_left - 1, target)) return true;
  }
  return false;
}

}  // namespace

bool independence_at_most(const SimpleGraph& g, std::size_t k) {
  std::vector<std::size_t> chosen;
  return !has_independent_set(g, chosen, 0, k + 1);
}

bool bipartite_independence_at_most(const BipartiteMultigraph& g, std::size_t k) {
  std::vector<std::size_t> all_right(g.n_right());
  std::iota(all_right.begin(), all_right.end(), std::size_t{0});
  return !has_biclique_free_pair(g, all_right, 0, k + 1, k + 1);
}

}  // namespace densepm
