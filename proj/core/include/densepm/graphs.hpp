#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "densepm/bigint.hpp"

namespace densepm {

/// Bipartite graph with parallel edges, stored as an n_left x n_right matrix of
/// edge multiplicities. The perfect matchings of a balanced instance are
/// counted by the permanent of that matrix.
class BipartiteMultigraph {
 public:
  using Multiplicity = std::uint64_t;

  BipartiteMultigraph() = default;
  BipartiteMultigraph(std::size_t n_left, std::size_t n_right);

  /// Rows are left vertices. Throws InputError on ragged rows.
  static BipartiteMultigraph from_rows(const std::vector<std::vector<Multiplicity>>& rows);

  std::size_t n_left() const noexcept { return n_left_; }
  std::size_t n_right() const noexcept { return n_right_; }
  bool balanced() const noexcept { return n_left_ == n_right_; }
  /// Every multiplicity is 0 or 1.
  bool simple() const noexcept;

  Multiplicity multiplicity(std::size_t u, std::size_t v) const;
  void set_multiplicity(std::size_t u, std::size_t v, Multiplicity m);
  /// Accumulates onto any existing edges between u and v.
  void add_edge(std::size_t u, std::size_t v, Multiplicity m = 1);

  Multiplicity total_multiplicity() const noexcept;

  friend bool operator==(const BipartiteMultigraph&, const BipartiteMultigraph&) = default;

 private:
  void check_index(std::size_t u, std::size_t v) const;

  std::size_t n_left_ = 0;
  std::size_t n_right_ = 0;
  std::vector<Multiplicity> mult_;  // row-major
};

/// Undirected simple graph: symmetric adjacency, no loops.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n_vertices);

  std::size_t n_vertices() const noexcept { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Throws InputError for loops or out-of-range endpoints. Idempotent.
  void add_edge(std::size_t u, std::size_t v);
  std::size_t edge_count() const noexcept;

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph path(std::size_t n);
  /// The bipartite graph with left vertices 0..n_left-1 and right vertices after
  /// them. Throws InputError unless g is simple.
  static SimpleGraph from_bipartite(const BipartiteMultigraph& g);

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(std::size_t u) const;

  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Matching counts m_0..m_k indexed by matching size.
struct MatchingPolynomial {
  std::vector<BigInt> counts;

  /// m_j, or zero past the stored range.
  BigInt operator[](std::size_t j) const { return j < counts.size() ? counts[j] : BigInt(0); }
  std::size_t size() const noexcept { return counts.size(); }

  friend bool operator==(const MatchingPolynomial&, const MatchingPolynomial&) = default;
};

/// Overlays K_{n+i,n+i} on g padded with i fresh vertices per side: every cross
/// multiplicity is incremented by one, including pairs already joined in g.
/// Throws InputError if g is unbalanced.
BipartiteMultigraph augment_beta(const BipartiteMultigraph& g, std::size_t i);

/// Pads each side of g with i fresh vertices and turns each side into a clique.
/// Left vertices are 0..n+i-1, right vertices n+i..2(n+i)-1; the only cross
/// edges are those of g. Throws InputError unless g is balanced and simple.
SimpleGraph augment_alpha(const BipartiteMultigraph& g, std::size_t i);

/// True iff no k+1 vertices are pairwise non-adjacent.
bool independence_at_most(const SimpleGraph& g, std::size_t k);

/// True iff there are no k+1 left and k+1 right vertices with zero cross
/// multiplicity between them.
bool bipartite_independence_at_most(const BipartiteMultigraph& g, std::size_t k);

}  // namespace densepm
