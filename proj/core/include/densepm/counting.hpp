#pragma once

#include <cstddef>

#include "densepm/bigint.hpp"
#include "densepm/exact_matrix.hpp"
#include "densepm/graphs.hpp"

namespace densepm {

/// Perfect matchings of K_n: (n-1)!! for even n, 0 for odd n, and 1 for n = 0.
BigInt double_factorial_pm(unsigned n);

struct PermanentOptions {
  /// Threads sharing the subset range. Partial sums are exact, so the result
  /// does not depend on this.
  unsigned workers = 1;
};

/// Inclusion-exclusion over column subsets, visited in Gray-code order so each
/// step updates the row sums by a single column. Throws InputError unless m is
/// square. The 0x0 permanent is 1.
BigInt permanent(const ExactMatrix& m, PermanentOptions options = {});

/// Perfect matchings of a bipartite multigraph: the permanent of its
/// multiplicity matrix, or 0 if the sides differ in size.
BigInt count_pm_bipartite(const BipartiteMultigraph& g, PermanentOptions options = {});

inline constexpr std::size_t kDefaultMaxVertices = 24;
inline constexpr std::size_t kDefaultMaxMatchingSide = 20;

/// Perfect matchings of a simple graph by memoized recursion on the set of
/// unmatched vertices, always matching the lowest one next. Throws
/// ResourceLimitError above `max_vertices` (hard ceiling 64).
BigInt count_pm_general(const SimpleGraph& g, std::size_t max_vertices = kDefaultMaxVertices);

/// m_j = number of j-edge matchings, parallel edges counted as distinct, for j
/// up to the smaller side. Subset dynamic program over the smaller side; throws
/// ResourceLimitError when that side exceeds `max_side`.
MatchingPolynomial matchings_by_size(const BipartiteMultigraph& g,
                                     std::size_t max_side = kDefaultMaxMatchingSide);

/// Exact perfect-matching counter injected into the reduction drivers.
/// Implementations must be deterministic and safe to call concurrently.
class CountOracle {
 public:
  virtual ~CountOracle() = default;
  virtual BigInt count(const BipartiteMultigraph& g) const = 0;
  virtual BigInt count(const SimpleGraph& g) const = 0;
};

/// CountOracle backed by count_pm_bipartite and count_pm_general.
class ExactCountOracle final : public CountOracle {
 public:
  explicit ExactCountOracle(std::size_t max_vertices = kDefaultMaxVertices,
                            PermanentOptions permanent_options = {})
      : max_vertices_(max_vertices), permanent_options_(permanent_options) {}

  BigInt count(const BipartiteMultigraph& g) const override {
    return count_pm_bipartite(g, permanent_options_);
  }
  BigInt count(const SimpleGraph& g) const override { return count_pm_general(g, max_vertices_); }

 private:
  std::size_t max_vertices_;
  PermanentOptions permanent_options_;
};

}  // namespace densepm
