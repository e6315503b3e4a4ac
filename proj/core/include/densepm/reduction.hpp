#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "densepm/counting.hpp"
#include "densepm/exact_matrix.hpp"
#include "densepm/graphs.hpp"

namespace densepm {

/// Which dense family the input graph is embedded into.
///   beta:  complete bipartite overlay (parallel edges), system matrix A_n
///   alpha: cliques on both sides, system matrix Q_n
enum class Construction { Beta, Alpha };

std::optional<Construction> parse_construction(std::string_view name);
std::string_view construction_name(Construction c);

struct ReductionReport {
  Construction construction = Construction::Beta;
  std::size_t n = 0;
  ExactVector p;                    // oracle counts for G_0..G_n
  MatchingPolynomial recovered;     // m_0..m_n
  std::size_t oracle_calls = 0;
  std::optional<bool> verified;     // set by verify_roundtrip
};

struct ReductionOptions {
  /// Issue the n+1 oracle calls on separate threads. Results are assembled by
  /// index, so the report is identical either way.
  bool concurrent_oracle_calls = false;
};

/// Recovers the matching polynomial of a balanced simple bipartite graph from
/// perfect-matching counts of the n+1 graphs augment_beta(g, i). The counts
/// satisfy p_i = sum_j (n+i-j)! m_j, i.e. p = A_n (m_n, ..., m_0).
///
/// Throws InputError for unbalanced or non-simple input and
/// OracleInconsistencyError (index = matching size j) when the counts admit no
/// nonnegative integer solution.
ReductionReport reduce_beta(const BipartiteMultigraph& g, const CountOracle& oracle,
                            ReductionOptions options = {});

/// As reduce_beta, over augment_alpha(g, i) and p_i = sum_j f(n+i-j)^2 m_j.
ReductionReport reduce_alpha(const BipartiteMultigraph& g, const CountOracle& oracle,
                             ReductionOptions options = {});

ReductionReport reduce(Construction c, const BipartiteMultigraph& g, const CountOracle& oracle,
                       ReductionOptions options = {});

inline constexpr std::size_t kDefaultBetaMaxN = 8;
inline constexpr std::size_t kDefaultAlphaMaxN = 5;

std::size_t default_max_n(Construction c);

/// Runs the reduction with the built-in exact oracle and compares the result
/// against matchings_by_size(g). Throws ResourceLimitError when n exceeds
/// `max_n` (defaults: 8 for beta, 5 for alpha).
ReductionReport verify_roundtrip(const BipartiteMultigraph& g, Construction c,
                                 std::optional<std::size_t> max_n = std::nullopt,
                                 ReductionOptions options = {});

}  // namespace densepm
