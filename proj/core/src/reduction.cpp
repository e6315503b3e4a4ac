#include "densepm/reduction.hpp"

#include <algorithm>
#include <exception>
#include <future>
#include <string>
#include <vector>

#include "densepm/errors.hpp"
#include "densepm/hankel.hpp"
#include "densepm/linalg.hpp"

namespace densepm {

std::optional<Construction> parse_construction(std::string_view name) {
  if (name == "beta") return Construction::Beta;
  if (name == "alpha") return Construction::Alpha;
  return std::nullopt;
}

std::string_view construction_name(Construction c) {
  return c == Construction::Beta ? "beta" : "alpha";
}

std::size_t default_max_n(Construction c) {
  return c == Construction::Beta ? kDefaultBetaMaxN : kDefaultAlphaMaxN;
}

namespace {

void require_simple_balanced(const BipartiteMultigraph& g) {
  if (!g.balanced())
    throw InputError("reduction needs a balanced bipartite graph, got " + std::to_string(g.n_left()) +
                     " x " + std::to_string(g.n_right()));
  if (!g.simple()) throw InputError("reduction needs a simple bipartite graph (no parallel edges)");
}

template <class CountAt>
ExactVector query_oracle(std::size_t calls, CountAt count_at, bool concurrent) {
  ExactVector p(calls);
  if (!concurrent) {
    for (std::size_t i = 0; i < calls; ++i) p[i] = count_at(i);
    return p;
  }
  std::vector<std::future<BigInt>> pending;
  pending.reserve(calls);
  for (std::size_t i = 0; i < calls; ++i)
    pending.push_back(std::async(std::launch::async, [&count_at, i] { return count_at(i); }));
  // get() on every future first so no thread outlives this frame.
  std::exception_ptr first_error;
  for (std::size_t i = 0; i < calls; ++i) {
    try {
      p[i] = pending[i].get();
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return p;
}

// Solves system * x = p, where x = (m_n, ..., m_0), and returns m in
// increasing order of matching size.
MatchingPolynomial recover(const ExactMatrix& system, const ExactVector& p) {
  const std::size_t n = p.size() - 1;
  ExactVector x;
  try {
    x = solve_symmetric_exact(system, p);
  } catch (const OracleInconsistencyError& e) {
    throw OracleInconsistencyError(n - e.index(), "counts give a fractional m_" + std::to_string(n - e.index()));
  }
  MatchingPolynomial m;
  m.counts.assign(x.rbegin(), x.rend());
  for (std::size_t j = 0; j <= n; ++j)
    if (m.counts[j] < 0)
      throw OracleInconsistencyError(j, "counts give m_" + std::to_string(j) + " = " + to_decimal(m.counts[j]));
  return m;
}

}  // namespace

ReductionReport reduce_beta(const BipartiteMultigraph& g, const CountOracle& oracle,
                            ReductionOptions options) {
  require_simple_balanced(g);
  const std::size_t n = g.n_left();
  ReductionReport report;
  report.construction = Construction::Beta;
  report.n = n;
  report.p = query_oracle(
      n + 1, [&](std::size_t i) { return oracle.count(augment_beta(g, i)); },
      options.concurrent_oracle_calls);
  report.oracle_calls = n + 1;
  report.recovered = recover(build_A(n), report.p);
  return report;
}

ReductionReport reduce_alpha(const BipartiteMultigraph& g, const CountOracle& oracle,
                             ReductionOptions options) {
  require_simple_balanced(g);
  const std::size_t n = g.n_left();
  ReductionReport report;
  report.construction = Construction::Alpha;
  report.n = n;
  report.p = query_oracle(
      n + 1, [&](std::size_t i) { return oracle.count(augment_alpha(g, i)); },
      options.concurrent_oracle_calls);
  report.oracle_calls = n + 1;
  report.recovered = recover(build_Q(n), report.p);
  return report;
}

ReductionReport reduce(Construction c, const BipartiteMultigraph& g, const CountOracle& oracle,
                       ReductionOptions options) {
  return c == Construction::Beta ? reduce_beta(g, oracle, options) : reduce_alpha(g, oracle, options);
}

ReductionReport verify_roundtrip(const BipartiteMultigraph& g, Construction c,
                                 std::optional<std::size_t> max_n, ReductionOptions options) {
  const std::size_t cap = max_n.value_or(default_max_n(c));
  if (g.n_left() > cap || g.n_right() > cap)
    throw ResourceLimitError(std::string(construction_name(c)) + " round trip is capped at n = " +
                             std::to_string(cap));
  // The largest alpha instance has 4n vertices; raise the general counter's cap to match.
  const ExactCountOracle oracle(std::max(kDefaultMaxVertices, 4 * cap));
  ReductionReport report = reduce(c, g, oracle, options);
  report.verified = report.recovered == matchings_by_size(g, std::max(cap, kDefaultMaxMatchingSide));
  return report;
}

}  // namespace densepm
