#pragma once

#include <algorithm>
#include <type_traits>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qdecomp/errors.hpp"
#include "qdecomp/graph.hpp"
#include "qdecomp/rng.hpp"

namespace qdecomp {

/// Parameter bundle for hypothesis checks and retry budgets.
///
/// p, eps: lower-regularity density and slack. eta: allowed degree spread as a
/// fraction of n. alpha: minimum-degree fraction. nu, tau: robust expansion.
struct QuasirandomParams {
  double p = 0.5;
  double eps = 0.1;
  double eta = 0.1;
  double alpha = 0.25;
  double nu = 0.1;
  double tau = 0.2;
  int retry_budget = 100;
  int backtrack_depth = 3;

  /// Default experiment profile for density p.
  static QuasirandomParams for_density(double p) {
    QuasirandomParams q;
    q.p = p;
    q.alpha = p / 2;
    q.nu = q.eps;
    return q;
  }

  void validate() const {
    require(p > 0 && p < 1, "p must lie in (0,1)");
    require(eps > 0 && eps <= eta && eta <= 1, "need 0 < eps <= eta <= 1");
    require(nu > 0 && nu <= tau && tau < 1, "need 0 < nu <= tau < 1");
    require(alpha > 0 && alpha < 1, "alpha must lie in (0,1)");
    require(retry_budget >= 1, "retry_budget must be positive");
    require(backtrack_depth >= 0, "backtrack_depth must be non-negative");
  }
};

/// G(n,p) with one uniform draw per vertex pair in canonical order
/// (u ascending, then v ascending), engine mt19937_64 seeded with `seed`.
inline Graph gen_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1, "n must be positive");
  require(p >= 0 && p <= 1, "p must lie in [0,1]");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) g.add_edge(u, v);
  return g;
}

enum class CheckMode { Exact, Sampled };

inline constexpr int kExactCheckLimit = 18;

struct RegularityResult {
  bool regular = true;
  // Violating pair when !regular: e(S,T) < (p - eps)|S||T|.
  std::vector<int> S, T;
  long long edges_between = 0;
};

namespace detail {

inline int min_part_size(double eps, int n) {
  return std::max(1, static_cast<int>(std::ceil(eps * n - 1e-9)));
}

// For a fixed S the cheapest T of each size takes the vertices outside S with
// the fewest (in-)neighbours in S. Fills `res` and returns true on a violation.
inline bool worst_partner(const std::vector<int>& in_from_s, const std::vector<int>& outside, int s_size,
                          int t_min, double density, RegularityResult& res) {
  std::vector<int> order(outside);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return in_from_s[a] < in_from_s[b]; });
  long long sum = 0;
  for (int t = 1; t <= static_cast<int>(order.size()); ++t) {
    sum += in_from_s[order[t - 1]];
    if (t >= t_min && static_cast<double>(sum) < density * s_size * t) {
      res.regular = false;
      res.T.assign(order.begin(), order.begin() + t);
      std::sort(res.T.begin(), res.T.end());
      res.edges_between = sum;
      return true;
    }
  }
  return false;
}

template <class G>
std::vector<std::uint32_t> in_masks(const G& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> m(n, 0);
  for (int v = 0; v < n; ++v) {
    if constexpr (std::is_same_v<G, Digraph>) {
      for (int u : g.in_neighbors(v)) m[v] |= 1u << u;
    } else {
      for (int u : g.neighbors(v)) m[v] |= 1u << u;
    }
  }
  return m;
}

template <class G>
const std::vector<int>& in_list(const G& g, int v) {
  if constexpr (std::is_same_v<G, Digraph>) {
    return g.in_neighbors(v);
  } else {
    return g.neighbors(v);
  }
}

}  // namespace detail

/// Checks e(S,T) >= (p - eps)|S||T| for disjoint S,T with |S|,|T| >= eps*n.
/// For digraphs e(S,T) counts arcs from S to T.
///
/// Exact mode enumerates every S (n <= 18) and pairs it with the worst T.
/// Sampled mode draws `sample_count` random sets S; it is one-sided: a
/// reported violation is always genuine.
template <class G>
RegularityResult lower_regularity_check(const G& g, double p, double eps, CheckMode mode,
                                        int sample_count = 10000, std::uint64_t seed = 0) {
  const int n = g.vertex_count();
  const int t_min = detail::min_part_size(eps, n);
  const double density = p - eps;
  RegularityResult res;
  if (2 * t_min > n) return res;

  if (mode == CheckMode::Exact) {
    if (n > kExactCheckLimit)
      fail(ErrorCode::UsageError, "exact regularity check limited to n <= 18 (got " + std::to_string(n) + ")");
    const auto masks = detail::in_masks(g);
    std::vector<int> in_from_s(n), outside;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      int sz = std::popcount(s);
      if (sz < t_min || n - sz < t_min) continue;
      outside.clear();
      for (int v = 0; v < n; ++v) {
        if (s >> v & 1u) continue;
        in_from_s[v] = std::popcount(masks[v] & s);
        outside.push_back(v);
      }
      if (detail::worst_partner(in_from_s, outside, sz, t_min, density, res)) {
        for (int v = 0; v < n; ++v)
          if (s >> v & 1u) res.S.push_back(v);
        return res;
      }
    }
    return res;
  }

  Rng rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> in_s(n);
  std::vector<int> in_from_s(n), outside;
  for (int it = 0; it < sample_count; ++it) {
    int sz = t_min + static_cast<int>(uniform_index(rng, static_cast<std::size_t>(n - 2 * t_min + 1)));
    shuffle(perm, rng);
    std::fill(in_s.begin(), in_s.end(), 0);
    for (int i = 0; i < sz; ++i) in_s[perm[i]] = 1;
    outside.clear();
    for (int v = 0; v < n; ++v) {
      if (in_s[v]) continue;
      int c = 0;
      for (int u : detail::in_list(g, v)) c += in_s[u];
      in_from_s[v] = c;
      outside.push_back(v);
    }
    if (detail::worst_partner(in_from_s, outside, sz, t_min, density, res)) {
      for (int v = 0; v < n; ++v)
        if (in_s[v]) res.S.push_back(v);
      return res;
    }
  }
  return res;
}

struct ExpansionResult {
  bool expander = true;
  std::vector<int> S;  // witness with |RN(S)| < |S| + nu*n when !expander
  int robust_neighbourhood = 0;
};

/// Brute force over all S with tau*n <= |S| <= (1-tau)*n (n <= 18). The
/// robust (out)neighbourhood collects vertices with >= nu*n (in-)neighbours in S.
template <class G>
ExpansionResult robust_expander_check(const G& g, double nu, double tau) {
  const int n = g.vertex_count();
  if (n > kExactCheckLimit)
    fail(ErrorCode::UsageError, "robust expansion check limited to n <= 18 (got " + std::to_string(n) + ")");
  const auto masks = detail::in_masks(g);
  const double thresh = nu * n;
  ExpansionResult res;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int sz = std::popcount(s);
    if (sz < tau * n - 1e-9 || sz > (1 - tau) * n + 1e-9) continue;
    int rn = 0;
    for (int v = 0; v < n; ++v)
      if (std::popcount(masks[v] & s) >= thresh - 1e-9) ++rn;
    if (rn < sz + thresh - 1e-9) {
      res.expander = false;
      res.robust_neighbourhood = rn;
      for (int v = 0; v < n; ++v)
        if (s >> v & 1u) res.S.push_back(v);
      return res;
    }
  }
  return res;
}

/// Runtime versions of the standard whp properties of G(n,p).
struct GnpDiagnostics {
  int max_degree = 0;
  int min_degree = 0;
  double spread_bound = 0;  // 4 sqrt(n ln n)
  bool spread_ok = false;
  bool unique_max = false;
  int odd_count = 0;
  double odd_fraction = 0;
};

inline GnpDiagnostics gnp_diagnostics(const Graph& g) {
  GnpDiagnostics d;
  const int n = g.vertex_count();
  d.max_degree = g.max_degree();
  d.min_degree = g.min_degree();
  d.spread_bound = n > 1 ? 4.0 * std::sqrt(n * std::log(static_cast<double>(n))) : 0.0;
  d.spread_ok = (d.max_degree - d.min_degree) <= d.spread_bound;
  int at_max = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == d.max_degree) ++at_max;
    if (g.degree(v) % 2) ++d.odd_count;
  }
  d.unique_max = at_max == 1;
  d.odd_fraction = n ? static_cast<double>(d.odd_count) / n : 0.0;
  return d;
}

inline bool has_unique_max_vertex(const Graph& g) {
  const int mx = g.max_degree();
  int c = 0;
  for (int v = 0; v < g.vertex_count(); ++v) c += g.degree(v) == mx;
  return c == 1;
}

}  // namespace qdecomp
