#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qdecomp/decomposition.hpp"
#include "qdecomp/edge_color.hpp"
#include "qdecomp/graph.hpp"

namespace qdecomp {

struct Violation {
  std::string invariant;
  std::string witness;
};

struct VerificationReport {
  bool ok = false;
  std::string kind;
  int expected_count = 0;
  int actual_count = 0;
  std::string bound_rule;
  std::vector<Violation> violations;
};

struct VerifyOptions {
  bool spanning_cycles = false;  // every cycle must pass through all vertices
  int max_violations = 64;       // further violations are counted, not listed
};

namespace detail {

inline std::string edge_name(int u, int v) {
  if (u > v) std::swap(u, v);
  return std::to_string(u) + "-" + std::to_string(v);
}

inline std::string seq_name(const VertexSequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "-" : "") + std::to_string(s[i]);
  return out;
}

class ViolationLog {
 public:
  explicit ViolationLog(int cap) : cap_(cap) {}
  void add(std::string invariant, std::string witness) {
    if (static_cast<int>(list_.size()) < cap_) list_.push_back({std::move(invariant), std::move(witness)});
    else ++dropped_;
  }
  std::vector<Violation> take() {
    if (dropped_) list_.push_back({"truncated", std::to_string(dropped_) + " further violations"});
    return std::move(list_);
  }
  bool empty() const { return list_.empty() && !dropped_; }

 private:
  int cap_;
  long long dropped_ = 0;
  std::vector<Violation> list_;
};

struct Degrees {
  std::vector<int> deg;
  int max = 0;
  int odd = 0;
  int at_max = 0;
};

inline Degrees degrees_from_edges(const Graph& g) {
  Degrees d;
  d.deg.assign(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) ++d.deg[e.u], ++d.deg[e.v];
  for (int x : d.deg) {
    if (x > d.max) d.max = x, d.at_max = 0;
    if (x == d.max) ++d.at_max;
    d.odd += x % 2;
  }
  return d;
}

}  // namespace detail

/// Count bound for the given kind, computed from g alone.
inline std::pair<int, std::string> expected_bound(const Graph& g, DecompositionKind kind) {
  const auto d = detail::degrees_from_edges(g);
  const int delta = d.max;
  const bool sharp = d.at_max == 1 || d.odd >= delta;
  switch (kind) {
    case DecompositionKind::CycleSet: return {delta / 2, "floor(D/2)"};
    case DecompositionKind::PathSet:
      return sharp ? std::pair{std::max(d.odd / 2, (delta + 1) / 2), std::string("max(odd/2, ceil(D/2))")}
                   : std::pair{std::max(d.odd / 2, (delta + 2) / 2), std::string("max(odd/2, ceil((D+1)/2))")};
    case DecompositionKind::LinearForestSet:
      return sharp ? std::pair{(delta + 1) / 2, std::string("ceil(D/2)")}
                   : std::pair{(delta + 2) / 2, std::string("ceil((D+1)/2)")};
    case DecompositionKind::EdgeColoring: {
      const int n = g.vertex_count();
      if (n % 2 == 1 || n == 0) return {delta + 1, "D+1 (odd order)"};
      if (overfull_criterion(g) == ColorClass::Class2) return {delta + 1, "D+1 (deficiency criterion)"};
      if (n <= 14 && overfull_brute(g)) return {delta + 1, "D+1 (overfull subgraph)"};
      return {delta, "D"};
    }
  }
  return {0, ""};
}

/// Checks a decomposition against g by walking it directly: every part has the
/// right shape and every edge of g is covered exactly once.
inline VerificationReport verify(const Graph& g, const Decomposition& dec, const VerifyOptions& opt = {}) {
  using detail::edge_name;
  const int n = g.vertex_count();
  detail::ViolationLog log(opt.max_violations);
  VerificationReport rep;
  rep.kind = to_string(dec.kind);
  rep.actual_count = static_cast<int>(dec.parts.size());
  std::tie(rep.expected_count, rep.bound_rule) = expected_bound(g, dec.kind);

  if (dec.vertex_count != n)
    log.add("vertex count", std::to_string(dec.vertex_count) + " declared, graph has " + std::to_string(n));

  std::vector<int> covered(static_cast<std::size_t>(n) * n, 0);
  auto cover = [&](int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      log.add("vertex range", edge_name(u, v));
      return;
    }
    if (u == v) {
      log.add("loop", std::to_string(u));
      return;
    }
    if (!g.has_edge(u, v)) {
      log.add("edge not in graph", "edge " + edge_name(u, v));
      return;
    }
    if (++covered[static_cast<std::size_t>(std::min(u, v)) * n + std::max(u, v)] == 2)
      log.add("edge covered twice", "edge " + edge_name(u, v));
  };
  auto distinct = [&](const VertexSequence& s) {
    auto t = s;
    std::sort(t.begin(), t.end());
    return std::adjacent_find(t.begin(), t.end()) == t.end();
  };

  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    const Part& part = dec.parts[i];
    const std::string where = "part " + std::to_string(i);
    switch (dec.kind) {
      case DecompositionKind::CycleSet: {
        if (part.size() != 1) {
          log.add("cycle shape", where + " has " + std::to_string(part.size()) + " sequences");
          break;
        }
        const auto& c = part[0];
        if (c.size() < 3 || !distinct(c)) log.add("cycle shape", where + ": " + detail::seq_name(c));
        if (opt.spanning_cycles && static_cast<int>(c.size()) != n)
          log.add("hamilton cycle", where + " has " + std::to_string(c.size()) + " of " + std::to_string(n) + " vertices");
        for (std::size_t j = 0; j < c.size(); ++j) cover(c[j], c[(j + 1) % c.size()]);
        break;
      }
      case DecompositionKind::PathSet: {
        if (part.size() != 1) {
          log.add("path shape", where + " has " + std::to_string(part.size()) + " sequences");
          break;
        }
        const auto& p = part[0];
        if (p.size() < 2 || !distinct(p)) log.add("path shape", where + ": " + detail::seq_name(p));
        for (std::size_t j = 0; j + 1 < p.size(); ++j) cover(p[j], p[j + 1]);
        break;
      }
      case DecompositionKind::LinearForestSet: {
        // Vertex-disjoint paths; that is exactly acyclic with degree <= 2.
        VertexSequence all;
        for (const auto& p : part) {
          if (p.size() < 2) log.add("forest shape", where + ": component " + detail::seq_name(p));
          for (std::size_t j = 0; j + 1 < p.size(); ++j) cover(p[j], p[j + 1]);
          all.insert(all.end(), p.begin(), p.end());
        }
        if (!distinct(all)) log.add("forest shape", where + " is not a union of vertex-disjoint paths");
        break;
      }
      case DecompositionKind::EdgeColoring: {
        VertexSequence ends;
        for (const auto& e : part) {
          if (e.size() != 2) {
            log.add("colour class shape", where + ": " + detail::seq_name(e));
            continue;
          }
          cover(e[0], e[1]);
          ends.push_back(e[0]);
          ends.push_back(e[1]);
        }
        if (!distinct(ends)) log.add("proper colouring", "colour " + std::to_string(i) + " repeats at a vertex");
        break;
      }
    }
  }

  if (!dec.matching.empty() && dec.kind != DecompositionKind::CycleSet)
    log.add("matching", "only cycle decompositions carry a matching");
  if (dec.kind == DecompositionKind::CycleSet) {
    VertexSequence ends;
    for (const Edge& e : dec.matching) {
      cover(e.u, e.v);
      ends.push_back(e.u);
      ends.push_back(e.v);
    }
    if (!distinct(ends)) log.add("matching", "matching edges share a vertex");
    const int odd = detail::degrees_from_edges(g).odd;
    if (static_cast<int>(dec.matching.size()) != odd / 2)
      log.add("matching size", std::to_string(dec.matching.size()) + " edges, expected " + std::to_string(odd / 2));
  }

  for (const Edge& e : g.edges())
    if (!covered[static_cast<std::size_t>(e.u) * n + e.v]) log.add("edge partition", "edge " + edge_name(e.u, e.v) + " uncovered");

  if (rep.actual_count > rep.expected_count)
    log.add("count bound",
            std::to_string(rep.actual_count) + " parts exceed " + std::to_string(rep.expected_count) + " = " + rep.bound_rule);

  rep.ok = log.empty();
  rep.violations = log.take();
  return rep;
}

/// Balanced orientation check: d orients each edge of g exactly once and
/// every vertex has equal in- and out-degree.
inline VerificationReport verify_orientation(const Graph& g, const Digraph& d, const VerifyOptions& opt = {}) {
  using detail::edge_name;
  const int n = g.vertex_count();
  detail::ViolationLog log(opt.max_violations);
  VerificationReport rep;
  rep.kind = "orientation";
  if (d.vertex_count() != n) {
    log.add("vertex count", std::to_string(d.vertex_count()) + " vs " + std::to_string(n));
    rep.violations = log.take();
    return rep;
  }
  std::vector<int> out(n, 0), in(n, 0), seen(static_cast<std::size_t>(n) * n, 0);
  for (const Arc& a : d.arcs()) {
    rep.actual_count++;
    if (!g.has_edge(a.from, a.to)) {
      log.add("underlying graph", "arc " + std::to_string(a.from) + "->" + std::to_string(a.to) + " not an edge");
      continue;
    }
    if (++seen[static_cast<std::size_t>(std::min(a.from, a.to)) * n + std::max(a.from, a.to)] == 2)
      log.add("underlying graph", "edge " + edge_name(a.from, a.to) + " oriented both ways");
    ++out[a.from], ++in[a.to];
  }
  for (const Edge& e : g.edges()) {
    rep.expected_count++;
    if (!seen[static_cast<std::size_t>(e.u) * n + e.v]) log.add("underlying graph", "edge " + edge_name(e.u, e.v) + " unoriented");
  }
  for (int v = 0; v < n; ++v)
    if (out[v] != in[v])
      log.add("balance", "vertex " + std::to_string(v) + " out " + std::to_string(out[v]) + " in " + std::to_string(in[v]));
  rep.bound_rule = "one arc per edge";
  rep.ok = log.empty();
  rep.violations = log.take();
  return rep;
}

/// Directed cycles covering every arc of d exactly once. The bound is half the
/// largest total degree.
inline VerificationReport verify_dicycles(const Digraph& d, const std::vector<VertexSequence>& cycles,
                                          const VerifyOptions& opt = {}) {
  const int n = d.vertex_count();
  detail::ViolationLog log(opt.max_violations);
  VerificationReport rep;
  rep.kind = "directed-cycles";
  rep.actual_count = static_cast<int>(cycles.size());
  int delta = 0;
  std::vector<int> total(n, 0);
  for (const Arc& a : d.arcs()) ++total[a.from], ++total[a.to];
  for (int t : total) delta = std::max(delta, t);
  rep.expected_count = delta / 2;
  rep.bound_rule = "floor(D/2), D = in + out";
  std::vector<int> seen(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& c = cycles[i];
    auto t = c;
    std::sort(t.begin(), t.end());
    if (c.size() < 2 || std::adjacent_find(t.begin(), t.end()) != t.end())
      log.add("cycle shape", "part " + std::to_string(i) + ": " + detail::seq_name(c));
    if (opt.spanning_cycles && static_cast<int>(c.size()) != n)
      log.add("hamilton cycle", "part " + std::to_string(i) + " has " + std::to_string(c.size()) + " of " + std::to_string(n) + " vertices");
    for (std::size_t j = 0; j < c.size(); ++j) {
      const int u = c[j], v = c[(j + 1) % c.size()];
      const std::string name = "arc " + std::to_string(u) + "->" + std::to_string(v);
      if (u < 0 || v < 0 || u >= n || v >= n || u == v || !d.has_arc(u, v)) {
        log.add("arc not in digraph", name);
        continue;
      }
      if (++seen[static_cast<std::size_t>(u) * n + v] == 2) log.add("arc covered twice", name);
    }
  }
  for (const Arc& a : d.arcs())
    if (!seen[static_cast<std::size_t>(a.from) * n + a.to])
      log.add("arc partition", "arc " + std::to_string(a.from) + "->" + std::to_string(a.to) + " uncovered");
  if (rep.actual_count > rep.expected_count)
    log.add("count bound", std::to_string(rep.actual_count) + " parts exceed " + std::to_string(rep.expected_count));
  rep.ok = log.empty();
  rep.violations = log.take();
  return rep;
}

}  // namespace qdecomp
