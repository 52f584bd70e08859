#pragma once

#include <string>
#include <vector>

#include "qdecomp/errors.hpp"
#include "qdecomp/graph.hpp"

namespace qdecomp {

enum class DecompositionKind { CycleSet, PathSet, LinearForestSet, EdgeColoring };

inline const char* to_string(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::CycleSet: return "cycles";
    case DecompositionKind::PathSet: return "paths";
    case DecompositionKind::LinearForestSet: return "forests";
    case DecompositionKind::EdgeColoring: return "coloring";
  }
  return "?";
}

inline DecompositionKind parse_kind(const std::string& s) {
  if (s == "cycles") return DecompositionKind::CycleSet;
  if (s == "paths") return DecompositionKind::PathSet;
  if (s == "forests") return DecompositionKind::LinearForestSet;
  if (s == "coloring") return DecompositionKind::EdgeColoring;
  fail(ErrorCode::ParseError, "unknown decomposition kind '" + s + "'");
}

using VertexSequence = std::vector<int>;

/// One part of a decomposition: a list of vertex sequences.
///   cycle  -> one closed sequence (closing edge implied)
///   path   -> one open sequence
///   forest -> several open sequences, one per component path
///   colour -> several two-vertex sequences, one per edge of the class
using Part = std::vector<VertexSequence>;

struct Decomposition {
  DecompositionKind kind = DecompositionKind::CycleSet;
  int vertex_count = 0;
  std::vector<Part> parts;
  // Extra matching edges; only meaningful for cycles-plus-matching output.
  std::vector<Edge> matching;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline Decomposition make_cycle_set(int n, const std::vector<VertexSequence>& cycles,
                                    std::vector<Edge> matching = {}) {
  Decomposition d{DecompositionKind::CycleSet, n, {}, std::move(matching)};
  for (const auto& c : cycles) d.parts.push_back({c});
  return d;
}

inline Decomposition make_path_set(int n, const std::vector<VertexSequence>& paths) {
  Decomposition d{DecompositionKind::PathSet, n, {}, {}};
  for (const auto& p : paths) d.parts.push_back({p});
  return d;
}

inline Decomposition make_forest_set(int n, std::vector<Part> forests) {
  return {DecompositionKind::LinearForestSet, n, std::move(forests), {}};
}

/// Colour classes from a per-edge colour list (colours 0..k-1).
inline Decomposition make_coloring(int n, const std::vector<std::pair<Edge, int>>& colored) {
  Decomposition d{DecompositionKind::EdgeColoring, n, {}, {}};
  int k = 0;
  for (const auto& [e, c] : colored) k = std::max(k, c + 1);
  d.parts.resize(k);
  for (const auto& [e, c] : colored) d.parts[c].push_back({e.u, e.v});
  return d;
}

}  // namespace qdecomp
