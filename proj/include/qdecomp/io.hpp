#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qdecomp/decomposition.hpp"
#include "qdecomp/edge_color.hpp"
#include "qdecomp/errors.hpp"
#include "qdecomp/graph.hpp"
#include "qdecomp/randgen.hpp"

namespace qdecomp {

namespace detail {

// Reads non-empty, non-comment lines together with their 1-based numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }
  int number() const { return number_; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, "line " + std::to_string(number_) + ": " + what);
  }

  std::vector<long long> ints(const std::string& line, std::size_t want) const {
    std::istringstream ss(line);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        error("expected an integer, got '" + tok + "'");
      }
      if (used != tok.size()) error("expected an integer, got '" + tok + "'");
      out.push_back(x);
    }
    if (want && out.size() != want)
      error("expected " + std::to_string(want) + " integers, got " + std::to_string(out.size()));
    return out;
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::NotFound, "cannot open '" + path + "'");
  return in;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::UsageError, "cannot write '" + path + "'");
  return out;
}

template <class Fn>
auto parse_file(const std::string& path, Fn fn) {
  auto in = open_in(path);
  try {
    return fn(in);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    const std::string what = e.what();
    fail(ErrorCode::ParseError, path + ": " + what.substr(what.find(": ") + 2));
  }
}

}  // namespace detail

// ---- graphs: "n m" then one "u v" line per edge, u < v ----

inline void write_graph(std::ostream& out, const Graph& g) {
  const auto es = g.edges();
  out << g.vertex_count() << ' ' << es.size() << '\n';
  for (const Edge& e : es) out << e.u << ' ' << e.v << '\n';
}

inline Graph read_graph(std::istream& in) {
  detail::LineReader rd(in);
  std::string line;
  if (!rd.next(line)) rd.error("missing header \"n m\"");
  if (line.find("directed") != std::string::npos) rd.error("directed edge list where an undirected graph was expected");
  auto head = rd.ints(line, 2);
  if (head[0] < 0 || head[1] < 0) rd.error("negative header value");
  Graph g(static_cast<int>(head[0]));
  for (long long i = 0; i < head[1]; ++i) {
    if (!rd.next(line)) rd.error("expected " + std::to_string(head[1]) + " edges, file ended after " + std::to_string(i));
    auto uv = rd.ints(line, 2);
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= head[0] || uv[1] >= head[0]) rd.error("vertex out of range");
    if (uv[0] == uv[1]) rd.error("self-loop");
    if (g.has_edge(static_cast<int>(uv[0]), static_cast<int>(uv[1]))) rd.error("duplicate edge");
    g.add_edge(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  if (rd.next(line)) rd.error("trailing content after the declared edges");
  return g;
}

// ---- digraphs: "n m directed" then one "u v" line per arc ----

inline void write_digraph(std::ostream& out, const Digraph& d) {
  auto arcs = d.arcs();
  std::sort(arcs.begin(), arcs.end());
  out << d.vertex_count() << ' ' << arcs.size() << " directed\n";
  for (const Arc& a : arcs) out << a.from << ' ' << a.to << '\n';
}

inline Digraph read_digraph(std::istream& in) {
  detail::LineReader rd(in);
  std::string line;
  if (!rd.next(line)) rd.error("missing header \"n m directed\"");
  std::istringstream hs(line);
  long long n = -1, m = -1;
  std::string tag, extra;
  if (!(hs >> n >> m >> tag) || tag != "directed" || (hs >> extra)) rd.error("header must be \"n m directed\"");
  if (n < 0 || m < 0) rd.error("negative header value");
  Digraph d(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!rd.next(line)) rd.error("expected " + std::to_string(m) + " arcs, file ended after " + std::to_string(i));
    auto uv = rd.ints(line, 2);
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n) rd.error("vertex out of range");
    if (uv[0] == uv[1]) rd.error("self-loop");
    if (d.has_arc(static_cast<int>(uv[0]), static_cast<int>(uv[1]))) rd.error("duplicate arc");
    d.add_arc(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  if (rd.next(line)) rd.error("trailing content after the declared arcs");
  return d;
}

// ---- decompositions ----
//   kind <cycles|paths|forests|coloring>
//   vertices <n>
//   parts <k>
//   one line per part; sequences inside a part separated by " | "
//   [matching <m>, then m lines "u v"]

inline void write_decomposition(std::ostream& out, const Decomposition& d) {
  out << "kind " << to_string(d.kind) << '\n';
  out << "vertices " << d.vertex_count << '\n';
  out << "parts " << d.parts.size() << '\n';
  for (const auto& part : d.parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out << " |";
      for (std::size_t j = 0; j < part[i].size(); ++j) out << (i || j ? " " : "") << part[i][j];
    }
    out << '\n';
  }
  if (!d.matching.empty()) {
    out << "matching " << d.matching.size() << '\n';
    for (const Edge& e : d.matching) out << e.u << ' ' << e.v << '\n';
  }
}

inline Decomposition read_decomposition(std::istream& in) {
  detail::LineReader rd(in);
  std::string line;
  auto keyed = [&](const char* key) {
    if (!rd.next(line)) rd.error(std::string("missing '") + key + "' line");
    std::istringstream ss(line);
    std::string k, v, extra;
    if (!(ss >> k >> v) || k != key || (ss >> extra)) rd.error(std::string("expected '") + key + " <value>'");
    return v;
  };
  Decomposition d;
  try {
    d.kind = parse_kind(keyed("kind"));
  } catch (const Error& e) {
    rd.error(e.what());
  }
  const auto count_of = [&](const std::string& v) {
    auto x = rd.ints(v, 1)[0];
    if (x < 0) rd.error("negative count");
    return x;
  };
  d.vertex_count = static_cast<int>(count_of(keyed("vertices")));
  const auto parts = count_of(keyed("parts"));
  for (long long i = 0; i < parts; ++i) {
    if (!rd.next(line)) rd.error("expected " + std::to_string(parts) + " part lines");
    Part part;
    for (const auto& chunk : detail::split_on(line, '|')) {
      VertexSequence seq;
      for (long long x : rd.ints(chunk, 0)) seq.push_back(static_cast<int>(x));
      if (seq.empty()) rd.error("empty sequence in part");
      part.push_back(std::move(seq));
    }
    d.parts.push_back(std::move(part));
  }
  if (rd.next(line)) {
    std::istringstream ss(line);
    std::string k;
    long long m = -1;
    if (!(ss >> k >> m) || k != "matching" || m < 0) rd.error("expected 'matching <m>'");
    for (long long i = 0; i < m; ++i) {
      if (!rd.next(line)) rd.error("expected " + std::to_string(m) + " matching edges");
      auto uv = rd.ints(line, 2);
      if (uv[0] == uv[1]) rd.error("matching edge is a loop");
      d.matching.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    if (rd.next(line)) rd.error("trailing content after the matching");
  }
  return d;
}

// ---- colourings: one "u v c" line per edge ----

inline void write_coloring(std::ostream& out, const EdgeColoring& c) {
  auto rows = c.color;
  std::sort(rows.begin(), rows.end());
  for (const auto& [e, col] : rows) out << e.u << ' ' << e.v << ' ' << col << '\n';
}

inline EdgeColoring read_coloring(std::istream& in) {
  detail::LineReader rd(in);
  std::string line;
  EdgeColoring c;
  while (rd.next(line)) {
    auto r = rd.ints(line, 3);
    if (r[0] < 0 || r[1] < 0 || r[2] < 0) rd.error("negative entry");
    if (r[0] == r[1]) rd.error("loop");
    c.color.emplace_back(Edge(static_cast<int>(r[0]), static_cast<int>(r[1])), static_cast<int>(r[2]));
    c.colors = std::max(c.colors, static_cast<int>(r[2]) + 1);
  }
  std::sort(c.color.begin(), c.color.end());
  return c;
}

inline Decomposition coloring_decomposition(int n, const EdgeColoring& c) { return make_coloring(n, c.color); }

// ---- vertex pairs: one "x y" line per pair ----

inline void write_pairs(std::ostream& out, const PairList& m) {
  for (auto [x, y] : m.pairs()) out << x << ' ' << y << '\n';
}

inline PairList read_pairs(std::istream& in) {
  detail::LineReader rd(in);
  std::string line;
  std::vector<std::pair<int, int>> pairs;
  while (rd.next(line)) {
    auto r = rd.ints(line, 2);
    if (r[0] < 0 || r[1] < 0) rd.error("negative vertex");
    pairs.emplace_back(static_cast<int>(r[0]), static_cast<int>(r[1]));
  }
  return PairList(pairs);
}

// ---- parameter profiles: "key value" or "key = value" lines ----

inline void write_params(std::ostream& out, const QuasirandomParams& q) {
  out << std::setprecision(17);
  out << "p " << q.p << "\neps " << q.eps << "\neta " << q.eta << "\nalpha " << q.alpha << "\nnu " << q.nu
      << "\ntau " << q.tau << "\nretry_budget " << q.retry_budget << "\nbacktrack_depth " << q.backtrack_depth << '\n';
}

/// Keys missing from the file keep their values from `base`.
inline QuasirandomParams read_params(std::istream& in, QuasirandomParams base = {}) {
  detail::LineReader rd(in);
  std::string line;
  while (rd.next(line)) {
    std::replace(line.begin(), line.end(), '=', ' ');
    std::istringstream ss(line);
    std::string key, value, extra;
    if (!(ss >> key >> value) || (ss >> extra)) rd.error("expected 'key value'");
    double x = 0;
    std::size_t used = 0;
    try {
      x = std::stod(value, &used);
    } catch (const std::exception&) {
      rd.error("bad number '" + value + "'");
    }
    if (used != value.size()) rd.error("bad number '" + value + "'");
    if (key == "p") base.p = x;
    else if (key == "eps") base.eps = x;
    else if (key == "eta") base.eta = x;
    else if (key == "alpha") base.alpha = x;
    else if (key == "nu") base.nu = x;
    else if (key == "tau") base.tau = x;
    else if (key == "retry_budget") base.retry_budget = static_cast<int>(x);
    else if (key == "backtrack_depth") base.backtrack_depth = static_cast<int>(x);
    else rd.error("unknown key '" + key + "'");
  }
  return base;
}

// ---- plain cycle lists: one vertex sequence per line ----

inline void write_cycle_lines(std::ostream& out, const std::vector<VertexSequence>& cycles) {
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
}

inline std::vector<VertexSequence> read_cycle_lines(std::istream& in) {
  detail::LineReader rd(in);
  std::string line;
  std::vector<VertexSequence> out;
  while (rd.next(line)) {
    VertexSequence c;
    for (long long x : rd.ints(line, 0)) {
      if (x < 0) rd.error("negative vertex");
      c.push_back(static_cast<int>(x));
    }
    out.push_back(std::move(c));
  }
  return out;
}

// ---- file wrappers ----

inline void save_graph(const std::string& path, const Graph& g) {
  auto out = detail::open_out(path);
  write_graph(out, g);
}
inline Graph load_graph(const std::string& path) {
  return detail::parse_file(path, [](std::istream& in) { return read_graph(in); });
}
inline void save_digraph(const std::string& path, const Digraph& d) {
  auto out = detail::open_out(path);
  write_digraph(out, d);
}
inline Digraph load_digraph(const std::string& path) {
  return detail::parse_file(path, [](std::istream& in) { return read_digraph(in); });
}
inline void save_decomposition(const std::string& path, const Decomposition& d) {
  auto out = detail::open_out(path);
  write_decomposition(out, d);
}
inline Decomposition load_decomposition(const std::string& path) {
  return detail::parse_file(path, [](std::istream& in) { return read_decomposition(in); });
}
inline void save_coloring(const std::string& path, const EdgeColoring& c) {
  auto out = detail::open_out(path);
  write_coloring(out, c);
}
inline EdgeColoring load_coloring(const std::string& path) {
  return detail::parse_file(path, [](std::istream& in) { return read_coloring(in); });
}
inline PairList load_pairs(const std::string& path) {
  return detail::parse_file(path, [](std::istream& in) { return read_pairs(in); });
}
inline void save_cycle_lines(const std::string& path, const std::vector<VertexSequence>& cycles) {
  auto out = detail::open_out(path);
  write_cycle_lines(out, cycles);
}
inline std::vector<VertexSequence> load_cycle_lines(const std::string& path) {
  return detail::parse_file(path, [](std::istream& in) { return read_cycle_lines(in); });
}
inline void save_pairs(const std::string& path, const PairList& m) {
  auto out = detail::open_out(path);
  write_pairs(out, m);
}
inline QuasirandomParams load_params(const std::string& path, QuasirandomParams base = {}) {
  return detail::parse_file(path, [&](std::istream& in) { return read_params(in, base); });
}

}  // namespace qdecomp
