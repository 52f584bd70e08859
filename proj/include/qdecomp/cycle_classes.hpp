#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "qdecomp/errors.hpp"
#include "qdecomp/rng.hpp"

namespace qdecomp {

/// Edge-disjoint "classes", each a 2-regular graph on its own support (a union
/// of vertex-disjoint cycles). merge() performs label switches between two
/// classes: edges ab, cd of class i lying on different cycles, with ac and bd
/// both in class j, are exchanged for ac, bd. Class i loses a cycle and class j
/// changes by at most one. Supports never change, so the final cycles cover
/// exactly the same vertex sets as the input classes.
class CycleClassSystem {
 public:
  CycleClassSystem(int n, const std::vector<std::vector<std::vector<int>>>& classes)
      : n_(n), label_(static_cast<std::size_t>(n) * n, -1) {
    const int k = static_cast<int>(classes.size());
    nb_.assign(k, std::vector<std::array<int, 2>>(n, {-1, -1}));
    comp_.assign(k, std::vector<int>(n, -1));
    ncomp_.assign(k, 0);
    support_.resize(k);
    for (int i = 0; i < k; ++i) {
      for (const auto& cyc : classes[i]) {
        require(cyc.size() >= 3, "class cycle shorter than 3");
        for (std::size_t t = 0; t < cyc.size(); ++t) {
          int a = cyc[t], b = cyc[(t + 1) % cyc.size()];
          require(label(a, b) < 0, "classes are not edge-disjoint");
          set_label(a, b, i);
          add_nb(i, a, b);
          add_nb(i, b, a);
        }
      }
      for (int v = 0; v < n; ++v)
        if (nb_[i][v][0] >= 0) support_[i].push_back(v);
      relabel(i);
    }
  }

  int class_count() const { return static_cast<int>(nb_.size()); }
  int component_count(int i) const { return ncomp_[i]; }

  bool all_single() const {
    for (int c : ncomp_)
      if (c > 1) return false;
    return true;
  }

  /// Switch until every class is a single cycle or max_moves runs out.
  bool merge(Rng& rng, long long max_moves) {
    std::vector<int> multi;
    for (long long move = 0;; ++move) {
      multi.clear();
      for (int i = 0; i < class_count(); ++i)
        if (ncomp_[i] > 1) multi.push_back(i);
      if (multi.empty()) return true;
      if (move >= max_moves) return false;
      shuffle(multi, rng);
      bool moved = false;
      for (std::size_t t = 0; !moved && t < multi.size(); ++t) moved = merging_switch(multi[t], rng, true);
      // Plateau: mostly sideways switches, sometimes an arbitrary one to
      // break two-cycle oscillations.
      if (!moved && uniform_index(rng, 4) != 0)
        for (std::size_t t = 0; !moved && t < multi.size(); ++t) moved = merging_switch(multi[t], rng, false);
      if (!moved && !random_switch(rng)) return false;
    }
  }

  std::vector<std::vector<int>> cycles(int i) const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n_, 0);
    for (int v : support_[i]) {
      if (seen[v]) continue;
      std::vector<int> cyc;
      int prev = -1, cur = v;
      while (!seen[cur]) {
        seen[cur] = 1;
        cyc.push_back(cur);
        int next = nb_[i][cur][0] != prev ? nb_[i][cur][0] : nb_[i][cur][1];
        prev = cur;
        cur = next;
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

 private:
  int label(int a, int b) const { return label_[static_cast<std::size_t>(a) * n_ + b]; }
  void set_label(int a, int b, int c) {
    label_[static_cast<std::size_t>(a) * n_ + b] = c;
    label_[static_cast<std::size_t>(b) * n_ + a] = c;
  }

  void add_nb(int i, int v, int x) {
    auto& s = nb_[i][v];
    if (s[0] < 0) {
      s[0] = x;
    } else {
      require(s[1] < 0, "class is not 2-regular on its support");
      s[1] = x;
    }
  }
  void replace_nb(int i, int v, int old_x, int new_x) {
    auto& s = nb_[i][v];
    (s[0] == old_x ? s[0] : s[1]) = new_x;
  }

  void relabel(int i) {
    auto& comp = comp_[i];
    for (int v : support_[i]) comp[v] = -1;
    int c = 0;
    for (int v : support_[i]) {
      if (comp[v] >= 0) continue;
      int prev = -1, cur = v;
      while (comp[cur] < 0) {
        comp[cur] = c;
        int next = nb_[i][cur][0] != prev ? nb_[i][cur][0] : nb_[i][cur][1];
        prev = cur;
        cur = next;
      }
      ++c;
    }
    ncomp_[i] = c;
  }

  // Class i: ab, cd -> ac, bd. Class j: ac, bd -> ab, cd.
  void apply(int i, int j, int a, int b, int c, int d) {
    replace_nb(i, a, b, c);
    replace_nb(i, b, a, d);
    replace_nb(i, c, d, a);
    replace_nb(i, d, c, b);
    replace_nb(j, a, c, b);
    replace_nb(j, c, a, d);
    replace_nb(j, b, d, a);
    replace_nb(j, d, b, c);
    set_label(a, b, j);
    set_label(c, d, j);
    set_label(a, c, i);
    set_label(b, d, i);
    relabel(i);
    relabel(j);
  }

  bool merging_switch(int i, Rng& rng, bool improving_only) {
    struct Cand {
      int a, b, c, d, j;
    };
    std::vector<int> verts = support_[i];
    shuffle(verts, rng);
    const auto& comp = comp_[i];
    // Prefer switches that also merge two cycles of class j.
    std::vector<Cand> both, plain;
    for (int a : verts) {
      for (int b : nb_[i][a]) {
        for (int c : support_[i]) {
          if (comp[c] == comp[a]) continue;
          int j = label(a, c);
          if (j < 0 || j == i) continue;
          for (int d : nb_[i][c]) {
            if (label(b, d) != j) continue;
            (comp_[j][a] != comp_[j][b] ? both : plain).push_back({a, b, c, d, j});
          }
        }
      }
      if (!both.empty()) break;
    }
    if (improving_only && both.empty()) return false;
    const auto& cands = both.empty() ? plain : both;
    if (cands.empty()) return false;
    const Cand& m = cands[uniform_index(rng, cands.size())];
    apply(i, m.j, m.a, m.b, m.c, m.d);
    return true;
  }

  // Any valid switch, regardless of what it does to the cycle counts.
  bool random_switch(Rng& rng) {
    const int k = class_count();
    for (int attempt = 0; attempt < 200; ++attempt) {
      int i = static_cast<int>(uniform_index(rng, k));
      if (support_[i].empty()) continue;
      int a = support_[i][uniform_index(rng, support_[i].size())];
      int b = nb_[i][a][uniform_index(rng, 2)];
      int c = static_cast<int>(uniform_index(rng, n_));
      int j = label(a, c);
      if (j < 0 || j == i || c == b || nb_[i][c][0] < 0) continue;
      int d = nb_[i][c][uniform_index(rng, 2)];
      if (label(b, d) != j) continue;
      apply(i, j, a, b, c, d);
      return true;
    }
    return false;
  }

  int n_;
  std::vector<int> label_;
  std::vector<std::vector<std::array<int, 2>>> nb_;
  std::vector<std::vector<int>> comp_;
  std::vector<int> ncomp_;
  std::vector<std::vector<int>> support_;
};

/// Directed counterpart: each class is a 1-regular subdigraph on its support.
/// Switch: a->b, c->d of class i on different cycles, a->d and c->b in class j,
/// exchanged so class i gets a->d, c->b.
class DiCycleClassSystem {
 public:
  DiCycleClassSystem(int n, const std::vector<std::vector<std::vector<int>>>& classes)
      : n_(n), label_(static_cast<std::size_t>(n) * n, -1) {
    const int k = static_cast<int>(classes.size());
    succ_.assign(k, std::vector<int>(n, -1));
    pred_.assign(k, std::vector<int>(n, -1));
    comp_.assign(k, std::vector<int>(n, -1));
    ncomp_.assign(k, 0);
    support_.resize(k);
    for (int i = 0; i < k; ++i) {
      for (const auto& cyc : classes[i]) {
        require(cyc.size() >= 2, "directed class cycle shorter than 2");
        for (std::size_t t = 0; t < cyc.size(); ++t) {
          int a = cyc[t], b = cyc[(t + 1) % cyc.size()];
          require(label(a, b) < 0, "classes are not arc-disjoint");
          require(succ_[i][a] < 0 && pred_[i][b] < 0, "class is not 1-regular on its support");
          set_label(a, b, i);
          succ_[i][a] = b;
          pred_[i][b] = a;
        }
      }
      for (int v = 0; v < n; ++v)
        if (succ_[i][v] >= 0) support_[i].push_back(v);
      relabel(i);
    }
  }

  int class_count() const { return static_cast<int>(succ_.size()); }
  int component_count(int i) const { return ncomp_[i]; }

  bool merge(Rng& rng, long long max_moves) {
    std::vector<int> multi;
    for (long long move = 0;; ++move) {
      multi.clear();
      for (int i = 0; i < class_count(); ++i)
        if (ncomp_[i] > 1) multi.push_back(i);
      if (multi.empty()) return true;
      if (move >= max_moves) return false;
      shuffle(multi, rng);
      bool moved = false;
      for (std::size_t t = 0; !moved && t < multi.size(); ++t) moved = merging_switch(multi[t], rng, true);
      for (std::size_t t = 0; !moved && t < multi.size(); ++t) moved = orbit_exchange(multi[t], rng);
      if (!moved && uniform_index(rng, 4) != 0)
        for (std::size_t t = 0; !moved && t < multi.size(); ++t) moved = merging_switch(multi[t], rng, false);
      if (!moved && !random_switch(rng)) return false;
    }
  }

  std::vector<std::vector<int>> cycles(int i) const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n_, 0);
    for (int v : support_[i]) {
      if (seen[v]) continue;
      std::vector<int> cyc;
      for (int x = v; !seen[x]; x = succ_[i][x]) {
        seen[x] = 1;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

 private:
  int label(int a, int b) const { return label_[static_cast<std::size_t>(a) * n_ + b]; }
  void set_label(int a, int b, int c) { label_[static_cast<std::size_t>(a) * n_ + b] = c; }

  void relabel(int i) {
    auto& comp = comp_[i];
    for (int v : support_[i]) comp[v] = -1;
    int c = 0;
    for (int v : support_[i]) {
      if (comp[v] >= 0) continue;
      for (int x = v; comp[x] < 0; x = succ_[i][x]) comp[x] = c;
      ++c;
    }
    ncomp_[i] = c;
  }

  // Class i: a->b, c->d become a->d, c->b; class j the reverse.
  void apply(int i, int j, int a, int b, int c, int d) {
    succ_[i][a] = d;
    pred_[i][d] = a;
    succ_[i][c] = b;
    pred_[i][b] = c;
    succ_[j][a] = b;
    pred_[j][b] = a;
    succ_[j][c] = d;
    pred_[j][d] = c;
    set_label(a, b, j);
    set_label(c, d, j);
    set_label(a, d, i);
    set_label(c, b, i);
    relabel(i);
    relabel(j);
  }

  bool merging_switch(int i, Rng& rng, bool improving_only) {
    struct Cand {
      int a, b, c, d, j;
    };
    std::vector<int> verts = support_[i];
    shuffle(verts, rng);
    const auto& comp = comp_[i];
    std::vector<Cand> both, plain;
    for (int a : verts) {
      const int b = succ_[i][a];
      for (int c : support_[i]) {
        if (comp[c] == comp[a]) continue;
        const int d = succ_[i][c];
        int j = label(a, d);
        if (j < 0 || j == i || label(c, b) != j) continue;
        (comp_[j][a] != comp_[j][c] ? both : plain).push_back({a, b, c, d, j});
      }
      if (!both.empty()) break;
    }
    if (improving_only && both.empty()) return false;
    const auto& cands = both.empty() ? plain : both;
    if (cands.empty()) return false;
    const Cand& m = cands[uniform_index(rng, cands.size())];
    apply(i, m.j, m.a, m.b, m.c, m.d);
    return true;
  }

  // Tails t, t' = pred_j(succ_i(t)), ... until the walk closes. Swapping the
  // successors of classes i and j on such an orbit keeps both 1-regular.
  bool orbit_of(int i, int j, int t, std::vector<int>& orbit) const {
    orbit.clear();
    int x = t;
    do {
      orbit.push_back(x);
      int b = succ_[i][x];
      x = pred_[j][b];
      if (x < 0 || succ_[i][x] < 0 || orbit.size() > static_cast<std::size_t>(n_)) return false;
    } while (x != t);
    return true;
  }

  void swap_orbit(int i, int j, const std::vector<int>& orbit) {
    for (int t : orbit) {
      int bi = succ_[i][t], bj = succ_[j][t];
      succ_[i][t] = bj;
      pred_[i][bj] = t;
      succ_[j][t] = bi;
      pred_[j][bi] = t;
      set_label(t, bj, i);
      set_label(t, bi, j);
    }
    relabel(i);
    relabel(j);
  }

  // Keeps the first orbit exchange that lowers the joint cycle count of i and j.
  bool orbit_exchange(int i, Rng& rng) {
    std::vector<int> others;
    for (int j = 0; j < class_count(); ++j)
      if (j != i) others.push_back(j);
    shuffle(others, rng);
    // A few random partners per move; scanning all of them is quadratic in k.
    if (others.size() > 4) others.resize(4);
    std::vector<int> orbit;
    std::vector<char> seen(n_);
    for (int j : others) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int t : support_[i]) {
        if (seen[t] || pred_[j][succ_[i][t]] < 0) continue;
        bool ok = orbit_of(i, j, t, orbit);
        for (int x : orbit) seen[x] = 1;
        if (!ok || static_cast<int>(orbit.size()) == static_cast<int>(support_[i].size())) continue;
        const int before = ncomp_[i] + ncomp_[j];
        swap_orbit(i, j, orbit);
        if (ncomp_[i] + ncomp_[j] < before) return true;
        swap_orbit(i, j, orbit);
      }
    }
    return false;
  }

  bool random_switch(Rng& rng) {
    const int k = class_count();
    for (int attempt = 0; attempt < 200; ++attempt) {
      int i = static_cast<int>(uniform_index(rng, k));
      if (support_[i].empty()) continue;
      if (k > 1 && coin_flip(rng)) {
        int j = static_cast<int>(uniform_index(rng, k - 1));
        j += j >= i;
        int t = support_[i][uniform_index(rng, support_[i].size())];
        std::vector<int> orbit;
        if (pred_[j][succ_[i][t]] < 0 || !orbit_of(i, j, t, orbit)) continue;
        swap_orbit(i, j, orbit);
        return true;
      }
      int a = support_[i][uniform_index(rng, support_[i].size())];
      int b = succ_[i][a];
      std::vector<int> outs;
      for (int v = 0; v < n_; ++v)
        if (label(a, v) >= 0 && label(a, v) != i && pred_[i][v] >= 0) outs.push_back(v);
      if (outs.empty()) continue;
      int d = outs[uniform_index(rng, outs.size())];
      int j = label(a, d);
      int c = pred_[i][d];
      if (c == a || label(c, b) != j) continue;
      apply(i, j, a, b, c, d);
      return true;
    }
    return false;
  }

  int n_;
  std::vector<int> label_;
  std::vector<std::vector<int>> succ_, pred_;
  std::vector<std::vector<int>> comp_;
  std::vector<int> ncomp_;
  std::vector<std::vector<int>> support_;
};

}  // namespace qdecomp
