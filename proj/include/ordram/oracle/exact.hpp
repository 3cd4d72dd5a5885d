#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ordram/core/coloring.hpp"
#include "ordram/core/pattern.hpp"
#include "ordram/oracle/brute_force.hpp"

namespace ordram {

namespace oracle_detail {

using LabelFn = std::function<int(Vertex, Vertex)>;

inline bool triple_ok(const LabelFn& l, Vertex x, Vertex y, Vertex z, Notion notion) {
  const int xy = l(x, y), yz = l(y, z);
  if (xy < yz) return false;
  if (notion == Notion::WeakOnly) return true;
  const int xz = l(x, z);
  if (notion == Notion::MiddleChain) return xy >= xz && xz >= yz;
  return xz == xy || xz == yz;
}

/// Non-increasing s-set whose two largest vertices are i, j.
inline std::optional<VertexList> ni_ending(const LabelFn& l, int s, Notion notion, Vertex i, Vertex j) {
  VertexList chosen;
  std::function<bool(Vertex)> rec = [&](Vertex from) -> bool {
    if (static_cast<int>(chosen.size()) == s - 2) return true;
    for (Vertex u = from; u < i; ++u) {
      bool ok = triple_ok(l, u, i, j, notion);
      for (std::size_t a = 0; ok && a < chosen.size(); ++a) {
        ok = triple_ok(l, chosen[a], u, i, notion) && triple_ok(l, chosen[a], u, j, notion);
        for (std::size_t b = a + 1; ok && b < chosen.size(); ++b) ok = triple_ok(l, chosen[a], chosen[b], u, notion);
      }
      if (!ok) continue;
      chosen.push_back(u);
      if (rec(u + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(1)) return std::nullopt;
  chosen.push_back(i);
  chosen.push_back(j);
  return chosen;
}

/// H_{s,t} copy whose two largest vertices are i, j.
inline std::optional<VertexList> hst_ending(const LabelFn& l, int s, int t, Vertex i, Vertex j) {
  if (t == 1) return ni_ending(l, s, Notion::Full, i, j);
  VertexList rev{j, i};
  std::optional<VertexList> out;
  std::function<bool()> rec = [&]() -> bool {
    const std::size_t k = rev.size();
    if (static_cast<int>(k) == t) {
      const Vertex y1 = rev[k - 1];
      const int first = l(y1, rev[k - 2]);
      for (Vertex x = 1; x < y1; ++x) {
        if (l(x, y1) < first) continue;
        if (auto clique = ni_ending(l, s, Notion::Full, x, y1)) {
          out = *clique;
          for (std::size_t a = k - 1; a-- > 0;) out->push_back(rev[a]);
          return true;
        }
      }
      return false;
    }
    const int bound = l(rev[k - 1], rev[k - 2]);
    for (Vertex u = rev[k - 1] - 1; u >= 1; --u) {
      if (l(u, rev[k - 1]) < bound) continue;
      rev.push_back(u);
      if (rec()) return true;
      rev.pop_back();
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return out;
}

/// Cells of an ordered structure assigned in a fixed order. A state exposes
/// cells(), values(k), set(k, v) and completes(k); completes(k) may only read
/// cells up to k.
template <class State>
bool dfs(State& st, int k) {
  if (k == st.cells()) return true;
  for (int v = 0; v < st.values(k); ++v) {
    st.set(k, v);
    if (!st.completes(k) && dfs(st, k + 1)) return true;
  }
  return false;
}

/// First avoiding assignment in DFS order, or nullopt. With jobs > 1 the
/// top levels are split into prefixes searched concurrently; the answer is
/// the one from the earliest prefix, which is what the serial search finds.
template <class State>
std::optional<State> find_avoider(State st, int jobs) {
  if (jobs <= 1 || st.cells() == 0) {
    if (dfs(st, 0)) return st;
    return std::nullopt;
  }
  int depth = 0;
  long long width = 1;
  while (depth < st.cells() && width < 4LL * jobs) width *= st.values(depth++);
  std::vector<State> prefixes;
  std::function<void(State&, int)> expand = [&](State& s, int k) {
    if (k == depth) {
      prefixes.push_back(s);
      return;
    }
    for (int v = 0; v < s.values(k); ++v) {
      s.set(k, v);
      if (!s.completes(k)) expand(s, k + 1);
    }
  };
  expand(st, 0);
  std::vector<std::optional<State>> found(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{prefixes.size()};
  auto worker = [&] {
    for (std::size_t idx; (idx = next++) < prefixes.size();) {
      if (idx > best.load()) continue;
      State s = prefixes[idx];
      if (dfs(s, depth)) {
        found[idx] = std::move(s);
        for (std::size_t b = best.load(); idx < b && !best.compare_exchange_weak(b, idx);) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

/// Pairs i < j ordered by j, then i.
inline std::vector<std::pair<Vertex, Vertex>> pair_cells(int n) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex j = 2; j <= n; ++j)
    for (Vertex i = 1; i < j; ++i) out.emplace_back(i, j);
  return out;
}

class GraphState {
 public:
  GraphState(int n, PatternSpec red, PatternSpec blue, bool red_first)
      : n_(n), cells_(pair_cells(n)), m_(static_cast<std::size_t>(n + 1) * (n + 1), 0), red_(red), blue_(blue),
        red_first_(red_first) {}

  int cells() const { return static_cast<int>(cells_.size()); }
  int values(int k) const { return k == 0 && red_first_ ? 1 : 2; }
  void set(int k, int v) {
    auto [i, j] = cells_[static_cast<std::size_t>(k)];
    m_[idx(i, j)] = static_cast<std::uint8_t>(v);
  }
  bool completes(int k) const {
    auto [i, j] = cells_[static_cast<std::size_t>(k)];
    const PairColor col = [this](Vertex x, Vertex y) { return static_cast<Color>(m_[idx(x, y)]); };
    const Color c = col(i, j);
    return pair_witness_ending(col, c == Color::Red ? red_ : blue_, i, j).has_value();
  }
  TwoColoring coloring() const {
    return TwoColoring::from_function(n_, [this](Vertex x, Vertex y) { return static_cast<Color>(m_[idx(x, y)]); });
  }

 private:
  std::size_t idx(Vertex x, Vertex y) const { return static_cast<std::size_t>(x) * (n_ + 1) + y; }
  int n_;
  std::vector<std::pair<Vertex, Vertex>> cells_;
  std::vector<std::uint8_t> m_;
  PatternSpec red_, blue_;
  bool red_first_;
};

class TripleState {
 public:
  TripleState(int n, PatternSpec red, PatternSpec blue, bool red_first)
      : n_(n), m_(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1), 0), red_(red), blue_(blue),
        red_first_(red_first) {
    for (Vertex e = 3; e <= n; ++e)
      for (Vertex b = 2; b < e; ++b)
        for (Vertex a = 1; a < b; ++a) cells_.push_back({a, b, e});
  }

  int cells() const { return static_cast<int>(cells_.size()); }
  int values(int k) const { return k == 0 && red_first_ ? 1 : 2; }
  void set(int k, int v) {
    const auto& c = cells_[static_cast<std::size_t>(k)];
    m_[idx(c[0], c[1], c[2])] = static_cast<std::uint8_t>(v);
  }
  bool completes(int k) const {
    const auto& c = cells_[static_cast<std::size_t>(k)];
    const TripleColor col = [this](Vertex x, Vertex y, Vertex z) { return static_cast<Color>(m_[idx(x, y, z)]); };
    const Color now = col(c[0], c[1], c[2]);
    return triple_witness_ending(col, now == Color::Red ? red_ : blue_, c[0], c[1], c[2]).has_value();
  }
  TripleColoring coloring() const {
    return TripleColoring::from_function(
        n_, [this](Vertex x, Vertex y, Vertex z) { return static_cast<Color>(m_[idx(x, y, z)]); });
  }

 private:
  std::size_t idx(Vertex x, Vertex y, Vertex z) const {
    const auto s = static_cast<std::size_t>(n_) + 1;
    return (static_cast<std::size_t>(x) * s + y) * s + z;
  }
  int n_;
  std::vector<std::array<Vertex, 3>> cells_;
  std::vector<std::uint8_t> m_;
  PatternSpec red_, blue_;
  bool red_first_;
};

/// Labelings avoiding a non-increasing s-set (t == 0) or H_{s,t} (t >= 1).
class LabelState {
 public:
  LabelState(int n_vertices, int n_labels, int s, int t, Notion notion)
      : n_(n_vertices), labels_(n_labels), s_(s), t_(t), notion_(notion), cells_(pair_cells(n_vertices)),
        m_(static_cast<std::size_t>(n_vertices + 1) * (n_vertices + 1), 1) {}

  int cells() const { return static_cast<int>(cells_.size()); }
  int values(int) const { return labels_; }
  void set(int k, int v) {
    auto [i, j] = cells_[static_cast<std::size_t>(k)];
    m_[idx(i, j)] = v + 1;
  }
  bool completes(int k) const {
    auto [i, j] = cells_[static_cast<std::size_t>(k)];
    const LabelFn l = [this](Vertex x, Vertex y) { return m_[idx(x, y)]; };
    if (t_ == 0) return ni_ending(l, s_, notion_, i, j).has_value();
    return hst_ending(l, s_, t_, i, j).has_value();
  }
  PairLabeling labeling() const {
    return PairLabeling::from_function(n_, labels_, [this](Vertex x, Vertex y) { return m_[idx(x, y)]; });
  }

 private:
  std::size_t idx(Vertex x, Vertex y) const { return static_cast<std::size_t>(x) * (n_ + 1) + y; }
  int n_, labels_, s_, t_;
  Notion notion_;
  std::vector<std::pair<Vertex, Vertex>> cells_;
  std::vector<int> m_;
};

}  // namespace oracle_detail

/// Threshold N, or Unknown when every N up to n_max has an avoider. The
/// extremal instance is an avoider on N-1 vertices (N_max when Unknown).
template <class Extremal>
struct Threshold {
  std::optional<int> value;
  int n_max = 0;
  std::optional<Extremal> extremal;
  bool known() const { return value.has_value(); }
};

using RamseyResult = Threshold<Instance>;
using LabelThreshold = Threshold<PairLabeling>;

/// R_<(G, H): least N such that every coloring of the N-vertex ordered
/// complete (hyper)graph has a red G or a blue H. Pattern colors are ignored.
inline RamseyResult exact_ordered_ramsey(PatternSpec g, PatternSpec h, int n_max, int jobs = 1) {
  g.validate();
  h.validate();
  if (g.uniform3() != h.uniform3()) throw std::invalid_argument("patterns must have the same uniformity");
  g.color = Color::Red;
  h.color = Color::Blue;
  const bool symmetric = g.kind == h.kind && g.n == h.n && g.t == h.t;
  RamseyResult out;
  out.n_max = n_max;
  for (int N = 1; N <= n_max; ++N) {
    const bool forced = (oracle_detail::edgeless(g) && N >= g.order()) || (oracle_detail::edgeless(h) && N >= h.order());
    std::optional<Instance> avoider;
    if (!forced) {
      if (g.uniform3()) {
        if (auto st = oracle_detail::find_avoider(oracle_detail::TripleState(N, g, h, symmetric), jobs))
          avoider = st->coloring();
      } else if (auto st = oracle_detail::find_avoider(oracle_detail::GraphState(N, g, h, symmetric), jobs)) {
        avoider = st->coloring();
      }
    }
    if (!avoider) {
      out.value = N;
      return out;
    }
    out.extremal = std::move(avoider);
  }
  return out;
}

namespace oracle_detail {

inline LabelThreshold label_threshold(int n, int s, int t, Notion notion, int n_max, int jobs) {
  if (n < 1 || s < 1 || t < 0) throw std::invalid_argument("threshold needs n >= 1, s >= 1");
  LabelThreshold out;
  out.n_max = n_max;
  const int order = t == 0 ? s : s + t - 1;
  for (int N = 1; N <= n_max; ++N) {
    std::optional<PairLabeling> avoider;
    if (N < order) {
      avoider = PairLabeling::constant(N, n, 1);
    } else if (s >= 2 && order >= 2) {
      if (auto st = find_avoider(LabelState(N, n, s, t, notion), jobs)) avoider = st->labeling();
    }
    if (!avoider) {
      out.value = N;
      return out;
    }
    out.extremal = std::move(avoider);
  }
  return out;
}

}  // namespace oracle_detail

/// g(n, s): least N such that every n-labeling of the pairs of [N] has a
/// non-increasing s-set under `notion`.
inline LabelThreshold exact_g(int n, int s, int n_max, Notion notion = Notion::Full, int jobs = 1) {
  return oracle_detail::label_threshold(n, s, 0, notion, n_max, jobs);
}

/// f(n; s, t): the same for copies of H_{s,t}.
inline LabelThreshold exact_f(int n, int s, int t, int n_max, int jobs = 1) {
  if (s < 2 || t < 1) throw std::invalid_argument("H_{s,t} needs s >= 2, t >= 1");
  return oracle_detail::label_threshold(n, s, t, Notion::Full, n_max, jobs);
}

}  // namespace ordram
