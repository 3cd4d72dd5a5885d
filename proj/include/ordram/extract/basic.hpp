#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "ordram/core/cliques.hpp"
#include "ordram/core/coloring.hpp"
#include "ordram/extract/result.hpp"

namespace ordram {

// ---------------------------------------------------------------------------
// Clique versus monotone path.

/// lambda[v] = vertex count of the longest monotone path of color `col`
/// ending at v (index 0 unused).
inline std::vector<int> monopath_lambda(const TwoColoring& c, Color col) {
  std::vector<int> lam(static_cast<std::size_t>(c.size()) + 1, 0);
  for (Vertex v = 1; v <= c.size(); ++v) {
    int best = 0;
    for (Vertex u = 1; u < v; ++u)
      if (c(u, v) == col) best = std::max(best, lam[u]);
    lam[v] = best + 1;
  }
  return lam;
}

/// Red K_s or blue P_n. Succeeds whenever N >= (s-1)(n-1)+1.
inline Extraction extract_clique_vs_monopath(const TwoColoring& c, int s, int n) {
  if (s < 2 || n < 2) throw std::invalid_argument("clique vs path needs s, n >= 2");
  const auto lam = monopath_lambda(c, Color::Blue);
  for (Vertex v = 1; v <= c.size(); ++v) {
    if (lam[v] < n) continue;
    VertexList path{v};
    for (int need = n - 1; need >= 1; --need) {
      const Vertex w = path.back();
      Vertex u = 1;
      while (!(c(u, w) == Color::Blue && lam[u] >= need)) ++u;
      path.push_back(u);
    }
    std::reverse(path.begin(), path.end());
    return path_power_cert(Color::Blue, std::move(path), 1, "blue-path");
  }
  // A blue edge u<v forces lambda(v) > lambda(u), so each level set is red.
  std::map<int, VertexList> level;
  for (Vertex v = 1; v <= c.size(); ++v) level[lam[v]].push_back(v);
  for (auto& [value, vs] : level) {
    if (static_cast<int>(vs.size()) < s) continue;
    vs.resize(static_cast<std::size_t>(s));
    if (!is_clique(c, Color::Red, vs))
      throw ParadoxError("level set " + detail::format_list(vs) + " of the blue path DP is not a red clique");
    return clique_cert(Color::Red, std::move(vs), "lambda-class");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Greedy off-diagonal Ramsey.

/// Color-`col_a` K_a or color-`col_b` K_b inside `pool` by the pivot
/// recursion: the least remaining vertex joins whichever side still meets its
/// threshold. Succeeds whenever |pool| >= C(a+b-2, a-1).
inline Extraction clique_pair_extract_in(const TwoColoring& c, VertexList pool, Color col_a, int a, Color col_b,
                                         int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("clique targets must be >= 1");
  std::sort(pool.begin(), pool.end());
  VertexList side_a, side_b;
  int need_a = a, need_b = b;
  Bitset w = c.make_set(pool);
  for (;;) {
    if (need_a == 0) return clique_cert(col_a, side_a, "pivot");
    if (need_b == 0) return clique_cert(col_b, side_b, "pivot");
    const auto first = w.find_first();
    if (first == Bitset::npos) return std::nullopt;
    const auto v = static_cast<Vertex>(first);
    w.reset(first);
    Bitset wa = w & c.neighbors(col_a, v);
    Bitset wb = w & c.neighbors(col_b, v);
    const auto ta = ramsey_threshold(need_a - 1, need_b), tb = ramsey_threshold(need_a, need_b - 1);
    const auto na = static_cast<long long>(wa.count()), nb = static_cast<long long>(wb.count());
    bool go_a;
    if (na >= ta) go_a = true;
    else if (nb >= tb) go_a = false;
    else go_a = static_cast<long double>(na) / ta >= static_cast<long double>(nb) / tb;  // below threshold
    if (go_a) {
      side_a.push_back(v);
      --need_a;
      w = std::move(wa);
    } else {
      side_b.push_back(v);
      --need_b;
      w = std::move(wb);
    }
  }
}

inline Extraction ramsey_extract_in(const TwoColoring& c, VertexList pool, int s, int n) {
  return clique_pair_extract_in(c, std::move(pool), Color::Red, s, Color::Blue, n);
}

/// Red K_s or blue K_n; succeeds whenever N >= C(s+n-2, s-1).
inline Extraction ramsey_extract(const TwoColoring& c, int s, int n) {
  VertexList all(static_cast<std::size_t>(c.size()));
  for (int i = 0; i < c.size(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return ramsey_extract_in(c, std::move(all), s, n);
}

// ---------------------------------------------------------------------------
// Monotone label paths.

struct LabelPathTables {
  // ni[i][j] / inc[i][j]: edge count of the longest non-increasing / strictly
  // increasing label path whose last edge is (i, j).
  std::vector<std::vector<int>> ni, inc;
};

inline LabelPathTables label_path_tables(const PairLabeling& l) {
  const int n = l.size();
  LabelPathTables t;
  t.ni.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  t.inc = t.ni;
  for (Vertex j = 2; j <= n; ++j)
    for (Vertex i = 1; i < j; ++i) {
      int a = 0, b = 0;
      const int lab = l(i, j);
      for (Vertex h = 1; h < i; ++h) {
        if (l(h, i) >= lab) a = std::max(a, t.ni[h][i]);
        if (l(h, i) < lab) b = std::max(b, t.inc[h][i]);
      }
      t.ni[i][j] = a + 1;
      t.inc[i][j] = b + 1;
    }
  return t;
}

/// Non-increasing label path with p edges or strictly increasing one with q
/// edges; the first outcome is preferred. Succeeds whenever
/// N > C(p+q-2, p-1).
inline Extraction chvatal_komlos_extract(const PairLabeling& l, int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("label paths need p, q >= 1");
  const auto tab = label_path_tables(l);
  const int n = l.size();
  auto trace = [&](const std::vector<std::vector<int>>& dp, bool nonincreasing, int edges) -> Extraction {
    for (Vertex j = 2; j <= n; ++j)
      for (Vertex i = 1; i < j; ++i) {
        if (dp[i][j] < edges) continue;
        VertexList path{j, i};
        for (int need = edges - 1; need >= 1; --need) {
          const Vertex y = path[path.size() - 2], x = path.back();
          const int lab = l(x, y);
          Vertex h = 1;
          while (!(dp[h][x] >= need && (nonincreasing ? l(h, x) >= lab : l(h, x) < lab))) ++h;
          path.push_back(h);
        }
        std::reverse(path.begin(), path.end());
        Certificate c;
        c.kind = CertKind::LabelMonotonePath;
        c.params["edges"] = edges;
        c.vertices = std::move(path);
        c.aux = PathAux{nonincreasing ? Monotonicity::NonIncreasing : Monotonicity::Increasing};
        c.route = nonincreasing ? "nonincreasing" : "increasing";
        return c;
      }
    return std::nullopt;
  };
  if (auto r = trace(tab.ni, true, p)) return r;
  return trace(tab.inc, false, q);
}

// ---------------------------------------------------------------------------
// t-clique chains.

namespace detail {

/// Some (t-2)-clique of color `col` strictly between x and v, inside the
/// common neighbourhood; returns it, lexicographically first.
inline std::optional<VertexList> chain_middle(const TwoColoring& c, Color col, Vertex x, Vertex v, int t) {
  if (c(x, v) != col) return std::nullopt;
  Bitset cand = c.neighbors(col, x) & c.neighbors(col, v);
  restrict_to(cand, static_cast<std::size_t>(x) + 1, static_cast<std::size_t>(v));
  return find_clique(c, col, cand, t - 2);
}

}  // namespace detail

/// chi[v] = most cliques in a color-`col` t-clique chain ending at v (t >= 2).
inline std::vector<int> chain_values(const TwoColoring& c, Color col, int t) {
  if (t < 2) throw std::invalid_argument("chain values need t >= 2");
  std::vector<int> chi(static_cast<std::size_t>(c.size()) + 1, 0);
  for (Vertex v = 1; v <= c.size(); ++v)
    for (Vertex x = 1; x < v; ++x)
      if (chi[x] + 1 > chi[v] && detail::chain_middle(c, col, x, v, t)) chi[v] = chi[x] + 1;
  return chi;
}

namespace detail {

inline Certificate trace_chain(const TwoColoring& c, Color col, int t, int m, const std::vector<int>& chi, Vertex end) {
  std::vector<VertexList> cliques;
  Vertex v = end;
  for (int need = m; need >= 1; --need) {
    for (Vertex x = 1; x < v; ++x) {
      if (chi[x] < need - 1) continue;
      auto mid = chain_middle(c, col, x, v, t);
      if (!mid) continue;
      VertexList clique{x};
      clique.insert(clique.end(), mid->begin(), mid->end());
      clique.push_back(v);
      cliques.push_back(std::move(clique));
      v = x;
      break;
    }
  }
  std::reverse(cliques.begin(), cliques.end());
  Certificate cert;
  cert.kind = CertKind::CliqueChain;
  cert.color = col;
  cert.params["t"] = t;
  cert.params["m"] = m;
  std::set<Vertex> all;
  for (const auto& k : cliques) all.insert(k.begin(), k.end());
  cert.vertices.assign(all.begin(), all.end());
  cert.aux = ChainAux{std::move(cliques)};
  return cert;
}

inline Certificate single_vertex_chain(Color col, int m) {
  Certificate cert;
  cert.kind = CertKind::CliqueChain;
  cert.color = col;
  cert.params["t"] = 1;
  cert.params["m"] = m;
  cert.vertices = {1};
  cert.aux = ChainAux{std::vector<VertexList>(static_cast<std::size_t>(m), VertexList{1})};
  return cert;
}

inline std::optional<Vertex> first_reaching(const std::vector<int>& chi, int m) {
  for (std::size_t v = 1; v < chi.size(); ++v)
    if (chi[v] >= m) return static_cast<Vertex>(v);
  return std::nullopt;
}

}  // namespace detail

struct ChainMode {
  bool red_or_blue_clique = false;
  int n = 0;  // blue clique target in the second mode

  static ChainMode mono() { return {}; }
  static ChainMode red_or_blue_clique_of(int n) { return {true, n}; }
};

/// Mono: a monochromatic t-clique chain with m cliques (the one ending
/// earliest, red on ties). RedOrBlueClique(n): a red chain or a blue K_n.
inline Extraction clique_chain_extract(const TwoColoring& c, int t, int m, ChainMode mode) {
  if (t < 1 || m < 1) throw std::invalid_argument("chains need t, m >= 1");
  if (mode.red_or_blue_clique && mode.n < 1) throw std::invalid_argument("blue clique target must be >= 1");
  if (t == 1) {
    // Single vertices chain with themselves.
    if (c.size() < 1) return std::nullopt;
    return detail::single_vertex_chain(Color::Red, m);
  }
  const auto red = chain_values(c, Color::Red, t);
  const auto red_end = detail::first_reaching(red, m);
  if (!mode.red_or_blue_clique) {
    const auto blue = chain_values(c, Color::Blue, t);
    const auto blue_end = detail::first_reaching(blue, m);
    if (red_end && (!blue_end || *red_end <= *blue_end)) return detail::trace_chain(c, Color::Red, t, m, red, *red_end);
    if (blue_end) return detail::trace_chain(c, Color::Blue, t, m, blue, *blue_end);
    return std::nullopt;
  }
  if (red_end) return detail::trace_chain(c, Color::Red, t, m, red, *red_end);
  // Equal chi_r values: a red t-clique inside would raise chi_r at its end.
  std::map<int, VertexList> level;
  for (Vertex v = 1; v <= c.size(); ++v) level[red[v]].push_back(v);
  const VertexList* best = nullptr;
  for (const auto& [value, vs] : level)
    if (!best || vs.size() > best->size()) best = &vs;
  if (!best) return std::nullopt;
  auto r = ramsey_extract_in(c, *best, t, mode.n);
  if (r && r->color == Color::Red)
    throw ParadoxError("red K_" + std::to_string(t) + " " + detail::format_list(r->vertices) +
                       " inside a level set of the red chain DP");
  if (r) r->route = "chain-level-set";
  return r;
}

}  // namespace ordram
