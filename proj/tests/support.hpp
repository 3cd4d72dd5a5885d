#pragma once

// Exhaustive recomputations used as references in the test suites. They
// work on bitmasks over at most ~20 vertices and share no code with the
// dynamic programs they check.

#include <cstdint>
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ordram/ordram.hpp"

namespace ordtest {

using namespace ordram;

inline TwoColoring coin(int n, std::uint64_t seed, const char* p_blue = "1/2") {
  return random_two_coloring(n, Probability::parse(p_blue), seed);
}

inline VertexList mask_vertices(std::uint32_t mask) {
  VertexList out;
  for (int v = 1; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

inline VertexList iota_list(int from, int to) {
  VertexList out;
  for (int v = from; v <= to; ++v) out.push_back(v);
  return out;
}

inline bool is_path_power(const TwoColoring& c, Color col, const VertexList& vs, int t) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size() && j <= i + static_cast<std::size_t>(t); ++j)
      if (c(vs[i], vs[j]) != col) return false;
  return true;
}

/// Largest size of a color-`col` P^t whose last t vertices are the key.
inline std::map<VertexList, int> brute_window_chi(const TwoColoring& c, int t, Color col) {
  std::map<VertexList, int> best;
  for (std::uint32_t mask = 1; mask < (1u << c.size()); ++mask) {
    const auto vs = mask_vertices(mask);
    if (static_cast<int>(vs.size()) < t || !is_path_power(c, col, vs, t)) continue;
    VertexList key(vs.end() - t, vs.end());
    int& slot = best[key];
    slot = std::max(slot, static_cast<int>(vs.size()));
  }
  return best;
}

/// lam[v] = longest blue monotone path ending at v.
inline std::vector<int> brute_lambda(const TwoColoring& c, Color col) {
  std::vector<int> lam(static_cast<std::size_t>(c.size()) + 1, 0);
  for (std::uint32_t mask = 1; mask < (1u << c.size()); ++mask) {
    const auto vs = mask_vertices(mask);
    if (!is_path_power(c, col, vs, 1)) continue;
    auto& slot = lam[static_cast<std::size_t>(vs.back())];
    slot = std::max(slot, static_cast<int>(vs.size()));
  }
  return lam;
}

/// chi[x][y] = longest blue tight path ending with x, y.
inline std::vector<std::vector<int>> brute_tight(const TripleColoring& c) {
  const auto n = static_cast<std::size_t>(c.size());
  std::vector<std::vector<int>> chi(n + 1, std::vector<int>(n + 1, 0));
  for (std::uint32_t mask = 1; mask < (1u << c.size()); ++mask) {
    const auto vs = mask_vertices(mask);
    if (vs.size() < 2) continue;
    bool ok = true;
    for (std::size_t i = 0; i + 2 < vs.size() && ok; ++i) ok = c(vs[i], vs[i + 1], vs[i + 2]) == Color::Blue;
    if (!ok) continue;
    int& slot = chi[static_cast<std::size_t>(vs[vs.size() - 2])][static_cast<std::size_t>(vs.back())];
    slot = std::max(slot, static_cast<int>(vs.size()));
  }
  return chi;
}

/// chi[v] = most cliques in a color-`col` t-clique chain ending at v, from
/// an explicit list of all t-cliques.
inline std::vector<int> brute_chain(const TwoColoring& c, Color col, int t) {
  std::vector<VertexList> cliques;
  for (std::uint32_t mask = 1; mask < (1u << c.size()); ++mask) {
    const auto vs = mask_vertices(mask);
    if (static_cast<int>(vs.size()) == t && is_clique(c, col, vs)) cliques.push_back(vs);
  }
  std::vector<int> chi(static_cast<std::size_t>(c.size()) + 1, 0);
  for (Vertex v = 1; v <= c.size(); ++v)
    for (const auto& k : cliques)
      if (k.back() == v) chi[v] = std::max(chi[v], 1 + chi[static_cast<std::size_t>(k.front())]);
  return chi;
}

/// Any blue K_{t,t} between A and B, by trying every pair of t-subsets.
inline bool brute_ktt(const TwoColoring& c, const VertexList& a, const VertexList& b, int t) {
  bool found = false;
  auto subsets = [](const VertexList& pool, int k) {
    std::vector<VertexList> out;
    for (std::uint32_t m = 0; m < (1u << pool.size()); ++m) {
      if (__builtin_popcount(m) != k) continue;
      VertexList s;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (m >> i & 1u) s.push_back(pool[i]);
      out.push_back(s);
    }
    return out;
  };
  const auto left = subsets(a, t), right = subsets(b, t);
  for (const auto& l : left)
    for (const auto& r : right) {
      bool all = true;
      for (Vertex x : l)
        for (Vertex y : r) all = all && x != y && c.color(std::min(x, y), std::max(x, y)) == Color::Blue;
      found = found || all;
    }
  return found;
}

/// Forest validity against a function family, written out directly.
inline bool chi_forest_ok(const ChiFunctions& chi, const OrderedForest& f) {
  const auto nodes = f.nodes();
  for (Vertex v : nodes) {
    if (v < 1 || v > chi.domain()) return false;
    const Vertex p = f.parent(v);
    if (p == 0) continue;
    if (p >= v) return false;
    if (chi(f.depth(p), p) < chi(f.depth(p), v)) return false;
  }
  for (Vertex v : f.leaves())
    if (f.depth(v) != chi.q()) return false;
  // Well-ordered: same-depth y < y' puts every descendant of y before y'.
  for (Vertex y : nodes)
    for (Vertex z : nodes) {
      if (!(y < z) || f.depth(y) != f.depth(z)) continue;
      for (Vertex d : f.subtree(y).nodes())
        if (d > z) return false;
    }
  return true;
}

struct NetFixture {
  TwoColoring coloring;
  RedNet net;
};

/// A valid s-red-net of order r (s <= 2, t <= 2) on a random coloring.
/// Sets are blue intervals with random gaps; ancestor/descendant pairs get
/// red cross edges for t = 1 and a partial blue matching for t = 2, so no
/// blue K_{t,t} can appear there. Other cross edges are blue with p_cross.
inline NetFixture random_net(std::uint64_t seed, int s, int t, int r, const Probability& p_cross) {
  Rng rng(seed, 77);
  std::map<Vertex, Vertex> parent;
  Vertex next = 1;
  const int roots = 2 + static_cast<int>(rng.below(3));
  for (int i = 0; i < roots; ++i) {
    const Vertex root = next++;
    parent[root] = 0;
    if (s == 2) {
      const int kids = 1 + static_cast<int>(rng.below(3));
      for (int k = 0; k < kids; ++k) parent[next++] = root;
    }
  }
  OrderedForest forest(parent);
  std::map<Vertex, VertexList> sets;
  std::vector<Vertex> owner{0}, index{0};
  Vertex cur = 1;
  auto pad = [&](int count) {
    for (int g = 0; g < count; ++g, ++cur) {
      owner.push_back(0);
      index.push_back(0);
    }
  };
  for (Vertex v : forest.nodes()) {
    pad(static_cast<int>(rng.below(3)));
    for (int i = 0; i < r; ++i, ++cur) {
      sets[v].push_back(cur);
      owner.push_back(v);
      index.push_back(i);
    }
  }
  pad(static_cast<int>(rng.below(3)));
  const int n = cur - 1;
  std::vector<std::vector<Color>> col(static_cast<std::size_t>(n) + 1, std::vector<Color>(static_cast<std::size_t>(n) + 1));
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) {
      const Vertex a = owner[i], b = owner[j];
      Color c = rng.bernoulli(p_cross) ? Color::Blue : Color::Red;
      if (a && a == b) c = Color::Blue;
      else if (a && b && (forest.is_ancestor(a, b) || forest.is_ancestor(b, a)))
        c = t == 2 && index[i] == index[j] && rng.below(2) ? Color::Blue : Color::Red;
      col[i][j] = c;
    }
  auto coloring = TwoColoring::from_function(n, [&](Vertex i, Vertex j) { return col[i][j]; });
  return {std::move(coloring), RedNet{s, r, t, forest, sets}};
}

/// Outcome invariants of a net resolution, re-derived from the coloring.
/// Returns an empty string when they all hold.
inline std::string resolution_problem(const TwoColoring& c, const RedNet& net, const NetResolution& res) {
  auto inside = [](const VertexList& part, const VertexList& whole) {
    for (Vertex v : part)
      if (std::find(whole.begin(), whole.end(), v) == whole.end()) return false;
    return true;
  };
  auto middle = [&](Vertex node) {
    const auto& x = net.sets.at(node);
    const auto k = static_cast<std::ptrdiff_t>(x.size() / 3);
    return VertexList(x.begin() + k, x.begin() + 2 * k);
  };
  if (res.is_family()) {
    const auto& fam = res.family();
    if (static_cast<int>(fam.sets.size()) != net.s + 1) return "family size";
    for (std::size_t i = 0; i < fam.sets.size(); ++i) {
      if (3 * static_cast<int>(fam.sets[i].size()) < net.r) return "small set";
      if (!inside(fam.sets[i], net.sets.at(fam.nodes[i]))) return "set outside its node";
    }
    for (std::size_t i = 0; i < fam.sets.size(); ++i)
      for (std::size_t j = i + 1; j < fam.sets.size(); ++j)
        if (brute_ktt(c, fam.sets[i], fam.sets[j], net.t)) return "blue K_t,t in family";
    return {};
  }
  const auto& b = res.bundle();
  if (static_cast<int>(b.paths.size()) != net.s) return "path count";
  std::set<Vertex> used;
  long long total = 0;
  for (std::size_t i = 0; i < b.paths.size(); ++i) {
    const auto& p = b.paths[i];
    if (static_cast<int>(p.size()) < net.t) return "short path";
    if (!std::is_sorted(p.begin(), p.end()) || !is_path_power(c, Color::Blue, p, net.t)) return "not a blue path power";
    for (Vertex v : p)
      if (!used.insert(v).second) return "paths overlap";
    total += static_cast<long long>(p.size());
    if (!inside(VertexList(p.begin(), p.begin() + net.t), middle(b.sigma[i]))) return "bad start";
    if (!inside(VertexList(p.end() - net.t, p.end()), middle(b.pi[i]))) return "bad end";
  }
  const auto head = net.forest.head(), tail = net.forest.tail();
  if (std::set<Vertex>(b.sigma.begin(), b.sigma.end()) != std::set<Vertex>(head.begin(), head.end())) return "sigma";
  if (std::set<Vertex>(b.pi.begin(), b.pi.end()) != std::set<Vertex>(tail.begin(), tail.end())) return "pi";
  if (3 * total < static_cast<long long>(net.forest.size()) * net.r) return "total length";
  return {};
}

}  // namespace ordtest
