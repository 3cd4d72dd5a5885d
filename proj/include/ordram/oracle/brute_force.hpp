#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordram/core/coloring.hpp"
#include "ordram/core/pattern.hpp"
#include "ordram/witness/certificate.hpp"

// Definitional searches. Nothing here uses the extractors, so the results can
// be compared against them.

namespace ordram {

namespace oracle_detail {

/// Patterns that need no edge (or triple) are present once N >= order.
inline bool edgeless(const PatternSpec& p) {
  switch (p.kind) {
    case PatternSpec::Kind::Clique:
    case PatternSpec::Kind::PathPower:
    case PatternSpec::Kind::Blowup: return p.n <= 1;
    case PatternSpec::Kind::TightPath3:
    case PatternSpec::Kind::Clique3: return p.n <= 2;
  }
  return false;
}

/// `col(x, y)` for x < y; witnesses are returned in increasing order.
using PairColor = std::function<Color(Vertex, Vertex)>;
using TripleColor = std::function<Color(Vertex, Vertex, Vertex)>;

/// Combinations of size k from `pool`, in lexicographic order.
inline bool for_each_subset(const VertexList& pool, int k, const std::function<bool(const VertexList&)>& visit) {
  VertexList cur;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (static_cast<int>(cur.size()) == k) return visit(cur);
    for (std::size_t a = from; a + (static_cast<std::size_t>(k) - cur.size()) <= pool.size(); ++a) {
      cur.push_back(pool[a]);
      const bool go_on = rec(a + 1);
      cur.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(0);
}

/// Clique of `col` with i, j as its two largest vertices.
inline std::optional<VertexList> clique_ending(const PairColor& col, Color c, int s, Vertex i, Vertex j) {
  if (col(i, j) != c) return std::nullopt;
  VertexList pool;
  for (Vertex u = 1; u < i; ++u)
    if (col(u, i) == c && col(u, j) == c) pool.push_back(u);
  std::optional<VertexList> out;
  for_each_subset(pool, s - 2, [&](const VertexList& sub) {
    for (std::size_t a = 0; a < sub.size(); ++a)
      for (std::size_t b = a + 1; b < sub.size(); ++b)
        if (col(sub[a], sub[b]) != c) return true;
    out = sub;
    out->push_back(i);
    out->push_back(j);
    return false;
  });
  return out;
}

/// t-th power of a path on n vertices whose last two vertices are i, j.
inline std::optional<VertexList> path_power_ending(const PairColor& col, Color c, int n, int t, Vertex i, Vertex j) {
  if (col(i, j) != c) return std::nullopt;
  VertexList rev{j, i};
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(rev.size()) == n) return true;
    const std::size_t reach = std::min<std::size_t>(static_cast<std::size_t>(t), rev.size());
    for (Vertex u = rev.back() - 1; u >= 1; --u) {
      bool ok = true;
      for (std::size_t k = 0; ok && k < reach; ++k) ok = col(u, rev[rev.size() - 1 - k]) == c;
      if (!ok) continue;
      rev.push_back(u);
      if (rec()) return true;
      rev.pop_back();
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  std::reverse(rev.begin(), rev.end());
  return rev;
}

/// n groups of t vertices, consecutive groups completely joined in `col`,
/// with i the largest vertex of group n-1 and j the largest of group n.
inline std::optional<std::vector<VertexList>> blowup_ending(const PairColor& col, Color c, int n, int t, Vertex i,
                                                            Vertex j) {
  if (col(i, j) != c) return std::nullopt;
  std::vector<VertexList> groups;  // last group first
  auto joined = [&](const VertexList& a, const VertexList& b) {
    for (Vertex x : a)
      for (Vertex y : b)
        if (col(x, y) != c) return false;
    return true;
  };
  std::function<bool()> earlier = [&]() -> bool {
    if (static_cast<int>(groups.size()) == n) return true;
    const VertexList& next = groups.back();
    VertexList pool;
    for (Vertex u = 1; u < next.front(); ++u) pool.push_back(u);
    return !for_each_subset(pool, t, [&](const VertexList& g) {
      if (!joined(g, next)) return true;
      groups.push_back(g);
      if (earlier()) return false;
      groups.pop_back();
      return true;
    });
  };
  VertexList last_pool, prev_pool;
  for (Vertex u = i + 1; u < j; ++u) last_pool.push_back(u);
  for (Vertex u = 1; u < i; ++u) prev_pool.push_back(u);
  const bool found = !for_each_subset(last_pool, t - 1, [&](const VertexList& lo) {
    VertexList last = lo;
    last.push_back(j);
    return for_each_subset(prev_pool, t - 1, [&](const VertexList& po) {
      VertexList prev = po;
      prev.push_back(i);
      if (!joined(prev, last)) return true;
      groups = {last, prev};
      return !earlier();
    });
  });
  if (!found) return std::nullopt;
  std::reverse(groups.begin(), groups.end());
  return groups;
}

/// Tight path on n vertices ending with the triple a < b < e.
inline std::optional<VertexList> tight_ending(const TripleColor& col, Color c, int n, Vertex a, Vertex b, Vertex e) {
  if (col(a, b, e) != c) return std::nullopt;
  VertexList rev{e, b, a};
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(rev.size()) == n) return true;
    const std::size_t k = rev.size();
    for (Vertex u = rev.back() - 1; u >= 1; --u) {
      if (col(u, rev[k - 1], rev[k - 2]) != c) continue;
      rev.push_back(u);
      if (rec()) return true;
      rev.pop_back();
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  std::reverse(rev.begin(), rev.end());
  return rev;
}

/// 3-uniform clique whose three largest vertices are a < b < e.
inline std::optional<VertexList> clique3_ending(const TripleColor& col, Color c, int s, Vertex a, Vertex b, Vertex e) {
  if (col(a, b, e) != c) return std::nullopt;
  VertexList pool;
  for (Vertex u = 1; u < a; ++u)
    if (col(u, a, b) == c && col(u, a, e) == c && col(u, b, e) == c) pool.push_back(u);
  std::optional<VertexList> out;
  for_each_subset(pool, s - 3, [&](const VertexList& sub) {
    for (std::size_t x = 0; x < sub.size(); ++x)
      for (std::size_t y = x + 1; y < sub.size(); ++y) {
        if (col(sub[x], sub[y], a) != c || col(sub[x], sub[y], b) != c || col(sub[x], sub[y], e) != c) return true;
        for (std::size_t z = y + 1; z < sub.size(); ++z)
          if (col(sub[x], sub[y], sub[z]) != c) return true;
      }
    out = sub;
    out->insert(out->end(), {a, b, e});
    return false;
  });
  return out;
}

inline Certificate make_cert(const PatternSpec& p, VertexList vs) {
  Certificate c;
  c.color = p.color;
  c.route = "brute-force";
  switch (p.kind) {
    case PatternSpec::Kind::Clique:
      c.kind = CertKind::MonoClique;
      c.params["s"] = p.n;
      break;
    case PatternSpec::Kind::PathPower:
      c.kind = CertKind::MonoPathPower;
      c.params["n"] = p.n;
      c.params["t"] = p.t;
      break;
    case PatternSpec::Kind::TightPath3:
      c.kind = CertKind::MonoTightPath3;
      c.params["n"] = p.n;
      break;
    case PatternSpec::Kind::Clique3:
      c.kind = CertKind::MonoClique3;
      c.params["s"] = p.n;
      break;
    case PatternSpec::Kind::Blowup: {
      c.kind = CertKind::MonoBlowup;
      c.params["n"] = p.n;
      c.params["t"] = p.t;
      BlowupAux aux;
      for (std::size_t k = 0; k < vs.size(); k += static_cast<std::size_t>(p.t))
        aux.groups.emplace_back(vs.begin() + static_cast<std::ptrdiff_t>(k),
                                vs.begin() + static_cast<std::ptrdiff_t>(k) + p.t);
      c.aux = std::move(aux);
      break;
    }
  }
  c.vertices = std::move(vs);
  return c;
}

/// Witness of a 2-uniform pattern whose last pair is (i, j).
inline std::optional<VertexList> pair_witness_ending(const PairColor& col, const PatternSpec& p, Vertex i, Vertex j) {
  switch (p.kind) {
    case PatternSpec::Kind::Clique: return clique_ending(col, p.color, p.n, i, j);
    case PatternSpec::Kind::PathPower: return path_power_ending(col, p.color, p.n, p.t, i, j);
    case PatternSpec::Kind::Blowup: {
      auto g = blowup_ending(col, p.color, p.n, p.t, i, j);
      if (!g) return std::nullopt;
      VertexList flat;
      for (const auto& grp : *g) flat.insert(flat.end(), grp.begin(), grp.end());
      return flat;
    }
    default: throw std::invalid_argument("pattern " + p.describe() + " is not a graph pattern");
  }
}

inline std::optional<VertexList> triple_witness_ending(const TripleColor& col, const PatternSpec& p, Vertex a, Vertex b,
                                                       Vertex e) {
  switch (p.kind) {
    case PatternSpec::Kind::TightPath3: return tight_ending(col, p.color, p.n, a, b, e);
    case PatternSpec::Kind::Clique3: return clique3_ending(col, p.color, p.n, a, b, e);
    default: throw std::invalid_argument("pattern " + p.describe() + " is not a 3-uniform pattern");
  }
}

inline VertexList first_vertices(int k) {
  VertexList v;
  for (int i = 1; i <= k; ++i) v.push_back(i);
  return v;
}

}  // namespace oracle_detail

inline constexpr int kDefaultBruteForceCap = 64;

/// Exhaustive search for `pattern` in a two-coloring or a triple coloring.
/// nullopt is an authoritative absence. Throws CapExceeded above `cap`.
inline std::optional<Certificate> brute_force_witness(const Instance& instance, const PatternSpec& pattern,
                                                      int cap = kDefaultBruteForceCap) {
  pattern.validate();
  if (const auto* g = std::get_if<TwoColoring>(&instance)) {
    if (pattern.uniform3()) throw std::invalid_argument("3-uniform pattern on a graph coloring");
    const int N = g->size();
    if (N > cap) throw CapExceeded("brute force refuses N=" + std::to_string(N) + " above cap " + std::to_string(cap));
    if (oracle_detail::edgeless(pattern)) {
      if (N < pattern.order()) return std::nullopt;
      return oracle_detail::make_cert(pattern, oracle_detail::first_vertices(pattern.order()));
    }
    const oracle_detail::PairColor col = [g](Vertex x, Vertex y) { return (*g)(x, y); };
    for (Vertex j = 2; j <= N; ++j)
      for (Vertex i = 1; i < j; ++i)
        if (auto w = oracle_detail::pair_witness_ending(col, pattern, i, j)) return oracle_detail::make_cert(pattern, *w);
    return std::nullopt;
  }
  if (const auto* h = std::get_if<TripleColoring>(&instance)) {
    if (!pattern.uniform3()) throw std::invalid_argument("graph pattern on a triple coloring");
    const int N = h->size();
    if (N > cap) throw CapExceeded("brute force refuses N=" + std::to_string(N) + " above cap " + std::to_string(cap));
    if (oracle_detail::edgeless(pattern)) {
      if (N < pattern.order()) return std::nullopt;
      return oracle_detail::make_cert(pattern, oracle_detail::first_vertices(pattern.order()));
    }
    const oracle_detail::TripleColor col = [h](Vertex x, Vertex y, Vertex z) { return (*h)(x, y, z); };
    for (Vertex e = 3; e <= N; ++e)
      for (Vertex b = 2; b < e; ++b)
        for (Vertex a = 1; a < b; ++a)
          if (auto w = oracle_detail::triple_witness_ending(col, pattern, a, b, e))
            return oracle_detail::make_cert(pattern, *w);
    return std::nullopt;
  }
  throw std::invalid_argument("brute force supports graph and triple colorings only");
}

}  // namespace ordram
