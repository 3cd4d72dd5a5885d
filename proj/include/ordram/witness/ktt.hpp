#pragma once

#include <optional>
#include <utility>

#include "ordram/core/coloring.hpp"

namespace ordram {

struct Biclique {
  VertexList left;
  VertexList right;
  friend bool operator==(const Biclique&, const Biclique&) = default;
};

namespace detail {

inline bool ktt_dfs(const TwoColoring& c, Color col, const VertexList& a, std::size_t from, const Bitset& common,
                    int t, VertexList& left) {
  if (static_cast<int>(left.size()) == t) return true;
  const std::size_t need = static_cast<std::size_t>(t) - left.size();
  for (std::size_t i = from; i + need <= a.size(); ++i) {
    Bitset next = common & c.neighbors(col, a[i]);
    if (static_cast<int>(next.count()) < t) continue;
    left.push_back(a[i]);
    if (ktt_dfs(c, col, a, i + 1, next, t, left)) return true;
    left.pop_back();
  }
  return false;
}

}  // namespace detail

/// Lexicographically first complete bipartite K_{t,t} of color `col` with
/// left part in A and right part in B. A and B must be disjoint.
inline std::optional<Biclique> find_ktt(const TwoColoring& c, Color col, VertexList a, VertexList b, int t) {
  if (t < 1) throw std::invalid_argument("K_{t,t} needs t >= 1");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  Bitset bset = c.make_set(b);
  for (Vertex v : a)
    if (bset.test(static_cast<std::size_t>(v))) throw std::invalid_argument("K_{t,t} parts must be disjoint");
  if (static_cast<int>(a.size()) < t || static_cast<int>(b.size()) < t) return std::nullopt;
  VertexList left;
  if (!detail::ktt_dfs(c, col, a, 0, bset, t, left)) return std::nullopt;
  Bitset common = bset;
  for (Vertex v : left) common &= c.neighbors(col, v);
  VertexList right;
  for (auto u = common.find_first(); u != Bitset::npos && static_cast<int>(right.size()) < t; u = common.find_next(u))
    right.push_back(static_cast<Vertex>(u));
  return Biclique{std::move(left), std::move(right)};
}

inline std::optional<Biclique> has_blue_ktt(const TwoColoring& c, const VertexList& a, const VertexList& b, int t) {
  return find_ktt(c, Color::Blue, a, b, t);
}

}  // namespace ordram
