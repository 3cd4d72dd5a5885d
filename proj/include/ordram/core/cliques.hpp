#pragma once

#include <optional>

#include "ordram/core/coloring.hpp"

namespace ordram {

namespace detail {

inline bool first_clique_dfs(const TwoColoring& c, Color col, const Bitset& cand, int need, VertexList& acc) {
  if (need == 0) return true;
  if (static_cast<int>(cand.count()) < need) return false;
  for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
    Bitset next = cand & c.neighbors(col, static_cast<Vertex>(v));
    // Only vertices after v, so the clique comes out sorted.
    restrict_to(next, v + 1, next.size());
    acc.push_back(static_cast<Vertex>(v));
    if (first_clique_dfs(c, col, next, need - 1, acc)) return true;
    acc.pop_back();
  }
  return false;
}

template <class F>
bool each_clique_dfs(const TwoColoring& c, Color col, const Bitset& cand, int need, VertexList& acc, F& visit) {
  if (need == 0) return visit(static_cast<const VertexList&>(acc));
  if (static_cast<int>(cand.count()) < need) return true;
  for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
    Bitset next = cand & c.neighbors(col, static_cast<Vertex>(v));
    restrict_to(next, v + 1, next.size());
    acc.push_back(static_cast<Vertex>(v));
    const bool go_on = each_clique_dfs(c, col, next, need - 1, acc, visit);
    acc.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/// Lexicographically first `size`-clique of color `col` inside `candidates`.
inline std::optional<VertexList> find_clique(const TwoColoring& c, Color col, const Bitset& candidates, int size) {
  VertexList acc;
  if (size <= 0) return acc;
  if (detail::first_clique_dfs(c, col, candidates, size, acc)) return acc;
  return std::nullopt;
}

inline std::optional<VertexList> find_clique(const TwoColoring& c, Color col, int size) {
  Bitset all = c.make_set();
  all.set();
  all.reset(0);
  return find_clique(c, col, all, size);
}

/// Calls visit(clique) for every `size`-clique of color `col` inside
/// `candidates`, in lexicographic order; visit returns false to stop.
template <class F>
void for_each_clique(const TwoColoring& c, Color col, const Bitset& candidates, int size, F&& visit) {
  VertexList acc;
  if (size <= 0) return;
  detail::each_clique_dfs(c, col, candidates, size, acc, visit);
}

template <class F>
void for_each_clique(const TwoColoring& c, Color col, int size, F&& visit) {
  Bitset all = c.make_set();
  all.set();
  all.reset(0);
  for_each_clique(c, col, all, size, visit);
}

/// All pairs of `vs` carry color `col`.
inline bool is_clique(const TwoColoring& c, Color col, const VertexList& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (c(vs[i], vs[j]) != col) return false;
  return true;
}

inline bool is_clique3(const TripleColoring& c, Color col, const VertexList& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (std::size_t k = j + 1; k < vs.size(); ++k)
        if (c(vs[i], vs[j], vs[k]) != col) return false;
  return true;
}

}  // namespace ordram
