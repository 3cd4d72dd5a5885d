#pragma once

#include "ordram/core/cliques.hpp"
#include "ordram/core/coloring.hpp"

namespace ordram {

/// (n-1)/t consecutive copies of `inner`, all edges between copies blue.
/// `inner` must have no red K_{s+1} and no blue K_{t+1}; the result then has
/// no red K_{s+1} and no blue P_n^t.
inline TwoColoring generate_lower_bound_blocked(int s, int t, int n, const TwoColoring& inner) {
  if (s < 1 || t < 1 || n < 2) throw std::invalid_argument("blocked construction needs s,t >= 1 and n >= 2");
  if ((n - 1) % t != 0) throw std::invalid_argument("t must divide n-1");
  if (auto k = find_clique(inner, Color::Red, s + 1))
    throw std::invalid_argument("inner coloring contains red K_" + std::to_string(s + 1) + " " + detail::format_list(*k));
  if (auto k = find_clique(inner, Color::Blue, t + 1))
    throw std::invalid_argument("inner coloring contains blue K_" + std::to_string(t + 1) + " " + detail::format_list(*k));
  const int m = inner.size();
  const int blocks = (n - 1) / t;
  return TwoColoring::from_function(m * blocks, [&](Vertex i, Vertex j) {
    const int bi = (i - 1) / m, bj = (j - 1) / m;
    if (bi != bj) return Color::Blue;
    return inner(i - bi * m, j - bj * m);
  });
}

/// s-1 blocks of n-1 vertices, blue inside blocks and red across. Has no red
/// K_s and no blue P_n on (s-1)(n-1) vertices.
inline TwoColoring generate_es_extremal(int s, int n) {
  if (s < 2 || n < 2) throw std::invalid_argument("extremal construction needs s,n >= 2");
  const int m = n - 1;
  return TwoColoring::from_function((s - 1) * m, [m](Vertex i, Vertex j) {
    return (i - 1) / m == (j - 1) / m ? Color::Blue : Color::Red;
  });
}

/// Red 5-cycle 1-2-3-4-5-1, blue diagonals: no monochromatic triangle.
inline TwoColoring pentagon_coloring() {
  return TwoColoring::from_function(5, [](Vertex i, Vertex j) {
    const int d = j - i;
    return d == 1 || d == 4 ? Color::Red : Color::Blue;
  });
}

}  // namespace ordram
