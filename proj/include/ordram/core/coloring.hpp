#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ordram/core/types.hpp"

namespace ordram {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Clears every bit outside [lo, hi).
inline void restrict_to(Bitset& b, std::size_t lo, std::size_t hi) {
  const std::size_t n = b.size();
  lo = std::min(lo, n);
  hi = std::min(hi, n);
  if (lo >= hi) {
    b.reset();
    return;
  }
  if (lo > 0) b.reset(0, lo);
  if (hi < n) b.reset(hi, n - hi);
}

/// Red/blue coloring of the complete ordered graph on 1..N.
///
/// Immutable once built. Besides the pair lookup it keeps one neighbourhood
/// bitset per vertex and color (bit v set for neighbour v; bit 0 unused), which
/// the clique and K_{t,t} searches intersect directly.
class TwoColoring {
 public:
  TwoColoring() = default;

  template <class F>
  static TwoColoring from_function(int n, F&& color_of) {
    TwoColoring c(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) c.set(i, j, color_of(i, j));
    return c;
  }

  /// Listed pairs blue, all others red. Pairs must satisfy 1 <= i < j <= N and
  /// appear at most once.
  static TwoColoring from_blue_pairs(int n, std::span<const std::pair<Vertex, Vertex>> blue_pairs) {
    if (n < 1) throw std::invalid_argument("coloring needs N >= 1");
    TwoColoring c(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [i, j] : blue_pairs) {
      if (i < 1 || j > n || i >= j)
        throw std::out_of_range("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                ") out of range for N=" + std::to_string(n));
      if (!seen.insert({i, j}).second)
        throw std::invalid_argument("duplicate pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      c.set(i, j, Color::Blue);
    }
    return c;
  }

  static TwoColoring monochromatic(int n, Color col) {
    return from_function(n, [col](Vertex, Vertex) { return col; });
  }

  int size() const { return n_; }

  /// Checked query for i < j.
  Color color(Vertex i, Vertex j) const {
    if (i < 1 || j > n_ || i >= j)
      throw std::out_of_range("pair query requires 1 <= i < j <= N");
    return (*this)(i, j);
  }

  /// Unchecked symmetric lookup, u != v.
  Color operator()(Vertex u, Vertex v) const {
    return static_cast<Color>(cells_[static_cast<std::size_t>(u) * stride() + v]);
  }

  bool is(Color c, Vertex u, Vertex v) const { return (*this)(u, v) == c; }

  const Bitset& neighbors(Color c, Vertex v) const {
    return c == Color::Red ? red_[static_cast<std::size_t>(v)] : blue_[static_cast<std::size_t>(v)];
  }

  /// Empty bitset sized for this coloring.
  Bitset make_set() const { return Bitset(static_cast<std::size_t>(n_) + 1); }

  Bitset make_set(std::span<const Vertex> vs) const {
    Bitset b = make_set();
    for (Vertex v : vs) b.set(static_cast<std::size_t>(v));
    return b;
  }

  /// Coloring induced on `vertices` (strictly increasing), relabelled 1..k.
  TwoColoring induced(std::span<const Vertex> vertices) const {
    const int k = static_cast<int>(vertices.size());
    return from_function(k, [&](Vertex a, Vertex b) { return (*this)(vertices[a - 1], vertices[b - 1]); });
  }

  TwoColoring complement() const {
    return from_function(n_, [this](Vertex a, Vertex b) { return opposite((*this)(a, b)); });
  }

  friend bool operator==(const TwoColoring& a, const TwoColoring& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  explicit TwoColoring(int n)
      : n_(n),
        cells_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0),
        red_(static_cast<std::size_t>(n) + 1, Bitset(static_cast<std::size_t>(n) + 1)),
        blue_(static_cast<std::size_t>(n) + 1, Bitset(static_cast<std::size_t>(n) + 1)) {
    // Starts all red.
    for (int v = 1; v <= n; ++v) {
      red_[v].set();
      red_[v].reset(0);
      red_[v].reset(static_cast<std::size_t>(v));
    }
  }

  std::size_t stride() const { return static_cast<std::size_t>(n_) + 1; }

  void set(Vertex i, Vertex j, Color c) {
    cells_[static_cast<std::size_t>(i) * stride() + j] = static_cast<std::uint8_t>(c);
    cells_[static_cast<std::size_t>(j) * stride() + i] = static_cast<std::uint8_t>(c);
    auto& adj = c == Color::Red ? red_ : blue_;
    auto& other = c == Color::Red ? blue_ : red_;
    adj[i].set(j);
    adj[j].set(i);
    other[i].reset(j);
    other[j].reset(i);
  }

  int n_ = 0;
  std::vector<std::uint8_t> cells_;
  std::vector<Bitset> red_;
  std::vector<Bitset> blue_;
};

/// Red/blue coloring of the complete ordered 3-uniform hypergraph on 1..N.
class TripleColoring {
 public:
  TripleColoring() = default;

  template <class F>
  static TripleColoring from_function(int n, F&& color_of) {
    if (n < 1) throw std::invalid_argument("coloring needs N >= 1");
    TripleColoring c(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) c.cells_[c.index(i, j, k)] = static_cast<std::uint8_t>(color_of(i, j, k));
    return c;
  }

  static TripleColoring monochromatic(int n, Color col) {
    return from_function(n, [col](Vertex, Vertex, Vertex) { return col; });
  }

  int size() const { return n_; }

  Color color(Vertex i, Vertex j, Vertex k) const {
    if (i < 1 || k > n_ || i >= j || j >= k)
      throw std::out_of_range("triple query requires 1 <= i < j < k <= N");
    return (*this)(i, j, k);
  }

  /// Unchecked; requires i < j < k.
  Color operator()(Vertex i, Vertex j, Vertex k) const { return static_cast<Color>(cells_[index(i, j, k)]); }

  friend bool operator==(const TripleColoring& a, const TripleColoring& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  explicit TripleColoring(int n) : n_(n), cells_(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1), 0) {
    if (n > 512) throw std::invalid_argument("triple colorings are limited to N <= 512");
  }

  std::size_t index(Vertex i, Vertex j, Vertex k) const {
    const auto s = static_cast<std::size_t>(n_) + 1;
    return (static_cast<std::size_t>(i) * s + static_cast<std::size_t>(j)) * s + static_cast<std::size_t>(k);
  }

  int n_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Map from pairs i < j of 1..N to labels in 1..n.
class PairLabeling {
 public:
  PairLabeling() = default;

  template <class F>
  static PairLabeling from_function(int n_vertices, int n_colors, F&& label_of) {
    if (n_vertices < 1) throw std::invalid_argument("labeling needs N >= 1");
    if (n_colors < 1) throw std::invalid_argument("labeling needs n >= 1");
    PairLabeling l(n_vertices, n_colors);
    for (int i = 1; i <= n_vertices; ++i)
      for (int j = i + 1; j <= n_vertices; ++j) {
        const int lab = label_of(i, j);
        if (lab < 1 || lab > n_colors)
          throw std::out_of_range("label " + std::to_string(lab) + " outside [1," + std::to_string(n_colors) + "]");
        l.labels_[l.index(i, j)] = lab;
        l.labels_[l.index(j, i)] = lab;
      }
    return l;
  }

  static PairLabeling constant(int n_vertices, int n_colors, int label) {
    return from_function(n_vertices, n_colors, [label](Vertex, Vertex) { return label; });
  }

  int size() const { return n_; }
  int colors() const { return n_colors_; }

  int label(Vertex i, Vertex j) const {
    if (i < 1 || j > n_ || i >= j) throw std::out_of_range("pair query requires 1 <= i < j <= N");
    return (*this)(i, j);
  }

  /// Unchecked symmetric lookup.
  int operator()(Vertex u, Vertex v) const { return labels_[index(u, v)]; }

  PairLabeling induced(std::span<const Vertex> vertices) const {
    return from_function(static_cast<int>(vertices.size()), n_colors_,
                         [&](Vertex a, Vertex b) { return (*this)(vertices[a - 1], vertices[b - 1]); });
  }

  friend bool operator==(const PairLabeling& a, const PairLabeling& b) {
    return a.n_ == b.n_ && a.n_colors_ == b.n_colors_ && a.labels_ == b.labels_;
  }

 private:
  PairLabeling(int n, int colors)
      : n_(n), n_colors_(colors), labels_(static_cast<std::size_t>(n + 1) * (n + 1), 0) {}

  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * (static_cast<std::size_t>(n_) + 1) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  int n_colors_ = 0;
  std::vector<int> labels_;
};

/// A family of q functions chi_0..chi_{q-1} : [M] -> [n], the input of the
/// forest construction.
class ChiFunctions {
 public:
  ChiFunctions() = default;

  /// values[d][i-1] = chi_d(i).
  ChiFunctions(int n, std::vector<std::vector<int>> values) : n_(n), values_(std::move(values)) {
    if (n < 1) throw std::invalid_argument("function family needs n >= 1");
    m_ = values_.empty() ? 0 : static_cast<int>(values_.front().size());
    for (const auto& row : values_) {
      if (static_cast<int>(row.size()) != m_) throw std::invalid_argument("all functions need the same domain [M]");
      for (int v : row)
        if (v < 1 || v > n) throw std::out_of_range("function value " + std::to_string(v) + " outside [1,n]");
    }
  }

  int q() const { return static_cast<int>(values_.size()); }
  int domain() const { return m_; }
  int range() const { return n_; }

  int operator()(int d, Vertex i) const { return values_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i - 1)]; }

  const std::vector<std::vector<int>>& values() const { return values_; }

  friend bool operator==(const ChiFunctions&, const ChiFunctions&) = default;

 private:
  int n_ = 1;
  int m_ = 0;
  std::vector<std::vector<int>> values_;
};

using Instance = std::variant<TwoColoring, TripleColoring, PairLabeling, ChiFunctions>;

}  // namespace ordram
