#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ordram/core/cliques.hpp"
#include "ordram/core/coloring.hpp"

namespace ordram {

/// Window DP for path powers: for every t-clique W = (x_1 < ... < x_t) of
/// one color, chi(W) is the largest l such that a P_l^t of that color ends
/// with W.
///
///   chi(x_1..x_t) = max(t, 1 + max chi(x_0, x_1..x_{t-1}))
///
/// over x_0 < x_1 adjacent (in the color) to all of x_1..x_t.
class WindowChi {
 public:
  struct Entry {
    VertexList window;
    int chi = 0;
    Vertex pred = 0;  // least x_0 attaining the max, 0 if chi == t
  };

  WindowChi(const TwoColoring& c, int t, Color col) : c_(&c), t_(t), col_(col), base_(c.size() + 1) {
    if (t < 1) throw std::invalid_argument("window DP needs t >= 1");
    long double cells = 1;
    for (int i = 0; i < t; ++i) cells *= base_;
    dense_ = cells <= 4.0e6L;
    if (dense_) dense_index_.assign(static_cast<std::size_t>(cells), -1);
    for (Vertex v = 1; v <= c.size(); ++v) {
      // Windows ending at v, in lexicographic order of their first t-1 entries.
      Bitset below = c.neighbors(col, v);
      restrict_to(below, 1, static_cast<std::size_t>(v));
      auto visit = [&](const VertexList& head) {
        VertexList w = head;
        w.push_back(v);
        add(std::move(w));
        return true;
      };
      if (t == 1) {
        add(VertexList{v});
      } else {
        for_each_clique(c, col, below, t - 1, visit);
      }
    }
  }

  int t() const { return t_; }
  Color color() const { return col_; }

  /// All entries, ordered by last vertex and then lexicographically.
  const std::vector<Entry>& entries() const { return entries_; }

  std::optional<int> value(const VertexList& w) const {
    const auto idx = index_of(w);
    if (idx < 0) return std::nullopt;
    return entries_[static_cast<std::size_t>(idx)].chi;
  }

  const Entry* find(const VertexList& w) const {
    const auto idx = index_of(w);
    return idx < 0 ? nullptr : &entries_[static_cast<std::size_t>(idx)];
  }

  int max_value() const {
    int best = 0;
    for (const auto& e : entries_) best = std::max(best, e.chi);
    return best;
  }

  /// First entry (in table order) with chi >= l.
  const Entry* first_reaching(int l) const {
    for (const auto& e : entries_)
      if (e.chi >= l) return &e;
    return nullptr;
  }

  /// Vertices of a P_l^t ending with `w`, taking the least predecessor at
  /// every step. Requires chi(w) >= l >= t.
  VertexList trace(const VertexList& w, int l) const {
    const auto v = value(w);
    if (!v || *v < l || l < t_) throw std::invalid_argument("window does not reach the requested length");
    VertexList rev(w.rbegin(), w.rend());
    VertexList cur = w;
    for (int need = l - 1; need >= t_; --need) {
      Bitset cand = common_below(cur);
      Vertex chosen = 0;
      VertexList next;
      for (auto x = cand.find_first(); x != Bitset::npos; x = cand.find_next(x)) {
        next.assign(1, static_cast<Vertex>(x));
        next.insert(next.end(), cur.begin(), cur.end() - 1);
        const auto nv = value(next);
        if (nv && *nv >= need) {
          chosen = static_cast<Vertex>(x);
          break;
        }
      }
      if (!chosen) throw std::logic_error("window trace lost its predecessor");
      rev.push_back(chosen);
      cur = next;
    }
    return VertexList(rev.rbegin(), rev.rend());
  }

 private:
  std::uint64_t key(const VertexList& w) const {
    std::uint64_t k = 0;
    // First vertex least significant, so predecessors of one window sit together.
    for (auto it = w.rbegin(); it != w.rend(); ++it) k = k * static_cast<std::uint64_t>(base_) + static_cast<std::uint64_t>(*it);
    return k;
  }

  int index_of(const VertexList& w) const {
    if (static_cast<int>(w.size()) != t_) return -1;
    for (Vertex v : w)
      if (v < 1 || v >= base_) return -1;
    const auto k = key(w);
    if (dense_) return dense_index_[k];
    auto it = sparse_index_.find(k);
    return it == sparse_index_.end() ? -1 : it->second;
  }

  /// Vertices before w[0] adjacent in the color to every vertex of w.
  Bitset common_below(const VertexList& w) const {
    Bitset cand = c_->neighbors(col_, w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) cand &= c_->neighbors(col_, w[i]);
    restrict_to(cand, 1, static_cast<std::size_t>(w[0]));
    return cand;
  }

  void add(VertexList w) {
    Entry e;
    e.chi = t_;
    Bitset cand = common_below(w);
    // key(x, w_1..w_{t-1}) = x + base * key(w_1..w_{t-1})
    const std::uint64_t rest = key(VertexList(w.begin(), w.end() - 1)) * static_cast<std::uint64_t>(base_);
    for (auto x = cand.find_first(); x != Bitset::npos; x = cand.find_next(x)) {
      const std::uint64_t pk = static_cast<std::uint64_t>(x) + rest;
      int idx = -1;
      if (dense_) {
        idx = dense_index_[pk];
      } else if (auto it = sparse_index_.find(pk); it != sparse_index_.end()) {
        idx = it->second;
      }
      if (idx < 0) continue;
      const int cand_chi = entries_[static_cast<std::size_t>(idx)].chi + 1;
      if (cand_chi > e.chi) {
        e.chi = cand_chi;
        e.pred = static_cast<Vertex>(x);
      }
    }
    const auto k = key(w);
    e.window = std::move(w);
    const int idx = static_cast<int>(entries_.size());
    entries_.push_back(std::move(e));
    if (dense_) dense_index_[k] = idx;
    else sparse_index_.emplace(k, idx);
  }

  const TwoColoring* c_;
  int t_;
  Color col_;
  int base_;
  bool dense_ = false;
  std::vector<int> dense_index_;
  std::unordered_map<std::uint64_t, int> sparse_index_;
  std::vector<Entry> entries_;
};

}  // namespace ordram
