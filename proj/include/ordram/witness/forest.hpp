#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordram/core/types.hpp"

namespace ordram {

/// Rooted forest on a subset of 1..M, with the order of the integers as the
/// vertex order. Parent 0 marks a root.
class OrderedForest {
 public:
  OrderedForest() = default;

  /// Throws invalid_argument on a dangling parent, a self-loop or a cycle.
  explicit OrderedForest(std::map<Vertex, Vertex> parent) : parent_(std::move(parent)) {
    for (auto [v, p] : parent_) {
      if (v < 1) throw std::invalid_argument("forest nodes must be >= 1");
      if (p != 0 && !parent_.count(p))
        throw std::invalid_argument("parent " + std::to_string(p) + " of " + std::to_string(v) + " is not a node");
      if (p == v) throw std::invalid_argument("node " + std::to_string(v) + " is its own parent");
    }
    for (auto [v, p] : parent_) {
      if (p) children_[p].push_back(v);
      else roots_.push_back(v);
    }
    // Depth by walking up; a walk longer than the node count means a cycle.
    for (auto [v, p] : parent_) {
      int d = 0;
      for (Vertex u = v; parent_.at(u) != 0; u = parent_.at(u))
        if (++d > static_cast<int>(parent_.size())) throw std::invalid_argument("forest contains a cycle");
      depth_[v] = d;
    }
  }

  /// Convenience for building from (node, parent) pairs.
  static OrderedForest from_edges(const std::vector<std::pair<Vertex, Vertex>>& nodes) {
    std::map<Vertex, Vertex> parent;
    for (auto [v, p] : nodes)
      if (!parent.emplace(v, p).second) throw std::invalid_argument("duplicate forest node " + std::to_string(v));
    return OrderedForest(std::move(parent));
  }

  bool empty() const { return parent_.empty(); }
  int size() const { return static_cast<int>(parent_.size()); }
  bool contains(Vertex v) const { return parent_.count(v) != 0; }
  Vertex parent(Vertex v) const { return parent_.at(v); }
  int depth(Vertex v) const { return depth_.at(v); }

  VertexList nodes() const {
    VertexList out;
    for (auto [v, p] : parent_) out.push_back(v);
    return out;
  }

  const VertexList& roots() const { return roots_; }

  const VertexList& children(Vertex v) const {
    static const VertexList none;
    auto it = children_.find(v);
    return it == children_.end() ? none : it->second;
  }

  bool is_leaf(Vertex v) const { return children(v).empty(); }

  VertexList leaves() const {
    VertexList out;
    for (auto [v, p] : parent_)
      if (is_leaf(v)) out.push_back(v);
    return out;
  }

  bool is_ancestor(Vertex a, Vertex v) const {
    for (Vertex u = parent_.at(v); u != 0; u = parent_.at(u))
      if (u == a) return true;
    return false;
  }

  /// Common leaf depth, or nullopt when leaves sit at different depths. The
  /// empty forest is balanced at every depth; this returns nullopt for it.
  std::optional<int> balanced_depth() const {
    std::optional<int> d;
    for (auto [v, p] : parent_)
      if (is_leaf(v)) {
        if (d && *d != depth_.at(v)) return std::nullopt;
        d = depth_.at(v);
      }
    return d;
  }

  Vertex subtree_max(Vertex v) const {
    Vertex m = v;
    for (Vertex c : children(v)) m = std::max(m, subtree_max(c));
    return m;
  }

  /// First violation of well-orderedness as (y, y') or nullopt: either a
  /// parent y' of y with y' > y, or same-depth y < y' with a descendant of y
  /// after y'.
  std::optional<std::pair<Vertex, Vertex>> well_order_violation() const {
    for (auto [v, p] : parent_)
      if (p != 0 && p > v) return std::make_pair(p, v);
    std::map<int, VertexList> level;
    for (auto [v, d] : depth_) level[d].push_back(v);
    for (auto& [d, vs] : level)
      for (std::size_t i = 1; i < vs.size(); ++i)
        if (subtree_max(vs[i - 1]) > vs[i]) return std::make_pair(vs[i - 1], vs[i]);
    return std::nullopt;
  }

  /// Root-to-leaf path that always takes the leftmost child, starting at the
  /// first root (the head) or taking the rightmost child from the last root
  /// (the tail).
  VertexList head() const {
    VertexList out;
    if (roots_.empty()) return out;
    for (Vertex v = roots_.front();; v = children(v).front()) {
      out.push_back(v);
      if (is_leaf(v)) break;
    }
    return out;
  }

  VertexList tail() const {
    VertexList out;
    if (roots_.empty()) return out;
    for (Vertex v = roots_.back();; v = children(v).back()) {
      out.push_back(v);
      if (is_leaf(v)) break;
    }
    return out;
  }

  /// Subtree rooted at v as a standalone forest.
  OrderedForest subtree(Vertex v) const {
    std::map<Vertex, Vertex> part;
    collect(v, 0, part);
    return OrderedForest(std::move(part));
  }

  /// The forest left after deleting all roots.
  OrderedForest without_roots() const {
    std::map<Vertex, Vertex> part;
    for (auto [v, p] : parent_)
      if (p != 0) part[v] = parent_.at(p) == 0 ? 0 : p;
    return OrderedForest(std::move(part));
  }

  const std::map<Vertex, Vertex>& parent_map() const { return parent_; }

  friend bool operator==(const OrderedForest& a, const OrderedForest& b) { return a.parent_ == b.parent_; }

 private:
  void collect(Vertex v, Vertex p, std::map<Vertex, Vertex>& out) const {
    out[v] = p;
    for (Vertex c : children(v)) collect(c, v, out);
  }

  std::map<Vertex, Vertex> parent_;
  std::map<Vertex, VertexList> children_;
  std::map<Vertex, int> depth_;
  VertexList roots_;
};

}  // namespace ordram
