#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordram/core/coloring.hpp"
#include "ordram/extract/basic.hpp"
#include "ordram/extract/result.hpp"
#include "ordram/witness/verify.hpp"

namespace ordram {

// ---------------------------------------------------------------------------
// Non-increasing triples and sets.

inline bool nonincreasing_triple(const PairLabeling& l, Vertex x, Vertex y, Vertex z,
                                 Notion notion = Notion::Full) {
  const int xy = l(x, y), yz = l(y, z);
  if (xy < yz) return false;
  const int xz = l(x, z);
  switch (notion) {
    case Notion::Full: return xz == xy || xz == yz;
    case Notion::MiddleChain: return xy >= xz && xz >= yz;
    case Notion::WeakOnly: return true;
  }
  return false;
}

namespace detail {

/// Depth-first search over increasing tuples of `pool` whose triples all
/// satisfy `notion`. Calls `visit` on each tuple of size k; stops when it
/// returns false. `budget` bounds visited nodes (negative: unbounded).
inline bool for_each_nonincreasing(const PairLabeling& l, const VertexList& pool, int k, Notion notion,
                                   const std::function<bool(const VertexList&)>& visit, long long budget = -1) {
  VertexList cur;
  long long nodes = 0;
  std::function<bool(const VertexList&)> rec = [&](const VertexList& cand) -> bool {
    if (static_cast<int>(cur.size()) == k) return visit(cur);
    const std::size_t need = static_cast<std::size_t>(k) - cur.size();
    for (std::size_t a = 0; a + need <= cand.size(); ++a) {
      if (budget >= 0 && ++nodes > budget)
        throw EnumerationBudgetExceeded("non-increasing search exceeded " + std::to_string(budget) + " nodes");
      const Vertex v = cand[a];
      VertexList next;
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        const Vertex w = cand[b];
        bool ok = true;
        for (Vertex u : cur)
          if (!nonincreasing_triple(l, u, v, w, notion)) {
            ok = false;
            break;
          }
        if (ok) next.push_back(w);
      }
      if (next.size() + 1 < need) continue;
      cur.push_back(v);
      const bool go_on = rec(next);
      cur.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(pool);
}

inline VertexList all_of(const PairLabeling& l) {
  VertexList v(static_cast<std::size_t>(l.size()));
  for (int i = 0; i < l.size(); ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return v;
}

}  // namespace detail

/// Lexicographically first non-increasing k-set, or nullopt if none exists.
inline std::optional<VertexList> find_nonincreasing(const PairLabeling& l, int k,
                                                    Notion notion = Notion::Full,
                                                    long long budget = -1) {
  if (k < 1) throw std::invalid_argument("set size must be >= 1");
  std::optional<VertexList> found;
  detail::for_each_nonincreasing(
      l, detail::all_of(l), k, notion,
      [&](const VertexList& vs) {
        found = vs;
        return false;
      },
      budget);
  return found;
}

// ---------------------------------------------------------------------------
// 3-uniform tight paths to pair labels.

/// chi(x,y) = vertex count of the longest blue tight path ending at x, y.
class TightPathTable {
 public:
  explicit TightPathTable(const TripleColoring& c) : n_(c.size()) {
    if (n_ < 2) throw std::invalid_argument("tight-path reduction needs N >= 2");
    const auto sz = static_cast<std::size_t>(n_) + 1;
    chi_.assign(sz, std::vector<int>(sz, 0));
    pred_.assign(sz, std::vector<Vertex>(sz, 0));
    for (Vertex y = 2; y <= n_; ++y)
      for (Vertex x = 1; x < y; ++x) {
        int best = 2;
        Vertex from = 0;
        for (Vertex w = 1; w < x; ++w)
          if (c(w, x, y) == Color::Blue && chi_[w][x] + 1 > best) {
            best = chi_[w][x] + 1;
            from = w;
          }
        chi_[x][y] = best;
        pred_[x][y] = from;
      }
  }

  int size() const { return n_; }
  int operator()(Vertex x, Vertex y) const { return chi_[x][y]; }

  /// The realizing tight path, ending at x, y.
  VertexList trace(Vertex x, Vertex y) const {
    VertexList back{y, x};
    for (Vertex a = x, b = y; pred_[a][b] != 0;) {
      const Vertex w = pred_[a][b];
      back.push_back(w);
      b = a;
      a = w;
    }
    std::reverse(back.begin(), back.end());
    return back;
  }

  PairLabeling labels() const {
    return PairLabeling::from_function(n_, std::max(n_, 2), [this](Vertex x, Vertex y) { return chi_[x][y]; });
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> chi_;
  std::vector<std::vector<Vertex>> pred_;
};

/// Labels in [2, N] with label range N.
inline PairLabeling tightpath_reduction(const TripleColoring& c) { return TightPathTable(c).labels(); }

// ---------------------------------------------------------------------------
// H_{s,t}.

struct HstOptions {
  long long copy_budget = 1'000'000;
  bool fallback = true;  // DirectDFS when the budget runs out, instead of throwing
};

namespace detail {

/// out[a][b] = edges of the longest non-increasing label path starting with a, b.
inline std::vector<std::vector<int>> ni_path_out(const PairLabeling& l) {
  const int n = l.size();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (Vertex b = n; b >= 1; --b)
    for (Vertex a = 1; a < b; ++a) {
      int best = 1;
      for (Vertex c = b + 1; c <= n; ++c)
        if (l(b, c) <= l(a, b)) best = std::max(best, out[b][c] + 1);
      out[a][b] = best;
    }
  return out;
}

/// Enumerates copies of H_{s,t} in lexicographic order of the vertex tuple.
/// Paths are pruned with the table above, so every visited branch completes.
inline bool for_each_hst(const PairLabeling& l, int s, int t, const std::function<bool(const VertexList&)>& visit,
                         long long budget = -1) {
  const auto out = ni_path_out(l);
  const int n = l.size();
  long long copies = 0;
  VertexList copy;
  std::function<bool(Vertex, int)> path = [&](Vertex last, int bound) -> bool {
    if (static_cast<int>(copy.size()) == s + t - 1) {
      if (budget >= 0 && ++copies > budget)
        throw EnumerationBudgetExceeded("H_{s,t} enumeration exceeded " + std::to_string(budget) + " copies");
      return visit(copy);
    }
    const int left = s + t - 1 - static_cast<int>(copy.size());
    for (Vertex y = last + 1; y <= n; ++y) {
      const int lab = l(last, y);
      if (lab > bound || out[last][y] < left) continue;
      copy.push_back(y);
      const bool go_on = path(y, lab);
      copy.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return for_each_nonincreasing(l, all_of(l), s, Notion::Full, [&](const VertexList& clique) {
    if (t == 1) {
      copy = clique;
      if (budget >= 0 && ++copies > budget)
        throw EnumerationBudgetExceeded("H_{s,t} enumeration exceeded " + std::to_string(budget) + " copies");
      return visit(copy);
    }
    const Vertex last = clique.back();
    copy = clique;
    return path(last, l(clique[clique.size() - 2], last));
  });
}

inline Certificate hst_cert(VertexList vs, int s, int t, std::string route) {
  Certificate c;
  c.kind = CertKind::HstCopy;
  c.params["s"] = s;
  c.params["t"] = t;
  c.vertices = std::move(vs);
  c.aux = HstAux{s};
  c.route = std::move(route);
  return c;
}

inline Extraction hst_direct(const PairLabeling& l, int s, int t) {
  Extraction found;
  for_each_hst(l, s, t, [&](const VertexList& vs) {
    found = hst_cert(vs, s, t, "direct-search");
    return false;
  });
  return found;
}

inline VertexList lift(const VertexList& local, const VertexList& pool) {
  VertexList out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(pool[static_cast<std::size_t>(v - 1)]);
  return out;
}

}  // namespace detail

/// H_{s,t}: a non-increasing s-set whose last vertex starts a non-increasing
/// label path of t vertices, with the junction label in order.
inline Extraction extract_hst(const PairLabeling& l, int s, int t, const HstOptions& opt = {}) {
  if (s < 2 || t < 1) throw std::invalid_argument("H_{s,t} needs s >= 2, t >= 1");
  if (l.size() < s + t - 1) return std::nullopt;
  if (s == 2) {
    auto r = chvatal_komlos_extract(l, t, l.colors() + 1);
    if (!r) return std::nullopt;
    if (detail::aux_as<PathAux>(*r)->monotonicity == Monotonicity::Increasing)
      throw ParadoxError("strictly increasing label path longer than the label range");
    return detail::hst_cert(std::move(r->vertices), 2, t, "base-monotone-path");
  }

  // Copies of H_{s-1,t+1}, bucketed by frame and signature.
  const int ms = s - 1, mt = t + 1;
  std::map<std::vector<int>, VertexList> buckets;
  bool exhausted = true;
  try {
    detail::for_each_hst(
        l, ms, mt,
        [&](const VertexList& cp) {
          const Vertex mid = cp[static_cast<std::size_t>(ms - 1)];
          std::vector<int> key;
          for (int i = 0; i < ms - 1; ++i) key.push_back(cp[static_cast<std::size_t>(i)]);
          for (std::size_t i = static_cast<std::size_t>(ms); i < cp.size(); ++i) key.push_back(cp[i]);
          key.push_back(0);
          for (int i = 0; i < ms - 1; ++i) key.push_back(l(cp[static_cast<std::size_t>(i)], mid));
          key.push_back(l(mid, cp[static_cast<std::size_t>(ms)]));
          buckets[key].push_back(mid);
          return true;
        },
        opt.copy_budget);
  } catch (const EnumerationBudgetExceeded&) {
    if (!opt.fallback) throw;
    exhausted = false;
  }

  if (exhausted) {
    std::vector<const std::pair<const std::vector<int>, VertexList>*> order;
    for (const auto& b : buckets)
      if (static_cast<int>(b.second.size()) >= ms + mt - 1) order.push_back(&b);
    std::stable_sort(order.begin(), order.end(),
                     [](auto* a, auto* b) { return a->second.size() > b->second.size(); });
    for (const auto* b : order) {
      VertexList xs = b->second;
      std::sort(xs.begin(), xs.end());
      auto inner = extract_hst(l.induced(xs), ms, mt, opt);
      if (!inner) continue;
      const VertexList uv = detail::lift(inner->vertices, xs);
      const auto& key = b->first;
      const VertexList xhead(key.begin(), key.begin() + (ms - 1));
      const VertexList ytail(key.begin() + (ms - 1), key.begin() + (ms - 1) + t);
      const int beta = key.back();
      // uv = u_1..u_{s-1} = v_1..v_{t+1}; v_1 sits at index s-2.
      const auto v1 = uv.begin() + (ms - 1);
      VertexList out;
      std::string route;
      if (l(*v1, *(v1 + 1)) <= beta) {
        out = xhead;
        out.insert(out.end(), v1, uv.end());
        route = "recursion-case-1";
      } else {
        out.assign(uv.begin(), v1 + 1);
        out.insert(out.end(), ytail.begin(), ytail.end());
        route = "recursion-case-2";
      }
      auto cert = detail::hst_cert(std::move(out), s, t, route);
      if (auto v = verify_certificate(l, cert); !v)
        throw ParadoxError("H_{s,t} assembly rejected: " + v.clause + " at " + detail::format_list(v.tuple));
      return cert;
    }
  }
  return detail::hst_direct(l, s, t);
}

// ---------------------------------------------------------------------------
// Non-increasing sets.

enum class NonIncreasingStrategy { ProofRecursion, DirectDFS };

inline Extraction extract_non_increasing(const PairLabeling& l, int s,
                                         NonIncreasingStrategy strategy = NonIncreasingStrategy::DirectDFS) {
  if (s < 2) throw std::invalid_argument("non-increasing sets need s >= 2");
  Certificate c;
  c.kind = CertKind::NonIncreasingSet;
  c.params["s"] = s;
  if (strategy == NonIncreasingStrategy::ProofRecursion) {
    auto h = extract_hst(l, s, 1);
    if (!h) return std::nullopt;
    c.vertices = std::move(h->vertices);
    c.route = "hst-" + h->route;
    return c;
  }
  auto vs = find_nonincreasing(l, s);
  if (!vs) return std::nullopt;
  c.vertices = std::move(*vs);
  c.route = "direct-search";
  return c;
}

// ---------------------------------------------------------------------------
// 3-uniform red clique versus blue tight path.

inline Extraction extract_3uniform_clique_vs_tightpath(const TripleColoring& c3, int s, int n) {
  if (s < 3 || n < 3) throw std::invalid_argument("3-uniform extraction needs s >= 3, n >= 3");
  const int N = c3.size();
  if (N < 2) return std::nullopt;
  const TightPathTable tab(c3);
  for (Vertex y = 2; y <= N; ++y)
    for (Vertex x = 1; x < y; ++x)
      if (tab(x, y) >= n) {
        VertexList p = tab.trace(x, y);
        p.erase(p.begin(), p.end() - n);
        Certificate c;
        c.kind = CertKind::MonoTightPath3;
        c.color = Color::Blue;
        c.params["n"] = n;
        c.vertices = std::move(p);
        c.route = "tight-path";
        return c;
      }
  const auto shifted = PairLabeling::from_function(N, n - 2, [&](Vertex x, Vertex y) { return tab(x, y) - 1; });
  auto set = find_nonincreasing(shifted, s);
  if (!set) return std::nullopt;
  Certificate c;
  c.kind = CertKind::MonoClique3;
  c.color = Color::Red;
  c.params["s"] = s;
  c.vertices = std::move(*set);
  c.route = "nonincreasing-set";
  if (auto v = verify_certificate(c3, c); !v)
    throw ParadoxError("non-increasing set is not a red clique: blue triple " + detail::format_list(v.tuple));
  return c;
}

// ---------------------------------------------------------------------------
// Weakly lexicographic and lexicographic sets.

/// One level of the nesting: item 1 peels the first vertex (joined to all
/// later ones by `color`), item 2 peels the last (joined to all earlier ones).
struct WeakLexStep {
  int item = 1;
  Vertex pivot = 0;
  int color = 0;
  friend bool operator==(const WeakLexStep&, const WeakLexStep&) = default;
};

/// Steps run outermost first; after all of them a pair remains.
struct WeakLexSet {
  VertexList vertices;
  std::vector<WeakLexStep> steps;
};

namespace detail {

inline WeakLexSet weak_lex_rec(const PairLabeling& l, const VertexList& xs, int s) {
  if (s == 1) return {{xs.front()}, {}};
  if (s == 2) return {{xs[0], xs[1]}, {}};
  const std::size_t k = std::size_t{1} << (s - 1);
  const Vertex first = xs[0], last = xs[k - 1];
  const int c = l(first, last);
  const std::size_t half = (k - 2) / 2;
  VertexList a, b;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    if (l(first, xs[i]) == c) a.push_back(xs[i]);
    if (l(xs[i], last) == c) b.push_back(xs[i]);
  }
  if (a.size() >= half) {
    a.push_back(last);
    WeakLexSet sub = weak_lex_rec(l, a, s - 1);
    sub.vertices.insert(sub.vertices.begin(), first);
    sub.steps.insert(sub.steps.begin(), WeakLexStep{1, first, c});
    return sub;
  }
  if (b.size() < half)
    throw ParadoxError("non-increasing set splits into two small halves at " + format_list({first, last}));
  b.insert(b.begin(), first);
  WeakLexSet sub = weak_lex_rec(l, b, s - 1);
  sub.vertices.push_back(last);
  sub.steps.insert(sub.steps.begin(), WeakLexStep{2, last, c});
  return sub;
}

}  // namespace detail

/// Weakly lexicographic s-subset of a non-increasing set of size >= 2^{s-1}.
inline WeakLexSet weakly_lex_decompose(const PairLabeling& l, const VertexList& ni_set, int s) {
  if (s < 1 || s > 30) throw std::invalid_argument("decomposition needs 1 <= s <= 30");
  if (ni_set.size() < (std::size_t{1} << (s - 1)))
    throw std::invalid_argument("decomposition needs at least 2^{s-1} vertices");
  if (!detail::strictly_increasing(ni_set)) throw std::invalid_argument("vertex list must be strictly increasing");
  if (auto v = detail::check_nonincreasing(l, ni_set); !v)
    throw std::invalid_argument("input is not non-increasing at " + detail::format_list(v.tuple));
  return detail::weak_lex_rec(l, ni_set, s);
}

/// A forward or backward lexicographic set with its colors.
struct LexSet {
  VertexList vertices;
  bool forward = true;
  std::vector<int> colors;
};

/// Forward lexicographic s-set or backward lexicographic t-set inside a
/// weakly lexicographic set of size s + t - 2.
inline LexSet forward_or_backward(const PairLabeling& l, const WeakLexSet& w, int s, int t) {
  if (s < 2 || t < 2) throw std::invalid_argument("lexicographic sizes must be >= 2");
  if (static_cast<int>(w.vertices.size()) != s + t - 2 || w.steps.size() + 2 != w.vertices.size())
    throw std::invalid_argument("weakly lexicographic set must have size s+t-2 and full nesting");
  std::function<LexSet(std::size_t, VertexList, int, int)> rec = [&](std::size_t depth, VertexList cur, int a,
                                                                    int b) -> LexSet {
    if (a == 2 || b == 2) return {{cur[0], cur[1]}, a == 2, {l(cur[0], cur[1])}};
    const WeakLexStep& st = w.steps[depth];
    if (st.item == 1) {
      cur.erase(cur.begin());
      LexSet r = rec(depth + 1, std::move(cur), a - 1, b);
      if (r.forward) {
        r.vertices.insert(r.vertices.begin(), st.pivot);
        r.colors.insert(r.colors.begin(), st.color);
      }
      return r;
    }
    cur.pop_back();
    LexSet r = rec(depth + 1, std::move(cur), a, b - 1);
    if (!r.forward) {
      r.vertices.push_back(st.pivot);
      r.colors.push_back(st.color);
    }
    return r;
  };
  return rec(0, w.vertices, s, t);
}

namespace detail {

/// Lexicographically first lexicographic s-set with non-increasing colors.
inline std::optional<LexSet> find_lex_nonincreasing(const PairLabeling& l, int s) {
  const int n = l.size();
  for (bool forward : {true, false}) {
    VertexList cur;
    std::vector<int> colors;
    std::function<bool()> rec = [&]() -> bool {
      if (static_cast<int>(cur.size()) == s) return true;
      const Vertex from = cur.empty() ? 1 : cur.back() + 1;
      for (Vertex v = from; v + (s - static_cast<int>(cur.size()) - 1) <= n; ++v) {
        bool ok = true;
        int fresh = 0;
        if (forward) {
          for (std::size_t i = 0; ok && i < colors.size(); ++i) ok = l(cur[i], v) == colors[i];
          if (ok && !cur.empty()) fresh = l(cur.back(), v);
        } else if (!cur.empty()) {
          fresh = l(cur[0], v);
          for (std::size_t i = 1; ok && i < cur.size(); ++i) ok = l(cur[i], v) == fresh;
        }
        if (!ok || (!colors.empty() && fresh > colors.back())) continue;
        const bool colored = !cur.empty();
        cur.push_back(v);
        if (colored) colors.push_back(fresh);
        if (rec()) return true;
        cur.pop_back();
        if (colored) colors.pop_back();
      }
      return false;
    };
    if (rec()) return LexSet{cur, forward, colors};
  }
  return std::nullopt;
}

}  // namespace detail

/// Lexicographic s-set with non-increasing colors. Goes through a
/// non-increasing set of size 2^{2s-3} when one exists, otherwise searches
/// directly.
inline Extraction extract_lexicographic_nonincreasing(const PairLabeling& l, int s, long long ni_budget = 2'000'000) {
  if (s < 2) throw std::invalid_argument("lexicographic sets need s >= 2");
  if (l.size() < s) return std::nullopt;
  auto emit = [&](LexSet r, std::string route) {
    if (!std::is_sorted(r.colors.begin(), r.colors.end(), std::greater<>()))
      throw ParadoxError("lexicographic colors are not non-increasing");
    Certificate c;
    c.kind = CertKind::LexicographicSet;
    c.params["s"] = s;
    c.vertices = std::move(r.vertices);
    c.aux = LexAux{r.forward, std::move(r.colors), true};
    c.route = std::move(route);
    if (auto v = verify_certificate(l, c); !v)
      throw ParadoxError("lexicographic set rejected: " + v.clause + " at " + detail::format_list(v.tuple));
    return c;
  };
  if (s == 2) return emit(LexSet{{1, 2}, true, {l(1, 2)}}, "single-edge");
  const int big = 1 << (2 * s - 3);
  std::optional<VertexList> ni;
  if (l.size() >= big) {
    try {
      ni = find_nonincreasing(l, big, Notion::Full, ni_budget);
    } catch (const EnumerationBudgetExceeded&) {
    }
  }
  if (ni) {
    const WeakLexSet w = weakly_lex_decompose(l, *ni, 2 * s - 2);
    return emit(forward_or_backward(l, w, s, s), "weak-lex-decomposition");
  }
  if (auto r = detail::find_lex_nonincreasing(l, s)) return emit(std::move(*r), "direct-search");
  return std::nullopt;
}

}  // namespace ordram
