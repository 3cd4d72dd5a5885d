#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordram/core/cliques.hpp"
#include "ordram/core/coloring.hpp"
#include "ordram/extract/basic.hpp"
#include "ordram/extract/rednet.hpp"
#include "ordram/extract/result.hpp"
#include "ordram/extract/window_chi.hpp"

namespace ordram {

/// Two windows X, Y of one color with last(X) = first(Y) and chi(X) >= chi(Y).
struct GoodPair {
  VertexList x, y;
  Color color = Color::Red;
  int chi_x = 0, chi_y = 0;
  friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

enum class GoodPairVariant { Mono, RedOnly };

/// A frame (x_1..x_{t-1}; z_1..z_{t-1}; c) and the middle vertices y that
/// complete it to a good pair with chi(X) = c.
struct Frame {
  Color color = Color::Red;
  VertexList head, tail;
  int c = 0;
  VertexList ys;
};

namespace detail {

struct ScoredWindow {
  const VertexList* w;
  int chi;
};

template <class F>
void for_each_good_pair(int n_vertices, const std::vector<ScoredWindow>& windows, F&& visit) {
  std::vector<std::vector<ScoredWindow>> ending(static_cast<std::size_t>(n_vertices) + 1),
      starting(static_cast<std::size_t>(n_vertices) + 1);
  for (const auto& e : windows) {
    ending[static_cast<std::size_t>(e.w->back())].push_back(e);
    starting[static_cast<std::size_t>(e.w->front())].push_back(e);
  }
  for (Vertex y = 1; y <= n_vertices; ++y)
    for (const auto& a : ending[static_cast<std::size_t>(y)])
      for (const auto& b : starting[static_cast<std::size_t>(y)])
        if (a.chi >= b.chi) visit(y, a, b);
}

struct ListHash {
  std::size_t operator()(const VertexList& v) const {
    std::size_t h = v.size();
    for (Vertex x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Frames of one color with at least `min_size` middle vertices, largest
/// first and then by least (head, tail, c).
inline std::vector<Frame> collect_frames(int n_vertices, const std::vector<ScoredWindow>& windows, int t, Color col,
                                         std::size_t min_size) {
  std::unordered_map<VertexList, VertexList, ListHash> buckets;
  VertexList key;
  for_each_good_pair(n_vertices, windows, [&](Vertex y, const ScoredWindow& a, const ScoredWindow& b) {
    key.assign(a.w->begin(), a.w->end() - 1);
    key.insert(key.end(), b.w->begin() + 1, b.w->end());
    key.push_back(a.chi);
    buckets[key].push_back(y);
  });
  std::vector<Frame> out;
  for (auto& [k, ys] : buckets) {
    if (ys.size() < min_size) continue;
    Frame f;
    f.color = col;
    f.head.assign(k.begin(), k.begin() + (t - 1));
    f.tail.assign(k.begin() + (t - 1), k.end() - 1);
    f.c = k.back();
    f.ys = std::move(ys);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Frame& a, const Frame& b) {
    if (a.ys.size() != b.ys.size()) return a.ys.size() > b.ys.size();
    return std::tie(a.head, a.tail, a.c) < std::tie(b.head, b.tail, b.c);
  });
  return out;
}

inline std::vector<ScoredWindow> scored(const WindowChi& w) {
  std::vector<ScoredWindow> out;
  out.reserve(w.entries().size());
  for (const auto& e : w.entries()) out.push_back({&e.window, e.chi});
  return out;
}

inline VertexList all_vertices(int n) {
  VertexList v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return v;
}

inline std::string frame_text(const Frame& f) {
  return "frame (" + detail::format_list(f.head) + "; " + detail::format_list(f.tail) + "; c=" + std::to_string(f.c) + ")";
}

/// Blue K_n inside `pool`: greedy (take the least vertex, keep its blue
/// forward neighbours), then an exact search.
inline std::optional<VertexList> find_blue_clique_in(const TwoColoring& c, const VertexList& pool, int n) {
  Bitset rest = c.make_set(pool);
  VertexList got;
  while (rest.any() && static_cast<int>(got.size()) < n) {
    const auto v = rest.find_first();
    got.push_back(static_cast<Vertex>(v));
    rest &= c.neighbors(Color::Blue, static_cast<Vertex>(v));
  }
  if (static_cast<int>(got.size()) >= n) return got;
  return find_clique(c, Color::Blue, c.make_set(pool), n);
}

}  // namespace detail

/// Every good pair of the window DP, red first for Mono, in order of the
/// middle vertex and then of the two windows.
inline std::vector<GoodPair> enumerate_good_pairs(const TwoColoring& c, int t, GoodPairVariant variant) {
  if (t < 1) throw std::invalid_argument("good pairs need t >= 1");
  std::vector<GoodPair> out;
  std::vector<Color> colors{Color::Red};
  if (variant == GoodPairVariant::Mono) colors.push_back(Color::Blue);
  for (Color col : colors) {
    const WindowChi w(c, t, col);
    if (t == 1) {
      // Single-vertex windows: any u < v with chi(u) >= chi(v).
      const auto& es = w.entries();
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
          if (es[i].chi >= es[j].chi) out.push_back({es[i].window, es[j].window, col, es[i].chi, es[j].chi});
      continue;
    }
    detail::for_each_good_pair(c.size(), detail::scored(w),
                               [&](Vertex, const detail::ScoredWindow& a, const detail::ScoredWindow& b) {
                                 out.push_back({*a.w, *b.w, col, a.chi, b.chi});
                               });
  }
  return out;
}

/// Red P_n^t or blue K_n. The red window DP answers directly when it reaches
/// n; otherwise every frame's middle set is free of red K_t (a red K_t there
/// would extend a red P_c^t beyond c), so the pivot search inside the
/// largest middle sets returns blue cliques. A direct blue clique search
/// closes the gap below the bound.
inline Extraction extract_pathpower_vs_clique(const TwoColoring& c, int t, int n) {
  if (t < 1 || n < t) throw std::invalid_argument("path power vs clique needs n >= t >= 1");
  const WindowChi red(c, t, Color::Red);
  if (const auto* e = red.first_reaching(n)) return path_power_cert(Color::Red, red.trace(e->window, n), t, "red-window-dp");
  const int k = std::max(t, 2);
  const auto inside = [&](const VertexList& ys, const std::string& where) -> Extraction {
    auto got = ramsey_extract_in(c, ys, k, n);
    if (got && got->color == Color::Red)
      throw ParadoxError("red K_" + std::to_string(k) + " " + detail::format_list(got->vertices) + " inside " + where);
    return got;
  };
  if (red.entries().empty()) {
    // No red K_t at all: the whole vertex set plays the middle set.
    if (auto got = inside(detail::all_vertices(c.size()), "a coloring without red K_t")) {
      got->route = "no-red-window";
      return got;
    }
    return std::nullopt;
  }
  for (const auto& f :
       detail::collect_frames(c.size(), detail::scored(red), t, Color::Red, static_cast<std::size_t>(n))) {
    if (auto got = inside(f.ys, detail::frame_text(f))) {
      got->route = "frame-middle-set";
      return got;
    }
  }
  if (auto k = detail::find_blue_clique_in(c, detail::all_vertices(c.size()), n))
    return clique_cert(Color::Blue, *k, "direct-search");
  return std::nullopt;
}

/// Monochromatic P_n^t. Both window DPs answer directly when one reaches n;
/// otherwise the largest frame's middle set (red on ties) is searched for a
/// K_t of the frame color against a P_n^t of the other color, where only
/// the latter can exist.
inline Extraction extract_diagonal_pathpower(const TwoColoring& c, int t, int n) {
  if (t < 1 || n < t) throw std::invalid_argument("diagonal path power needs n >= t >= 1");
  const WindowChi red(c, t, Color::Red), blue(c, t, Color::Blue);
  if (const auto* e = red.first_reaching(n)) return path_power_cert(Color::Red, red.trace(e->window, n), t, "red-window-dp");
  if (const auto* e = blue.first_reaching(n))
    return path_power_cert(Color::Blue, blue.trace(e->window, n), t, "blue-window-dp");
  std::optional<Frame> best;
  for (const WindowChi* w : {&red, &blue}) {
    auto frames = detail::collect_frames(c.size(), detail::scored(*w), t, w->color(), static_cast<std::size_t>(n));
    if (!frames.empty() && (!best || frames.front().ys.size() > best->ys.size())) best = std::move(frames.front());
  }
  if (!best) return std::nullopt;
  // Inside the middle set the frame color has no K_t; look there for the other color's P_n^t.
  const TwoColoring sub = best->color == Color::Red ? c.induced(best->ys) : c.induced(best->ys).complement();
  const int s = std::max(t - 1, 1);
  auto got = extract_clique_vs_powerpath(sub, s, t, n);
  if (!got) return std::nullopt;
  if (got->kind == CertKind::MonoClique)
    throw ParadoxError(std::string(to_string(best->color)) + " K_" + std::to_string(s + 1) + " inside " +
                       detail::frame_text(*best));
  for (Vertex& v : got->vertices) v = best->ys[static_cast<std::size_t>(v - 1)];
  got->color = opposite(best->color);
  got->route = "frame-middle-set";
  return got;
}

/// x_1 < ... < x_t with x_1 x_i and x_i x_t red for all i.
inline bool is_semi_red(const TwoColoring& c, const VertexList& vs) {
  if (!detail::strictly_increasing(vs)) return false;
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (c(vs.front(), vs[i]) != Color::Red) return false;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (c(vs[i], vs.back()) != Color::Red) return false;
  return true;
}

/// DP over semi-red t-cliques G: chi(G) = longest red P_l[t] whose last
/// group is G.
class BlowupChi {
 public:
  struct Entry {
    VertexList group;
    int chi = 1;
    int pred = -1;
  };

  BlowupChi(const TwoColoring& c, int t) : t_(t) {
    if (t < 1) throw std::invalid_argument("blowup DP needs t >= 1");
    for (Vertex last = 1; last <= c.size(); ++last) {
      if (t == 1) {
        entries_.push_back({{last}, 1, -1});
        continue;
      }
      for (Vertex first = 1; first < last; ++first) {
        if (c(first, last) != Color::Red) continue;
        Bitset mid = c.neighbors(Color::Red, first) & c.neighbors(Color::Red, last);
        restrict_to(mid, static_cast<std::size_t>(first) + 1, static_cast<std::size_t>(last));
        VertexList pick;
        subsets(mid, mid.find_first(), t - 2, pick, first, last);
      }
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      auto& e = entries_[i];
      for (std::size_t j = 0; j < i; ++j) {
        const auto& p = entries_[j];
        if (p.group.back() >= e.group.front() || p.chi + 1 <= e.chi) continue;
        bool red = true;
        for (Vertex a : p.group)
          for (Vertex b : e.group) red = red && c(a, b) == Color::Red;
        if (red) {
          e.chi = p.chi + 1;
          e.pred = static_cast<int>(j);
        }
      }
    }
  }

  int t() const { return t_; }
  const std::vector<Entry>& entries() const { return entries_; }

  const Entry* first_reaching(int l) const {
    for (const auto& e : entries_)
      if (e.chi >= l) return &e;
    return nullptr;
  }

  /// The last l groups of the recorded chain ending at e.
  std::vector<VertexList> trace(const Entry& e, int l) const {
    std::vector<VertexList> groups;
    for (const Entry* cur = &e; cur && static_cast<int>(groups.size()) < l;
         cur = cur->pred < 0 ? nullptr : &entries_[static_cast<std::size_t>(cur->pred)])
      groups.push_back(cur->group);
    std::reverse(groups.begin(), groups.end());
    return groups;
  }

 private:
  void subsets(const Bitset& mid, std::size_t from, int need, VertexList& pick, Vertex first, Vertex last) {
    if (need == 0) {
      Entry e;
      e.group.push_back(first);
      e.group.insert(e.group.end(), pick.begin(), pick.end());
      e.group.push_back(last);
      entries_.push_back(std::move(e));
      return;
    }
    for (auto v = from; v != Bitset::npos; v = mid.find_next(v)) {
      pick.push_back(static_cast<Vertex>(v));
      subsets(mid, mid.find_next(v), need - 1, pick, first, last);
      pick.pop_back();
    }
  }

  int t_;
  std::vector<Entry> entries_;
};

namespace detail {

/// Semi-red k-clique inside `pool`: a first vertex, a last vertex in its
/// forward red neighbourhood, and k-2 common red neighbours between them.
inline std::optional<VertexList> find_semi_red(const TwoColoring& c, const VertexList& pool, int k) {
  const Bitset in = c.make_set(pool);
  for (Vertex a : pool) {
    Bitset fwd = in & c.neighbors(Color::Red, a);
    restrict_to(fwd, static_cast<std::size_t>(a) + 1, fwd.size());
    if (static_cast<int>(fwd.count()) < k - 1) continue;
    for (auto b = fwd.find_first(); b != Bitset::npos; b = fwd.find_next(b)) {
      Bitset between = fwd & c.neighbors(Color::Red, static_cast<Vertex>(b));
      restrict_to(between, static_cast<std::size_t>(a) + 1, b);
      if (static_cast<int>(between.count()) < k - 2) continue;
      VertexList out{a};
      for (auto v = between.find_first(); static_cast<int>(out.size()) < k - 1; v = between.find_next(v))
        out.push_back(static_cast<Vertex>(v));
      out.push_back(static_cast<Vertex>(b));
      return out;
    }
  }
  return std::nullopt;
}

inline Certificate blowup_cert(std::vector<VertexList> groups, int t, std::string route) {
  Certificate cert;
  cert.kind = CertKind::MonoBlowup;
  cert.color = Color::Red;
  cert.params = {{"n", static_cast<std::int64_t>(groups.size())}, {"t", t}};
  for (const auto& g : groups) cert.vertices.insert(cert.vertices.end(), g.begin(), g.end());
  cert.aux = BlowupAux{std::move(groups)};
  cert.route = std::move(route);
  return cert;
}

}  // namespace detail

/// Red P_n[t] or blue K_n, via the DP over semi-red t-cliques. Middle sets
/// of frames hold no semi-red (t+2)-clique, since one would extend the red
/// P_c[t] ending at (x_1..x_{t-1}, y_1) by two groups; inside them a blue K_n
/// is searched. The frame sizes needed for a guarantee are not pinned, so
/// NotFound is possible below the bound.
inline Extraction extract_blowup_vs_clique(const TwoColoring& c, int t, int n) {
  if (t < 1 || n < 2) throw std::invalid_argument("blowup vs clique needs t >= 1 and n >= 2");
  const BlowupChi dp(c, t);
  if (const auto* e = dp.first_reaching(n)) return detail::blowup_cert(dp.trace(*e, n), t, "semi-red-dp");
  const auto inside = [&](const VertexList& ys, const std::string& where) -> Extraction {
    if (auto bad = detail::find_semi_red(c, ys, t + 2))
      throw ParadoxError("semi-red " + std::to_string(t + 2) + "-clique " + detail::format_list(*bad) + " inside " + where);
    if (auto k = detail::find_blue_clique_in(c, ys, n)) return clique_cert(Color::Blue, *k);
    return std::nullopt;
  };
  if (dp.entries().empty()) {
    // Nothing semi-red to anchor a frame: the whole vertex set is the middle set.
    if (auto got = inside(detail::all_vertices(c.size()), "a coloring without semi-red t-cliques")) {
      got->route = "no-semi-red";
      return got;
    }
    return std::nullopt;
  }
  std::vector<detail::ScoredWindow> windows;
  for (const auto& e : dp.entries()) windows.push_back({&e.group, e.chi});
  for (const auto& f : detail::collect_frames(c.size(), windows, t, Color::Red, static_cast<std::size_t>(n))) {
    if (auto got = inside(f.ys, detail::frame_text(f))) {
      got->route = "frame-middle-set";
      return got;
    }
  }
  if (auto k = detail::find_blue_clique_in(c, detail::all_vertices(c.size()), n))
    return clique_cert(Color::Blue, *k, "direct-search");
  return std::nullopt;
}

}  // namespace ordram
