#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ordram/core/cliques.hpp"
#include "ordram/core/coloring.hpp"
#include "ordram/core/random.hpp"
#include "ordram/extract/basic.hpp"
#include "ordram/extract/result.hpp"
#include "ordram/extract/window_chi.hpp"
#include "ordram/witness/forest.hpp"
#include "ordram/witness/ktt.hpp"
#include "ordram/witness/verify.hpp"

namespace ordram {

/// First, middle and last thirds of an ordered set whose size is divisible by 3.
struct Thirds {
  VertexList up, mid, down;
};

inline Thirds thirds(const VertexList& x) {
  if (x.size() % 3 != 0) throw std::invalid_argument("thirds need a size divisible by 3");
  const auto k = static_cast<std::ptrdiff_t>(x.size() / 3);
  return {VertexList(x.begin(), x.begin() + k), VertexList(x.begin() + k, x.begin() + 2 * k),
          VertexList(x.begin() + 2 * k, x.end())};
}

/// Blue cliques V_1 < ... < V_M of size s*r. part(i, j) is X_i^{(j)}; the
/// parts run X_i^{(s-1)} < ... < X_i^{(0)}.
struct BlockFamily {
  int s = 1;
  int r = 3;
  std::vector<VertexList> blocks;

  int size() const { return static_cast<int>(blocks.size()); }

  VertexList part(int i, int j) const {
    const auto& v = blocks.at(static_cast<std::size_t>(i - 1));
    const auto from = static_cast<std::ptrdiff_t>(s - 1 - j) * r;
    return VertexList(v.begin() + from, v.begin() + from + r);
  }
};

using BlockOutcome = std::variant<BlockFamily, Certificate>;

/// Vertices per window in build_blue_clique_blocks: C(sr+s-1, s).
inline long long block_window(int s, long long r) {
  if (r > std::numeric_limits<int>::max() / std::max(s, 1)) return std::numeric_limits<long long>::max();
  return ramsey_threshold(s + 1, static_cast<int>(s * r));
}

/// Slices [N] into M consecutive windows and takes a blue K_{sr} from each,
/// or returns the first red K_{s+1} met.
inline BlockOutcome build_blue_clique_blocks(const TwoColoring& c, int s, int r, int m) {
  if (s < 1 || r < 1 || m < 1) throw std::invalid_argument("blocks need s, r, M >= 1");
  const long long w = block_window(s, r);
  if (w == std::numeric_limits<long long>::max() || static_cast<long long>(m) * w > c.size())
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) + " vertices, blocks need M*" +
                                std::to_string(w));
  BlockFamily fam{s, r, {}};
  for (int i = 0; i < m; ++i) {
    VertexList window(static_cast<std::size_t>(w));
    std::iota(window.begin(), window.end(), static_cast<Vertex>(i * w + 1));
    auto got = ramsey_extract_in(c, window, s + 1, s * r);
    if (!got) throw ParadoxError("window " + std::to_string(i + 1) + " holds neither red K_s+1 nor blue K_sr");
    if (got->color == Color::Red) {
      got->route = "block-step";
      return *got;
    }
    fam.blocks.push_back(got->vertices);
  }
  return fam;
}

/// chi_j(i), 0 <= j <= s-2: the longest blue P^t (anywhere in the coloring)
/// whose last t vertices lie in the first (s-1-j)r vertices of V_i.
inline ChiFunctions compute_block_chi(const TwoColoring& c, const BlockFamily& fam, int t, int n) {
  const int q = fam.s - 1;
  std::vector<std::vector<int>> values(static_cast<std::size_t>(q), std::vector<int>(fam.blocks.size(), 0));
  if (q == 0) return ChiFunctions(std::max(n, 1), std::move(values));
  std::vector<std::pair<int, int>> where(static_cast<std::size_t>(c.size()) + 1, {0, 0});
  for (std::size_t i = 0; i < fam.blocks.size(); ++i)
    for (std::size_t p = 0; p < fam.blocks[i].size(); ++p)
      where[static_cast<std::size_t>(fam.blocks[i][p])] = {static_cast<int>(i) + 1, static_cast<int>(p)};
  const WindowChi blue(c, t, Color::Blue);
  int top = n;
  for (const auto& e : blue.entries()) {
    const int block = where[static_cast<std::size_t>(e.window.front())].first;
    if (block == 0) continue;
    int last = 0;
    bool inside = true;
    for (Vertex v : e.window) {
      if (where[static_cast<std::size_t>(v)].first != block) {
        inside = false;
        break;
      }
      last = std::max(last, where[static_cast<std::size_t>(v)].second);
    }
    if (!inside) continue;
    for (int j = 0; j < q; ++j)
      if (last < (q - j) * fam.r) {
        auto& slot = values[static_cast<std::size_t>(j)][static_cast<std::size_t>(block - 1)];
        slot = std::max(slot, e.chi);
        top = std::max(top, e.chi);
      }
  }
  return ChiFunctions(top, std::move(values));
}

namespace detail {

inline void add_tree(std::map<Vertex, Vertex>& into, const OrderedForest& f, Vertex root, Vertex new_parent) {
  const OrderedForest tree = f.subtree(root);
  for (const auto& [v, p] : tree.parent_map()) into[v] = p == 0 ? new_parent : p;
}

/// Forest for chi_d..chi_{q-1} on the sorted domain `dom`.
inline OrderedForest chi_forest_on(const ChiFunctions& chi, const VertexList& dom, int d) {
  std::map<Vertex, Vertex> parent;
  if (dom.empty()) return OrderedForest(parent);
  // Record setters x_1 < ... < x_k of chi_d, starting at the least element.
  VertexList rec{dom.front()};
  for (std::size_t i = 1; i < dom.size(); ++i)
    if (chi(d, dom[i]) > chi(d, rec.back())) rec.push_back(dom[i]);
  const auto owner = [&](Vertex y) {
    return static_cast<std::size_t>(std::upper_bound(rec.begin(), rec.end(), y) - rec.begin()) - 1;
  };
  if (d == chi.q() - 1) {
    std::set<Vertex> is_rec(rec.begin(), rec.end());
    for (Vertex y : dom)
      if (!is_rec.count(y)) {
        const Vertex x = rec[owner(y)];
        parent[x] = 0;
        parent[y] = x;
      }
    return OrderedForest(parent);
  }
  VertexList rest;
  std::set_difference(dom.begin(), dom.end(), rec.begin(), rec.end(), std::back_inserter(rest));
  const OrderedForest sub = chi_forest_on(chi, rest, d + 1);
  // Group the components of the sub-forest by the record setter before their root.
  std::map<std::size_t, VertexList> groups;
  for (Vertex y : sub.roots()) groups[owner(y)].push_back(y);
  struct Interval {
    std::size_t j;
    Vertex lo, hi;
    long long leaves;
    int color;
  };
  std::vector<Interval> iv;
  for (const auto& [j, roots] : groups) {
    Interval z{j, rec[j], rec[j], 0, -1};
    for (Vertex y : roots) {
      z.hi = std::max(z.hi, sub.subtree_max(y));
      z.leaves += static_cast<long long>(sub.subtree(y).leaves().size());
    }
    iv.push_back(z);
  }
  // Greedy proper coloring by left endpoint; a third color would mean a triangle.
  for (std::size_t a = 0; a < iv.size(); ++a) {
    bool used[2] = {false, false};
    for (std::size_t b = 0; b < a; ++b)
      if (iv[b].hi >= iv[a].lo) used[iv[b].color] = true;
    if (!used[0]) iv[a].color = 0;
    else if (!used[1]) iv[a].color = 1;
    else
      throw ParadoxError("interval conflict graph needs a third color at record setter " +
                         std::to_string(rec[iv[a].j]));
  }
  long long weight[2] = {0, 0};
  for (const auto& z : iv) weight[z.color] += z.leaves;
  const int keep = weight[1] > weight[0] ? 1 : 0;
  for (const auto& z : iv) {
    if (z.color != keep) continue;
    parent[rec[z.j]] = 0;
    for (Vertex y : groups[z.j]) add_tree(parent, sub, y, rec[z.j]);
  }
  return OrderedForest(parent);
}

}  // namespace detail

/// A (chi_0..chi_{q-1})-forest with at least M/2^{q-1} - n leaves, built by
/// the record-setter induction.
inline OrderedForest build_chi_forest(const ChiFunctions& chi) {
  if (chi.q() < 1) throw std::invalid_argument("forest needs q >= 1");
  VertexList dom(static_cast<std::size_t>(chi.domain()));
  std::iota(dom.begin(), dom.end(), 1);
  return detail::chi_forest_on(chi, dom, 0);
}

inline Certificate chi_forest_cert(const OrderedForest& f) {
  Certificate c;
  c.kind = CertKind::ChiForest;
  c.vertices = f.nodes();
  c.aux = ForestAux{f};
  return c;
}

/// An s-red-net of order r with X_v per forest node.
struct RedNet {
  int s = 1;
  int r = 3;
  int t = 1;
  OrderedForest forest;
  std::map<Vertex, VertexList> sets;

  const VertexList& x(Vertex v) const { return sets.at(v); }

  Certificate certificate() const {
    Certificate c;
    c.kind = CertKind::RedNet;
    c.params = {{"s", s}, {"r", r}, {"t", t}};
    for (const auto& [v, set] : sets) c.vertices.insert(c.vertices.end(), set.begin(), set.end());
    c.aux = RedNetAux{forest, sets};
    return c;
  }

  static RedNet from_certificate(const Certificate& c) {
    const auto* aux = std::get_if<RedNetAux>(&c.aux);
    if (c.kind != CertKind::RedNet || !aux) throw std::invalid_argument("not a red-net certificate");
    return {static_cast<int>(c.param("s")), static_cast<int>(c.param("r")), static_cast<int>(c.param("t")),
            aux->forest, aux->sets};
  }
};

/// X_v := X_v^{(depth v)}; the result is re-verified, and a failure (which
/// the chi ordering rules out) raises ParadoxError.
inline RedNet assemble_red_net(const TwoColoring& c, const BlockFamily& fam, const OrderedForest& forest, int t) {
  RedNet net{fam.s, fam.r, t, forest, {}};
  for (Vertex v : forest.nodes()) net.sets[v] = fam.part(v, forest.depth(v));
  if (auto verdict = verify_certificate(c, net.certificate()); !verdict)
    throw ParadoxError("assembled red net rejected: " + verdict.to_string());
  return net;
}

/// Outcome (a): s+1 nodes with sets A_i, |A_i| >= r/3, pairwise free of blue K_{t,t}.
struct KttFreeFamily {
  VertexList nodes;
  std::vector<VertexList> sets;
};

/// Outcome (b): s disjoint blue path powers, starting in mid X_{sigma(i)}
/// and ending in mid X_{pi(i)}.
struct PathBundle {
  std::vector<VertexList> paths;
  VertexList sigma, pi;
};

struct NetResolution {
  std::variant<KttFreeFamily, PathBundle> outcome;
  std::string route;  // records which outcome the recursion reached first

  bool is_family() const { return std::holds_alternative<KttFreeFamily>(outcome); }
  const KttFreeFamily& family() const { return std::get<KttFreeFamily>(outcome); }
  const PathBundle& bundle() const { return std::get<PathBundle>(outcome); }
};

namespace detail {

inline VertexList splice(VertexList p, const Biclique& k, const VertexList& q) {
  p.insert(p.end(), k.left.begin(), k.left.end());
  p.insert(p.end(), k.right.begin(), k.right.end());
  p.insert(p.end(), q.begin(), q.end());
  return p;
}

inline std::variant<KttFreeFamily, PathBundle> resolve_net(const TwoColoring& c, const RedNet& net,
                                                           const OrderedForest& f, int s) {
  const VertexList& roots = f.roots();
  const auto down = [&](Vertex v) { return thirds(net.x(v)).down; };
  const auto up = [&](Vertex v) { return thirds(net.x(v)).up; };
  const auto mid = [&](Vertex v) { return thirds(net.x(v)).mid; };
  if (s == 1) {
    VertexList path = mid(roots.front());
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      const auto k = has_blue_ktt(c, down(roots[i]), up(roots[i + 1]), net.t);
      if (!k) return KttFreeFamily{{roots[i], roots[i + 1]}, {down(roots[i]), up(roots[i + 1])}};
      path = splice(std::move(path), *k, mid(roots[i + 1]));
    }
    return PathBundle{{path}, {roots.front()}, {roots.back()}};
  }
  PathBundle acc;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Vertex xk = roots[k];
    auto child = resolve_net(c, net, f.subtree(xk).without_roots(), s - 1);
    if (auto* fam = std::get_if<KttFreeFamily>(&child)) {
      fam->nodes.insert(fam->nodes.begin(), xk);
      fam->sets.insert(fam->sets.begin(), net.x(xk));
      return *fam;
    }
    auto& b = std::get<PathBundle>(child);
    b.paths.push_back(mid(xk));
    b.sigma.push_back(xk);
    b.pi.push_back(xk);
    if (k == 0) {
      acc = std::move(b);
      continue;
    }
    // Bipartite connector graph from the current tails to the new heads.
    const VertexList& left = acc.pi;
    const VertexList& right = b.sigma;
    const std::size_t m = left.size();
    std::vector<std::vector<std::optional<Biclique>>> edge(m, std::vector<std::optional<Biclique>>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t z = 0; z < m; ++z) edge[a][z] = has_blue_ktt(c, down(left[a]), up(right[z]), net.t);
    std::vector<int> match_r(m, -1);
    std::vector<char> seen_l, seen_r;
    std::function<bool(std::size_t)> augment = [&](std::size_t a) {
      seen_l[a] = 1;
      for (std::size_t z = 0; z < m; ++z) {
        if (!edge[a][z] || seen_r[z]) continue;
        seen_r[z] = 1;
        if (match_r[z] < 0 || augment(static_cast<std::size_t>(match_r[z]))) {
          match_r[z] = static_cast<int>(a);
          return true;
        }
      }
      return false;
    };
    for (std::size_t a = 0; a < m; ++a) {
      seen_l.assign(m, 0);
      seen_r.assign(m, 0);
      if (augment(a)) continue;
      // The alternating tree from a is a Hall violator: S = reached tails,
      // N(S) = reached heads, |N(S)| = |S| - 1.
      std::vector<std::pair<Vertex, VertexList>> out;
      for (std::size_t u = 0; u < m; ++u)
        if (seen_l[u]) out.emplace_back(left[u], down(left[u]));
      for (std::size_t z = 0; z < m && static_cast<int>(out.size()) < s + 1; ++z)
        if (!seen_r[z]) out.emplace_back(right[z], up(right[z]));
      std::sort(out.begin(), out.end());
      KttFreeFamily fam;
      for (auto& [v, set] : out) {
        fam.nodes.push_back(v);
        fam.sets.push_back(std::move(set));
      }
      return fam;
    }
    PathBundle next;
    next.sigma = acc.sigma;
    for (std::size_t i = 0; i < acc.paths.size(); ++i) {
      const auto a = static_cast<std::size_t>(std::find(left.begin(), left.end(), acc.pi[i]) - left.begin());
      std::size_t z = 0;
      while (match_r[z] != static_cast<int>(a)) ++z;
      next.paths.push_back(splice(acc.paths[i], *edge[a][z], b.paths[z]));
      next.pi.push_back(b.pi[z]);
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

/// Resolves an s-red-net into outcome (a) or (b), following the induction on
/// s and reporting whichever outcome the recursion reaches first.
inline NetResolution resolve_red_net(const TwoColoring& c, const RedNet& net) {
  if (net.forest.empty()) throw std::invalid_argument("red net has an empty forest");
  if (net.r < 3 * net.t || net.r % 3 != 0) throw std::invalid_argument("red net needs 3 | r and r >= 3t");
  NetResolution res{detail::resolve_net(c, net, net.forest, net.s), {}};
  res.route = res.is_family() ? "outcome-a" : "outcome-b";
  return res;
}

/// Machine check of the outcome invariants for `net`.
inline Verdict check_resolution(const TwoColoring& c, const RedNet& net, const NetResolution& res) {
  const auto sub = [](const VertexList& a, const VertexList& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  if (res.is_family()) {
    const auto& fam = res.family();
    if (static_cast<int>(fam.nodes.size()) != net.s + 1 || fam.sets.size() != fam.nodes.size())
      return Verdict::reject("family-size", fam.nodes);
    if (std::set<Vertex>(fam.nodes.begin(), fam.nodes.end()).size() != fam.nodes.size())
      return Verdict::reject("family-distinct", fam.nodes);
    for (std::size_t i = 0; i < fam.nodes.size(); ++i) {
      if (!net.forest.contains(fam.nodes[i])) return Verdict::reject("family-node", {fam.nodes[i]});
      if (3 * static_cast<int>(fam.sets[i].size()) < net.r || !sub(fam.sets[i], net.x(fam.nodes[i])))
        return Verdict::reject("family-set", {fam.nodes[i]});
    }
    for (std::size_t i = 0; i < fam.sets.size(); ++i)
      for (std::size_t j = i + 1; j < fam.sets.size(); ++j)
        if (has_blue_ktt(c, fam.sets[i], fam.sets[j], net.t))
          return Verdict::reject("family-ktt", {fam.nodes[i], fam.nodes[j]});
    return Verdict::accept();
  }
  const auto& b = res.bundle();
  if (static_cast<int>(b.paths.size()) != net.s || b.sigma.size() != b.paths.size() || b.pi.size() != b.paths.size())
    return Verdict::reject("bundle-size");
  auto head = net.forest.head(), tail = net.forest.tail();
  auto sigma = b.sigma, pi = b.pi;
  std::sort(head.begin(), head.end());
  std::sort(tail.begin(), tail.end());
  std::sort(sigma.begin(), sigma.end());
  std::sort(pi.begin(), pi.end());
  if (sigma != head) return Verdict::reject("bundle-sigma", b.sigma);
  if (pi != tail) return Verdict::reject("bundle-pi", b.pi);
  std::set<Vertex> used;
  long long total = 0;
  for (std::size_t i = 0; i < b.paths.size(); ++i) {
    const auto& p = b.paths[i];
    if (static_cast<int>(p.size()) < net.t) return Verdict::reject("bundle-length", {static_cast<Vertex>(i + 1)});
    if (auto v = verify_certificate(c, path_power_cert(Color::Blue, p, net.t)); !v) return v;
    for (Vertex v : p)
      if (!used.insert(v).second) return Verdict::reject("bundle-disjoint", {v});
    total += static_cast<long long>(p.size());
    VertexList first(p.begin(), p.begin() + net.t), last(p.end() - net.t, p.end());
    if (!sub(first, thirds(net.x(b.sigma[i])).mid)) return Verdict::reject("bundle-start", first);
    if (!sub(last, thirds(net.x(b.pi[i])).mid)) return Verdict::reject("bundle-end", last);
  }
  if (3 * total < static_cast<long long>(net.forest.size()) * net.r)
    return Verdict::reject("bundle-total", {}, "sum of lengths below |F|r/3");
  return Verdict::accept();
}

namespace detail {

struct TransversalSearch {
  const TwoColoring& c;
  std::vector<VertexList> order;
  long long budget;
  VertexList chosen;

  // Returns 1 on success, 0 when exhausted, -1 when the budget ran out.
  int run(std::size_t i, const Bitset& allowed) {
    if (i == order.size()) return 1;
    for (Vertex v : order[i]) {
      if (!allowed.test(static_cast<std::size_t>(v))) continue;
      if (budget >= 0 && budget-- == 0) return -1;
      chosen.push_back(v);
      const int got = run(i + 1, allowed & c.neighbors(Color::Red, v));
      if (got != 0) return got;
      chosen.pop_back();
    }
    return 0;
  }
};

}  // namespace detail

/// A red transversal clique v_i in A_i of sets pairwise free of blue K_{t,t}.
/// Candidates are tried by descending cross red degree, then under seeded
/// shuffles, then exhaustively. Exhaustion raises ParadoxError once every
/// |A_i| reaches (4s^2)^t, where the density bound forces a clique;
/// smaller families may return NotFound.
inline Extraction red_clique_from_ktt_free(const TwoColoring& c, const std::vector<VertexList>& sets, int t,
                                           std::uint64_t seed = 1, int restarts = 8) {
  if (sets.size() < 2) throw std::invalid_argument("need at least two sets");
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (has_blue_ktt(c, sets[i], sets[j], t))
        throw std::invalid_argument("sets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                    " span a blue K_t,t");
  std::vector<VertexList> order = sets;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::map<Vertex, int> deg;
    for (Vertex v : order[i])
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (j != i)
          for (Vertex u : sets[j]) deg[v] += c(u, v) == Color::Red;
    std::stable_sort(order[i].begin(), order[i].end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  }
  Bitset all = c.make_set();
  all.set();
  const long long budget = 20000;
  Rng rng(seed);
  for (int attempt = 0; attempt <= restarts + 1; ++attempt) {
    const bool last = attempt == restarts + 1;
    auto cur = order;
    if (attempt > 0 && !last)
      for (auto& o : cur)
        for (std::size_t k = o.size(); k > 1; --k) std::swap(o[k - 1], o[rng.below(k)]);
    detail::TransversalSearch search{c, std::move(cur), last ? -1 : budget, {}};
    const int got = search.run(0, all);
    if (got == 1) {
      VertexList vs = search.chosen;
      std::sort(vs.begin(), vs.end());
      return clique_cert(Color::Red, vs, attempt == 0 ? "ktt-free-degree" : "ktt-free-restart");
    }
    if (got == 0) break;
  }
  const int s = static_cast<int>(sets.size()) - 1;
  long long need = 1;
  for (int i = 0; i < t && need < (1LL << 40); ++i) need *= 4LL * s * s;
  bool large = true;
  for (const auto& a : sets) large = large && static_cast<long long>(a.size()) >= need;
  if (large) throw ParadoxError("no red transversal among " + std::to_string(sets.size()) + " K_t,t-free sets");
  return std::nullopt;
}

/// Red K_{s+1} or blue P_n^t. Path: blue window DP, then the block / chi
/// forest / red net pipeline with r = 3(4s^2)^t and M = 2^{s-1}n (shrunk to
/// what N allows), then a direct red clique search.
inline Extraction extract_clique_vs_powerpath(const TwoColoring& c, int s, int t, int n, std::uint64_t seed = 1) {
  if (s < 1 || t < 1 || n < t) throw std::invalid_argument("clique vs path power needs s >= 1 and n >= t >= 1");
  const WindowChi blue(c, t, Color::Blue);
  if (const auto* e = blue.first_reaching(n)) return path_power_cert(Color::Blue, blue.trace(e->window, n), t, "blue-window-dp");

  long long r = 3;
  for (int i = 0; i < t && r < (1LL << 40); ++i) r *= 4LL * s * s;
  const long long w = r < (1LL << 30) ? block_window(s, r) : std::numeric_limits<long long>::max();
  long long m = n;
  for (int i = 1; i < s && m < (1LL << 40); ++i) m *= 2;
  if (w != std::numeric_limits<long long>::max()) m = std::min(m, c.size() / w);
  else m = 0;
  if (m >= 1) {
    auto blocks = build_blue_clique_blocks(c, s, static_cast<int>(r), static_cast<int>(m));
    if (auto* cert = std::get_if<Certificate>(&blocks)) return *cert;
    const auto& fam = std::get<BlockFamily>(blocks);
    OrderedForest forest;
    if (s == 1) {
      std::map<Vertex, Vertex> roots;
      for (int i = 1; i <= fam.size(); ++i) roots[i] = 0;
      forest = OrderedForest(roots);
    } else {
      forest = build_chi_forest(compute_block_chi(c, fam, t, n));
    }
    const auto need_leaves = std::max<long long>(1, (3LL * s * n + r - 1) / r);
    if (!forest.empty() && static_cast<long long>(forest.leaves().size()) >= need_leaves) {
      const RedNet net = assemble_red_net(c, fam, forest, t);
      const NetResolution res = resolve_red_net(c, net);
      if (auto v = check_resolution(c, net, res); !v) throw ParadoxError("red net resolution invalid: " + v.to_string());
      if (res.is_family()) {
        if (auto got = red_clique_from_ktt_free(c, res.family().sets, t, seed)) {
          got->route = "red-net-a";
          return got;
        }
      } else {
        for (const auto& p : res.bundle().paths)
          if (static_cast<int>(p.size()) >= n)
            throw ParadoxError("red net bundle holds a blue P_n^t that the window DP missed");
      }
    }
  }
  if (auto k = find_clique(c, Color::Red, s + 1)) return clique_cert(Color::Red, *k, "direct-search");
  return std::nullopt;
}

}  // namespace ordram
