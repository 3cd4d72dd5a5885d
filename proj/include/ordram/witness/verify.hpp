#pragma once

#include <set>
#include <string>

#include "ordram/core/coloring.hpp"
#include "ordram/witness/certificate.hpp"
#include "ordram/witness/ktt.hpp"

namespace ordram {

/// Outcome of re-checking a certificate. A rejection names the violated
/// clause and the tuple that violates it.
struct Verdict {
  bool accepted = true;
  std::string clause;
  VertexList tuple;
  std::string detail;

  static Verdict accept() { return {}; }
  static Verdict reject(std::string clause, VertexList tuple = {}, std::string detail = {}) {
    return {false, std::move(clause), std::move(tuple), std::move(detail)};
  }
  explicit operator bool() const { return accepted; }

  std::string to_string() const {
    if (accepted) return "Accept";
    std::string s = "Reject(" + clause;
    if (!tuple.empty()) s += ", " + ordram::detail::format_list(tuple);
    if (!detail.empty()) s += ", " + detail;
    return s + ")";
  }
};

namespace detail {

inline Verdict check_list(const VertexList& vs, int n) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 1 || vs[i] > n) return Verdict::reject("range", {vs[i]});
    if (i && vs[i - 1] >= vs[i]) return Verdict::reject("order", {vs[i - 1], vs[i]});
  }
  return Verdict::accept();
}

inline Verdict expect_size(const VertexList& vs, std::int64_t want, const char* what) {
  if (static_cast<std::int64_t>(vs.size()) != want)
    return Verdict::reject("shape", {}, std::string(what) + " expects " + std::to_string(want) + " vertices, got " +
                                            std::to_string(vs.size()));
  return Verdict::accept();
}

inline Verdict need_param(const Certificate& c, const char* key) {
  if (!c.params.count(key)) return Verdict::reject("shape", {}, std::string("missing parameter ") + key);
  if (c.params.at(key) < 1) return Verdict::reject("shape", {}, std::string("parameter ") + key + " must be >= 1");
  return Verdict::accept();
}

template <class A>
const A* aux_as(const Certificate& c) {
  return std::get_if<A>(&c.aux);
}

/// Non-increasing check on one triple. Returns the clause id or empty.
inline std::string triple_clause(const PairLabeling& l, Vertex x, Vertex y, Vertex z) {
  const int xy = l(x, y), yz = l(y, z), xz = l(x, z);
  if (xy < yz) return "ni-order";
  if (xz != xy && xz != yz) return "ni-third-edge";
  return {};
}

inline Verdict check_nonincreasing(const PairLabeling& l, const VertexList& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (std::size_t k = j + 1; k < vs.size(); ++k)
        if (auto cl = triple_clause(l, vs[i], vs[j], vs[k]); !cl.empty())
          return Verdict::reject(cl, {vs[i], vs[j], vs[k]});
  return Verdict::accept();
}

inline Verdict verify_two(const TwoColoring& g, const Certificate& c) {
  using K = CertKind;
  if (c.kind != K::MonoClique && c.kind != K::MonoPathPower && c.kind != K::MonoBlowup && c.kind != K::CliqueChain &&
      c.kind != K::RedNet)
    return Verdict::reject("instance", {}, "certificate kind does not apply to a pair coloring");
  // Red nets are red by definition and carry no color.
  if (!c.color && c.kind != K::RedNet) return Verdict::reject("shape", {}, "color required");
  const Color col = c.color.value_or(Color::Red);
  const auto& vs = c.vertices;
  switch (c.kind) {
    case CertKind::MonoClique: {
      if (auto v = need_param(c, "s"); !v) return v;
      if (auto v = expect_size(vs, c.param("s"), "clique"); !v) return v;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (g(vs[i], vs[j]) != col) return Verdict::reject("mono-edge", {vs[i], vs[j]});
      return Verdict::accept();
    }
    case CertKind::MonoPathPower: {
      if (auto v = need_param(c, "n"); !v) return v;
      if (auto v = need_param(c, "t"); !v) return v;
      if (auto v = expect_size(vs, c.param("n"), "path power"); !v) return v;
      const auto t = static_cast<std::size_t>(c.param("t"));
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size() && j <= i + t; ++j)
          if (g(vs[i], vs[j]) != col) return Verdict::reject("window-edge", {vs[i], vs[j]});
      return Verdict::accept();
    }
    case CertKind::MonoBlowup: {
      if (auto v = need_param(c, "n"); !v) return v;
      if (auto v = need_param(c, "t"); !v) return v;
      const auto* aux = aux_as<BlowupAux>(c);
      if (!aux) return Verdict::reject("shape", {}, "blowup needs groups");
      const auto n = c.param("n"), t = c.param("t");
      if (static_cast<std::int64_t>(aux->groups.size()) != n)
        return Verdict::reject("shape", {}, "expected " + std::to_string(n) + " groups");
      VertexList flat;
      for (const auto& grp : aux->groups) {
        if (static_cast<std::int64_t>(grp.size()) != t)
          return Verdict::reject("shape", grp, "group size must be " + std::to_string(t));
        flat.insert(flat.end(), grp.begin(), grp.end());
      }
      if (auto v = check_list(flat, g.size()); !v) return v;
      if (flat != vs) return Verdict::reject("shape", {}, "vertices must list the groups in order");
      for (std::size_t k = 0; k + 1 < aux->groups.size(); ++k)
        for (Vertex a : aux->groups[k])
          for (Vertex b : aux->groups[k + 1])
            if (g(a, b) != col) return Verdict::reject("blowup-edge", {a, b});
      return Verdict::accept();
    }
    case CertKind::CliqueChain: {
      if (auto v = need_param(c, "t"); !v) return v;
      if (auto v = need_param(c, "m"); !v) return v;
      const auto* aux = aux_as<ChainAux>(c);
      if (!aux) return Verdict::reject("shape", {}, "chain needs cliques");
      const auto t = c.param("t");
      if (static_cast<std::int64_t>(aux->cliques.size()) != c.param("m"))
        return Verdict::reject("shape", {}, "expected " + std::to_string(c.param("m")) + " cliques");
      std::set<Vertex> all;
      for (std::size_t k = 0; k < aux->cliques.size(); ++k) {
        const auto& x = aux->cliques[k];
        if (static_cast<std::int64_t>(x.size()) != t) return Verdict::reject("shape", x, "clique size");
        if (auto v = check_list(x, g.size()); !v) return v;
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = i + 1; j < x.size(); ++j)
            if (g(x[i], x[j]) != col) return Verdict::reject("chain-edge", {x[i], x[j]});
        all.insert(x.begin(), x.end());
        if (k) {
          const auto& prev = aux->cliques[k - 1];
          if (prev.back() != x.front()) return Verdict::reject("chain-link", {prev.back(), x.front()});
          int shared = 0;
          for (Vertex v : x) shared += std::count(prev.begin(), prev.end(), v) ? 1 : 0;
          if (shared != 1) return Verdict::reject("chain-overlap", {prev.front(), x.front()});
        }
      }
      if (VertexList(all.begin(), all.end()) != vs)
        return Verdict::reject("shape", {}, "vertices must be the union of the cliques");
      return Verdict::accept();
    }
    case CertKind::RedNet: {
      if (auto v = need_param(c, "s"); !v) return v;
      if (auto v = need_param(c, "r"); !v) return v;
      if (auto v = need_param(c, "t"); !v) return v;
      const auto* aux = aux_as<RedNetAux>(c);
      if (!aux) return Verdict::reject("shape", {}, "net needs forest and sets");
      const auto s = c.param("s"), r = c.param("r"), t = c.param("t");
      if (r % 3 != 0) return Verdict::reject("net-order", {}, "r must be divisible by 3");
      const auto& f = aux->forest;
      if (f.empty()) return Verdict::reject("forest-empty");
      if (auto d = f.balanced_depth(); !d || *d != s - 1)
        return Verdict::reject("forest-balance", {}, "leaves must all have depth " + std::to_string(s - 1));
      if (auto bad = f.well_order_violation()) return Verdict::reject("forest-order", {bad->first, bad->second});
      const VertexList* prev = nullptr;
      Vertex prev_node = 0;
      for (Vertex v : f.nodes()) {
        auto it = aux->sets.find(v);
        if (it == aux->sets.end()) return Verdict::reject("net-set", {v}, "missing set");
        const auto& x = it->second;
        if (static_cast<std::int64_t>(x.size()) != r) return Verdict::reject("net-set", {v}, "size must be r");
        if (auto ok = check_list(x, g.size()); !ok) return ok;
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = i + 1; j < x.size(); ++j)
            if (g(x[i], x[j]) != Color::Blue) return Verdict::reject("net-clique", {x[i], x[j]});
        if (prev && prev->back() >= x.front()) return Verdict::reject("net-order", {prev_node, v});
        prev = &x;
        prev_node = v;
      }
      if (aux->sets.size() != f.nodes().size()) return Verdict::reject("net-set", {}, "sets for non-nodes");
      VertexList flat;
      for (const auto& [v, x] : aux->sets) flat.insert(flat.end(), x.begin(), x.end());
      if (flat != vs) return Verdict::reject("shape", {}, "vertices must list the sets in node order");
      for (Vertex u : f.nodes())
        for (Vertex a = f.parent(u); a != 0; a = f.parent(a))
          if (auto k = has_blue_ktt(g, aux->sets.at(a), aux->sets.at(u), static_cast<int>(t))) {
            VertexList tup{a, u};
            tup.insert(tup.end(), k->left.begin(), k->left.end());
            tup.insert(tup.end(), k->right.begin(), k->right.end());
            return Verdict::reject("net-ktt", tup);
          }
      return Verdict::accept();
    }
    default: return Verdict::reject("instance", {}, "certificate kind does not apply to a pair coloring");
  }
}

inline Verdict verify_three(const TripleColoring& g, const Certificate& c) {
  if (c.kind != CertKind::MonoTightPath3 && c.kind != CertKind::MonoClique3)
    return Verdict::reject("instance", {}, "certificate kind does not apply to a triple coloring");
  if (!c.color) return Verdict::reject("shape", {}, "color required");
  const Color col = *c.color;
  const auto& vs = c.vertices;
  switch (c.kind) {
    case CertKind::MonoTightPath3: {
      if (auto v = need_param(c, "n"); !v) return v;
      if (auto v = expect_size(vs, c.param("n"), "tight path"); !v) return v;
      for (std::size_t i = 0; i + 2 < vs.size(); ++i)
        if (g(vs[i], vs[i + 1], vs[i + 2]) != col) return Verdict::reject("tight-triple", {vs[i], vs[i + 1], vs[i + 2]});
      return Verdict::accept();
    }
    case CertKind::MonoClique3: {
      if (auto v = need_param(c, "s"); !v) return v;
      if (auto v = expect_size(vs, c.param("s"), "clique"); !v) return v;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          for (std::size_t k = j + 1; k < vs.size(); ++k)
            if (g(vs[i], vs[j], vs[k]) != col) return Verdict::reject("mono-triple", {vs[i], vs[j], vs[k]});
      return Verdict::accept();
    }
    default: return Verdict::reject("instance", {}, "certificate kind does not apply to a triple coloring");
  }
}

inline Verdict verify_labels(const PairLabeling& l, const Certificate& c) {
  const auto& vs = c.vertices;
  switch (c.kind) {
    case CertKind::NonIncreasingSet: {
      if (c.params.count("s"))
        if (auto v = expect_size(vs, c.param("s"), "set"); !v) return v;
      return check_nonincreasing(l, vs);
    }
    case CertKind::LexicographicSet: {
      const auto* aux = aux_as<LexAux>(c);
      if (!aux) return Verdict::reject("shape", {}, "lexicographic set needs direction and colors");
      if (c.params.count("s"))
        if (auto v = expect_size(vs, c.param("s"), "set"); !v) return v;
      if (vs.size() < 2) return Verdict::reject("shape", {}, "lexicographic set needs two vertices");
      if (aux->colors.size() + 1 != vs.size()) return Verdict::reject("shape", {}, "need |vertices|-1 colors");
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          const int want = aux->colors[aux->forward ? i : j - 1];
          if (l(vs[i], vs[j]) != want) return Verdict::reject("lex-color", {vs[i], vs[j]});
        }
      if (aux->nonincreasing_colors)
        for (std::size_t i = 1; i < aux->colors.size(); ++i)
          if (aux->colors[i - 1] < aux->colors[i]) return Verdict::reject("lex-nonincreasing", {vs[i], vs[i + 1]});
      return Verdict::accept();
    }
    case CertKind::HstCopy: {
      if (auto v = need_param(c, "s"); !v) return v;
      if (auto v = need_param(c, "t"); !v) return v;
      const auto s = c.param("s"), t = c.param("t");
      const auto* aux = aux_as<HstAux>(c);
      if (!aux || aux->split != s) return Verdict::reject("shape", {}, "split must equal s");
      if (s < 2) return Verdict::reject("shape", {}, "H_{s,t} needs s >= 2");
      if (auto v = expect_size(vs, s + t - 1, "H_{s,t}"); !v) return v;
      const VertexList clique(vs.begin(), vs.begin() + s);
      const VertexList path(vs.begin() + (s - 1), vs.end());
      if (auto v = check_nonincreasing(l, clique); !v) return Verdict::reject("hst-clique", v.tuple, v.clause);
      if (path.size() >= 2 && l(clique[s - 2], clique[s - 1]) < l(path[0], path[1]))
        return Verdict::reject("hst-junction", {clique[s - 2], clique[s - 1], path[1]});
      for (std::size_t i = 0; i + 2 < path.size(); ++i)
        if (l(path[i], path[i + 1]) < l(path[i + 1], path[i + 2]))
          return Verdict::reject("hst-path", {path[i], path[i + 1], path[i + 2]});
      return Verdict::accept();
    }
    case CertKind::LabelMonotonePath: {
      const auto* aux = aux_as<PathAux>(c);
      if (!aux) return Verdict::reject("shape", {}, "path needs monotonicity");
      if (auto v = need_param(c, "edges"); !v) return v;
      if (auto v = expect_size(vs, c.param("edges") + 1, "path"); !v) return v;
      for (std::size_t i = 0; i + 2 < vs.size(); ++i) {
        const int a = l(vs[i], vs[i + 1]), b = l(vs[i + 1], vs[i + 2]);
        const bool ok = aux->monotonicity == Monotonicity::NonIncreasing ? a >= b : a < b;
        if (!ok) return Verdict::reject("path-label", {vs[i], vs[i + 1], vs[i + 2]});
      }
      return Verdict::accept();
    }
    default: return Verdict::reject("instance", {}, "certificate kind does not apply to a labeling");
  }
}

inline Verdict verify_chi(const ChiFunctions& f, const Certificate& c) {
  if (c.kind != CertKind::ChiForest)
    return Verdict::reject("instance", {}, "certificate kind does not apply to a function family");
  const auto* aux = aux_as<ForestAux>(c);
  if (!aux) return Verdict::reject("shape", {}, "forest missing");
  const auto& F = aux->forest;
  const int q = f.q();
  if (c.params.count("q") && c.param("q") != q) return Verdict::reject("shape", {}, "q mismatch");
  if (F.nodes() != c.vertices) return Verdict::reject("shape", {}, "vertices must list the forest nodes");
  if (auto v = check_list(c.vertices, f.domain()); !v) return v;
  if (F.empty()) return Verdict::accept();
  if (auto d = F.balanced_depth(); !d || *d != q)
    return Verdict::reject("forest-balance", {}, "leaves must all have depth " + std::to_string(q));
  if (auto bad = F.well_order_violation()) return Verdict::reject("forest-order", {bad->first, bad->second});
  for (Vertex a : F.nodes()) {
    const int d = F.depth(a);
    if (d >= q) continue;
    for (Vertex ch : F.children(a))
      if (f(d, a) < f(d, ch)) return Verdict::reject("forest-chi", {a, ch}, "depth " + std::to_string(d));
  }
  return Verdict::accept();
}

}  // namespace detail

/// Re-checks `cert` against the instance from the definitions alone.
inline Verdict verify_certificate(const TwoColoring& g, const Certificate& cert) {
  if (auto v = detail::check_list(cert.vertices, g.size()); !v) return v;
  return detail::verify_two(g, cert);
}

inline Verdict verify_certificate(const TripleColoring& g, const Certificate& cert) {
  if (auto v = detail::check_list(cert.vertices, g.size()); !v) return v;
  return detail::verify_three(g, cert);
}

inline Verdict verify_certificate(const PairLabeling& l, const Certificate& cert) {
  if (auto v = detail::check_list(cert.vertices, l.size()); !v) return v;
  return detail::verify_labels(l, cert);
}

inline Verdict verify_certificate(const ChiFunctions& f, const Certificate& cert) { return detail::verify_chi(f, cert); }

inline Verdict verify_certificate(const Instance& inst, const Certificate& cert) {
  return std::visit([&](const auto& x) { return verify_certificate(x, cert); }, inst);
}

}  // namespace ordram
