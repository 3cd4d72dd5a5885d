#pragma once

#include <limits>
#include <optional>
#include <string>

#include "ordram/core/bounds.hpp"
#include "ordram/witness/certificate.hpp"

namespace ordram {

/// An extractor's answer; nullopt is NotFound.
using Extraction = std::optional<Certificate>;

inline Certificate clique_cert(Color col, VertexList vs, std::string route = {}) {
  Certificate c;
  c.kind = CertKind::MonoClique;
  c.color = col;
  c.params["s"] = static_cast<std::int64_t>(vs.size());
  c.vertices = std::move(vs);
  c.route = std::move(route);
  return c;
}

inline Certificate path_power_cert(Color col, VertexList vs, int t, std::string route = {}) {
  Certificate c;
  c.kind = CertKind::MonoPathPower;
  c.color = col;
  c.params["n"] = static_cast<std::int64_t>(vs.size());
  c.params["t"] = t;
  c.vertices = std::move(vs);
  c.route = std::move(route);
  return c;
}

namespace detail {

/// min(C(n, k), LLONG_MAX).
inline long long saturating_binomial(long long n, long long k) {
  const BigInt b = binomial(n, k);
  if (b > BigInt(std::numeric_limits<long long>::max())) return std::numeric_limits<long long>::max();
  return static_cast<long long>(b);
}

}  // namespace detail

/// Vertex count that guarantees a red K_a or a blue K_b under the greedy
/// pivot argument: C(a+b-2, a-1), and 0 once either target is met.
inline long long ramsey_threshold(int a, int b) {
  if (a <= 0 || b <= 0) return 0;
  return detail::saturating_binomial(a + b - 2, a - 1);
}

}  // namespace ordram
