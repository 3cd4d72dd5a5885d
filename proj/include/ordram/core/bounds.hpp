#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordram {

using BigInt = boost::multiprecision::cpp_int;

/// Explicit threshold formulas.
enum class Formula {
  ES,            // R_<(K_s, P_n) = (s-1)(n-1)+1
  CupsCaps,      // R_<(P_s^(3), P_n^(3)) = C(s+n-4, s-2) + 1
  CliquePathPower,         // R_<(K_{s+1}, P_n^t) <= (24 s^3)^{st} n
  PathPowerClique,         // R_<(P_n^t, K_n) <= 2^{2t-1} n^{t(2t-1)}
  DiagonalPathPower,         // R_<(P_n^t, P_n^t) <= (400 t^3)^{t^2} n^{4t-2}
  CK,            // non-increasing p-path or increasing q-path once N > C(p+q-2, p-1)
  CanonicalC,    // exponent C(s,t) of f(n; s,t) = O(n^C)
  FBound,        // recursive upper bound on f(n; s,t)
  RedNetOrder,   // red-net order r = 3 (4 s^2)^t
  RamseyGreedy,  // R(K_s, K_n) <= C(s+n-2, s-1)
  Blowup,        // R_<(P_n[t], K_n) <= (2 t n^3)^{2t-1}
};

struct FormulaInfo {
  Formula formula;
  std::string_view id;
  std::string_view params;  // required parameter letters
};

inline constexpr std::array<FormulaInfo, 11> kFormulas{{
    {Formula::ES, "es", "sn"},
    {Formula::CupsCaps, "cupscaps", "sn"},
    {Formula::CliquePathPower, "thm11", "stn"},
    {Formula::PathPowerClique, "thm12", "tn"},
    {Formula::DiagonalPathPower, "thm13", "tn"},
    {Formula::CK, "ck", "pq"},
    {Formula::CanonicalC, "canonical-c", "st"},
    {Formula::FBound, "fbound", "nst"},
    {Formula::RedNetOrder, "rednet-order", "st"},
    {Formula::RamseyGreedy, "ramsey", "sn"},
    {Formula::Blowup, "blowup", "tn"},
}};

inline const FormulaInfo& info(Formula f) {
  for (const auto& fi : kFormulas)
    if (fi.formula == f) return fi;
  throw std::invalid_argument("unknown formula");
}

inline Formula formula_from_id(std::string_view id) {
  for (const auto& fi : kFormulas)
    if (fi.id == id) return fi.formula;
  throw std::invalid_argument("unknown formula '" + std::string(id) + "'");
}

struct BoundRequest {
  Formula formula;
  std::map<char, long long> params;
};

/// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt power(BigInt base, long long exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

namespace detail {

inline BigInt canonical_exponent(long long s, long long t) {
  if (s == 2) return t - 1;
  return (s + t) * canonical_exponent(s - 1, t + 1) + s - 1;
}

inline BigInt f_upper(long long n, long long s, long long t) {
  if (s == 2) return binomial(n + t - 1, t - 1) + 1;
  return power(f_upper(n, s - 1, t + 1), s + t) * power(BigInt(n), s - 1);
}

}  // namespace detail

inline BigInt bound_calculator(const BoundRequest& req) {
  const auto& fi = info(req.formula);
  auto get = [&](char key) -> long long {
    auto it = req.params.find(key);
    if (it == req.params.end())
      throw std::invalid_argument(std::string("formula ") + std::string(fi.id) + " needs parameter " + key);
    if (it->second < 1) throw std::invalid_argument(std::string("parameter ") + key + " must be >= 1");
    return it->second;
  };
  for (char key : fi.params) (void)get(key);

  switch (req.formula) {
    case Formula::ES: return BigInt(get('s') - 1) * (get('n') - 1) + 1;
    case Formula::CupsCaps: return binomial(get('s') + get('n') - 4, get('s') - 2) + 1;
    case Formula::CliquePathPower: {
      const long long s = get('s'), t = get('t');
      return power(BigInt(24) * s * s * s, s * t) * get('n');
    }
    case Formula::PathPowerClique: {
      const long long t = get('t');
      return power(BigInt(2), 2 * t - 1) * power(BigInt(get('n')), t * (2 * t - 1));
    }
    case Formula::DiagonalPathPower: {
      const long long t = get('t');
      return power(BigInt(400) * t * t * t, t * t) * power(BigInt(get('n')), 4 * t - 2);
    }
    case Formula::CK: return binomial(get('p') + get('q') - 2, get('p') - 1) + 1;
    case Formula::CanonicalC: {
      if (get('s') < 2) throw std::invalid_argument("canonical-c needs s >= 2");
      return detail::canonical_exponent(get('s'), get('t'));
    }
    case Formula::FBound: {
      if (get('s') < 2) throw std::invalid_argument("fbound needs s >= 2");
      return detail::f_upper(get('n'), get('s'), get('t'));
    }
    case Formula::RedNetOrder: {
      const long long s = get('s');
      return 3 * power(BigInt(4) * s * s, get('t'));
    }
    case Formula::RamseyGreedy: return binomial(get('s') + get('n') - 2, get('s') - 1);
    case Formula::Blowup: {
      const long long t = get('t'), n = get('n');
      return power(BigInt(2) * t * n * n * n, 2 * t - 1);
    }
  }
  throw std::invalid_argument("unknown formula");
}

/// Small-value convenience for internal thresholds; throws if the value does
/// not fit.
inline long long to_ll(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<long long>::max())) throw std::overflow_error("bound does not fit in 64 bits");
  return static_cast<long long>(v);
}

}  // namespace ordram
