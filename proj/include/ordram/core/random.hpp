#pragma once

#include <charconv>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "ordram/core/coloring.hpp"

namespace ordram {

/// Exact rational probability num/den.
struct Probability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Accepts "a/b" or a decimal such as "0.95" (kept exact).
  static Probability parse(std::string_view text) {
    auto to_u64 = [&](std::string_view s) {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad probability '" + std::string(text) + "'");
      return v;
    };
    Probability p;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      p = {to_u64(text.substr(0, slash)), to_u64(text.substr(slash + 1))};
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
      const auto frac = text.substr(dot + 1);
      if (frac.size() > 18) throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
      std::uint64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const auto whole = text.substr(0, dot);
      p = {(whole.empty() ? 0 : to_u64(whole)) * den + (frac.empty() ? 0 : to_u64(frac)), den};
    } else {
      p = {to_u64(text), 1};
    }
    p.validate();
    return p;
  }

  void validate() const {
    if (den == 0 || num > den) throw std::invalid_argument("probability must lie in [0,1]");
  }
};

/// Seedable, splittable generator. The engine is mt19937_64, whose output
/// sequence is fixed by the standard; all reductions to ranges are done here
/// so results do not depend on the library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      0x6f726472u};
    engine_.seed(seq);
  }

  /// Independent child generator; a pure function of (seed, stream, child).
  Rng split(std::uint64_t child) const {
    return Rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (stream_ + 1)), child * 0xbf58476d1ce4e5b9ULL + stream_ + 1);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  bool bernoulli(const Probability& p) {
    if (p.num == 0) return false;
    if (p.num == p.den) return true;
    return below(p.den) < p.num;
  }

  template <class Range>
  void shuffle(Range& r) {
    for (std::size_t i = r.size(); i > 1; --i) std::swap(r[i - 1], r[static_cast<std::size_t>(below(i))]);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

enum class Shape { Pairs, Triples, Labels };

inline Shape shape_from_string(std::string_view s) {
  if (s == "pairs") return Shape::Pairs;
  if (s == "triples") return Shape::Triples;
  if (s == "labels") return Shape::Labels;
  throw std::invalid_argument("unknown shape '" + std::string(s) + "'");
}

/// Pair (i, j > i) draws in row-major order, each blue with probability p_blue.
inline TwoColoring random_two_coloring(int n, const Probability& p_blue, std::uint64_t seed) {
  p_blue.validate();
  Rng rng(seed, 1);
  return TwoColoring::from_function(n, [&](Vertex, Vertex) { return rng.bernoulli(p_blue) ? Color::Blue : Color::Red; });
}

inline TripleColoring random_triple_coloring(int n, const Probability& p_blue, std::uint64_t seed) {
  p_blue.validate();
  Rng rng(seed, 2);
  return TripleColoring::from_function(
      n, [&](Vertex, Vertex, Vertex) { return rng.bernoulli(p_blue) ? Color::Blue : Color::Red; });
}

inline PairLabeling random_labeling(int n, int n_colors, std::uint64_t seed) {
  if (n_colors < 1) throw std::invalid_argument("labels need n_colors >= 1");
  Rng rng(seed, 3);
  return PairLabeling::from_function(
      n, n_colors, [&](Vertex, Vertex) { return 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_colors))); });
}

inline Instance generate_random(Shape shape, int n, int n_colors, const Probability& p_blue, std::uint64_t seed) {
  switch (shape) {
    case Shape::Pairs: return random_two_coloring(n, p_blue, seed);
    case Shape::Triples: return random_triple_coloring(n, p_blue, seed);
    case Shape::Labels: return random_labeling(n, n_colors, seed);
  }
  throw std::invalid_argument("unknown shape");
}

}  // namespace ordram
