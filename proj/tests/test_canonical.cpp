#include <gtest/gtest.h>

#include "support.hpp"

using namespace ordram;

namespace {

bool weakly_lex(const PairLabeling& l, const VertexList& xs) {
  if (xs.size() <= 2) return true;
  const VertexList tail(xs.begin() + 1, xs.end()), head(xs.begin(), xs.end() - 1);
  bool first = true, last = true;
  for (std::size_t j = 2; j < xs.size(); ++j) first = first && l(xs[0], xs[j]) == l(xs[0], xs[1]);
  for (std::size_t j = 1; j + 1 < xs.size(); ++j) last = last && l(xs[j], xs.back()) == l(xs[0], xs.back());
  return (first && weakly_lex(l, tail)) || (last && weakly_lex(l, head));
}

TEST(TightPath, CompleteColors) {
  const auto blue = tightpath_reduction(TripleColoring::monochromatic(6, Color::Blue));
  const auto red = tightpath_reduction(TripleColoring::monochromatic(6, Color::Red));
  for (Vertex y = 2; y <= 6; ++y)
    for (Vertex x = 1; x < y; ++x) {
      EXPECT_EQ(blue(x, y), x + 1);
      EXPECT_EQ(red(x, y), 2);
    }
}

TEST(TightPath, MatchesSubsetScan) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto c = random_triple_coloring(9, Probability::parse("1/2"), seed);
    const TightPathTable tab(c);
    const auto expect = ordtest::brute_tight(c);
    for (Vertex y = 2; y <= 9; ++y)
      for (Vertex x = 1; x < y; ++x) {
        ASSERT_EQ(tab(x, y), expect[x][y]) << seed << " (" << x << "," << y << ")";
        const auto path = tab.trace(x, y);
        EXPECT_EQ(static_cast<int>(path.size()), tab(x, y));
        for (std::size_t i = 0; i + 2 < path.size(); ++i) EXPECT_EQ(c(path[i], path[i + 1], path[i + 2]), Color::Blue);
      }
  }
}

TEST(NonIncreasing, TripleNotions) {
  const auto l = PairLabeling::from_function(3, 3, [](Vertex i, Vertex j) { return i == 1 && j == 3 ? 1 : 3 - (i - 1); });
  // chi(1,2) = 3, chi(2,3) = 2, chi(1,3) = 1.
  EXPECT_FALSE(nonincreasing_triple(l, 1, 2, 3, Notion::Full));
  EXPECT_TRUE(nonincreasing_triple(l, 1, 2, 3, Notion::WeakOnly));
}

TEST(NonIncreasing, FindMatchesSubsetScan) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto l = random_labeling(10, 3, seed);
    for (int k = 3; k <= 5; ++k) {
      std::optional<VertexList> expect;
      std::vector<VertexList> all;
      for (std::uint32_t m = 1; m < (1u << 10); ++m)
        if (__builtin_popcount(m) == k) all.push_back(ordtest::mask_vertices(m));
      std::sort(all.begin(), all.end());
      for (const auto& vs : all)
        if (detail::check_nonincreasing(l, vs)) {
          expect = vs;
          break;
        }
      EXPECT_EQ(find_nonincreasing(l, k), expect) << seed << " k=" << k;
    }
  }
}

TEST(NonIncreasing, BudgetIsEnforced) {
  const auto l = random_labeling(40, 4, 3);
  EXPECT_THROW(find_nonincreasing(l, 30, Notion::Full, 10), EnumerationBudgetExceeded);
}

TEST(Hst, ConstantLabeling) {
  const auto l = PairLabeling::constant(8, 2, 1);
  for (int s = 2; s <= 4; ++s)
    for (int t = 1; t <= 3; ++t) {
      const auto got = extract_hst(l, s, t);
      ASSERT_TRUE(got);
      EXPECT_EQ(got->vertices.size(), static_cast<std::size_t>(s + t - 1));
      EXPECT_TRUE(verify_certificate(l, *got));
    }
}

TEST(Hst, RecursionAgreesWithDirectSearch) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto l = random_labeling(12, 2, seed);
    for (int s = 2; s <= 4; ++s)
      for (int t = 1; t <= 3; ++t) {
        const auto a = extract_hst(l, s, t);
        const auto b = detail::hst_direct(l, s, t);
        ASSERT_EQ(a.has_value(), b.has_value()) << seed << " s=" << s << " t=" << t;
        if (a) EXPECT_TRUE(verify_certificate(l, *a));
      }
  }
}

TEST(Hst, AtExactThreshold) {
  const auto f = exact_f(2, 3, 1, 10);
  ASSERT_TRUE(f.value);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto l = random_labeling(*f.value, 2, seed);
    const auto got = extract_hst(l, 3, 1);
    ASSERT_TRUE(got) << seed;
    EXPECT_TRUE(verify_certificate(l, *got));
  }
}

TEST(NonIncreasing, SingleColorAndPairs) {
  for (auto strategy : {NonIncreasingStrategy::ProofRecursion, NonIncreasingStrategy::DirectDFS}) {
    const auto one = extract_non_increasing(PairLabeling::constant(4, 1, 1), 4, strategy);
    ASSERT_TRUE(one);
    EXPECT_EQ(one->vertices, (VertexList{1, 2, 3, 4}));
    const auto pair = extract_non_increasing(random_labeling(2, 3, 5), 2, strategy);
    ASSERT_TRUE(pair);
    EXPECT_EQ(pair->vertices, (VertexList{1, 2}));
  }
}

TEST(NonIncreasing, StrategiesAtExactThreshold) {
  const auto g = exact_g(2, 3, 10);
  ASSERT_TRUE(g.value);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto l = random_labeling(*g.value, 2, seed);
    const auto a = extract_non_increasing(l, 3, NonIncreasingStrategy::ProofRecursion);
    const auto b = extract_non_increasing(l, 3, NonIncreasingStrategy::DirectDFS);
    ASSERT_TRUE(a && b) << seed;
    EXPECT_TRUE(verify_certificate(l, *a));
    EXPECT_TRUE(verify_certificate(l, *b));
  }
  ASSERT_TRUE(g.extremal);
  EXPECT_FALSE(extract_non_increasing(*g.extremal, 3, NonIncreasingStrategy::ProofRecursion));
  EXPECT_FALSE(extract_non_increasing(*g.extremal, 3, NonIncreasingStrategy::DirectDFS));
}

TEST(ThreeUniform, Trivial) {
  const auto red = extract_3uniform_clique_vs_tightpath(TripleColoring::monochromatic(3, Color::Red), 3, 4);
  ASSERT_TRUE(red);
  EXPECT_EQ(red->kind, CertKind::MonoClique3);
  const auto blue = extract_3uniform_clique_vs_tightpath(TripleColoring::monochromatic(4, Color::Blue), 3, 4);
  ASSERT_TRUE(blue);
  EXPECT_EQ(blue->kind, CertKind::MonoTightPath3);
  EXPECT_EQ(blue->vertices, (VertexList{1, 2, 3, 4}));
}

TEST(ThreeUniform, RandomTwenty) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto c = random_triple_coloring(20, Probability::parse("1/2"), seed);
    const auto got = extract_3uniform_clique_vs_tightpath(c, 3, 4);
    ASSERT_TRUE(got) << seed;
    EXPECT_TRUE(verify_certificate(c, *got));
  }
}

TEST(ThreeUniform, NotFoundOnlyWithoutWitness) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto c = random_triple_coloring(7, Probability::parse("1/2"), seed);
    const auto got = extract_3uniform_clique_vs_tightpath(c, 4, 4);
    if (got) {
      EXPECT_TRUE(verify_certificate(c, *got));
    } else {
      EXPECT_FALSE(brute_force_witness(c, PatternSpec::clique3(4, Color::Red)));
      EXPECT_FALSE(brute_force_witness(c, PatternSpec::tight_path3(4, Color::Blue)));
    }
  }
}

TEST(WeakLex, ConstantLabeling) {
  const auto l = PairLabeling::constant(16, 1, 1);
  const auto w = weakly_lex_decompose(l, ordtest::iota_list(1, 16), 5);
  EXPECT_EQ(w.vertices.size(), 5u);
  for (const auto& st : w.steps) EXPECT_EQ(st.item, 1);
  EXPECT_TRUE(weakly_lex(l, w.vertices));
}

TEST(WeakLex, PairsAreTrivial) {
  const auto l = random_labeling(4, 3, 2);
  const auto w = weakly_lex_decompose(l, {2, 4}, 2);
  EXPECT_EQ(w.vertices, (VertexList{2, 4}));
  EXPECT_TRUE(w.steps.empty());
}

TEST(WeakLex, RandomNonIncreasingSets) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 300 && checked < 50; ++seed) {
    const auto l = random_labeling(40, 2, seed);
    const auto ni = find_nonincreasing(l, 8);
    if (!ni) continue;
    ++checked;
    const auto w = weakly_lex_decompose(l, *ni, 4);
    EXPECT_EQ(w.vertices.size(), 4u);
    EXPECT_TRUE(std::includes(ni->begin(), ni->end(), w.vertices.begin(), w.vertices.end()));
    EXPECT_TRUE(weakly_lex(l, w.vertices)) << seed;
  }
  EXPECT_GT(checked, 10);
}

TEST(WeakLex, RejectsBadInput) {
  const auto l = PairLabeling::from_function(4, 3, [](Vertex i, Vertex j) { return i == 1 && j == 3 ? 1 : 3; });
  EXPECT_THROW(weakly_lex_decompose(l, {1, 2, 3, 4}, 3), std::invalid_argument);
  EXPECT_THROW(weakly_lex_decompose(l, {1, 2}, 3), std::invalid_argument);
}

TEST(Lex, ConstantAndPairs) {
  const auto l = PairLabeling::constant(4, 2, 2);
  const auto got = extract_lexicographic_nonincreasing(l, 4);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->vertices, (VertexList{1, 2, 3, 4}));
  EXPECT_EQ(std::get<LexAux>(got->aux).colors, (std::vector<int>{2, 2, 2}));
  const auto pair = extract_lexicographic_nonincreasing(random_labeling(5, 3, 9), 2);
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->vertices.size(), 2u);
}

TEST(Lex, RandomSixtyFour) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto l = random_labeling(64, 2, seed);
    const auto got = extract_lexicographic_nonincreasing(l, 3);
    ASSERT_TRUE(got) << seed;
    EXPECT_TRUE(verify_certificate(l, *got));
    const auto& aux = std::get<LexAux>(got->aux);
    EXPECT_TRUE(aux.nonincreasing_colors);
    EXPECT_GE(aux.colors[0], aux.colors[1]);
  }
}

TEST(Lex, ForwardOrBackwardSizes) {
  const auto l = PairLabeling::constant(16, 1, 1);
  const auto w = weakly_lex_decompose(l, ordtest::iota_list(1, 16), 5);
  const auto r = forward_or_backward(l, w, 3, 4);
  EXPECT_EQ(r.vertices.size(), r.forward ? 3u : 4u);
}

}  // namespace
