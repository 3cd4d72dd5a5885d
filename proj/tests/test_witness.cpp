#include <gtest/gtest.h>

#include "support.hpp"

using namespace ordram;

namespace {

PairLabeling three_labels(int a, int b, int c) {
  // (1,2) -> a, (2,3) -> b, (1,3) -> c
  return PairLabeling::from_function(3, 3, [&](Vertex i, Vertex j) {
    if (i == 1 && j == 2) return a;
    if (i == 2 && j == 3) return b;
    return c;
  });
}

Certificate ni_cert(VertexList vs) {
  Certificate c;
  c.kind = CertKind::NonIncreasingSet;
  c.vertices = std::move(vs);
  return c;
}

TEST(Verify, PathPowerInCompleteBlue) {
  const auto blue = TwoColoring::monochromatic(4, Color::Blue);
  EXPECT_TRUE(verify_certificate(blue, path_power_cert(Color::Blue, {1, 2, 3, 4}, 2)));
  const auto red = TwoColoring::monochromatic(4, Color::Red);
  const auto v = verify_certificate(red, path_power_cert(Color::Blue, {1, 2, 3, 4}, 2));
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "window-edge");
  EXPECT_EQ(v.tuple, (VertexList{1, 2}));
}

TEST(Verify, PathPowerOnlyChecksWindows) {
  // 1-3 red is outside every window of P_3^1 on 1,2,3.
  const auto c = TwoColoring::from_function(3, [](Vertex i, Vertex j) {
    return j - i == 1 ? Color::Blue : Color::Red;
  });
  EXPECT_TRUE(verify_certificate(c, path_power_cert(Color::Blue, {1, 2, 3}, 1)));
  EXPECT_FALSE(verify_certificate(c, path_power_cert(Color::Blue, {1, 2, 3}, 2)));
}

TEST(Verify, OrderAndRange) {
  const auto c = TwoColoring::monochromatic(4, Color::Red);
  EXPECT_EQ(verify_certificate(c, clique_cert(Color::Red, {2, 1})).clause, "order");
  EXPECT_FALSE(verify_certificate(c, clique_cert(Color::Red, {1, 5})));
  EXPECT_TRUE(verify_certificate(c, clique_cert(Color::Red, {1, 3, 4})));
}

TEST(Verify, NonIncreasingSetClauses) {
  EXPECT_TRUE(verify_certificate(three_labels(3, 2, 3), ni_cert({1, 2, 3})));
  const auto third = verify_certificate(three_labels(3, 2, 1), ni_cert({1, 2, 3}));
  EXPECT_FALSE(third);
  EXPECT_EQ(third.clause, "ni-third-edge");
  const auto order = verify_certificate(three_labels(2, 3, 3), ni_cert({1, 2, 3}));
  EXPECT_EQ(order.clause, "ni-order");
}

TEST(Verify, KindMustMatchInstance) {
  const auto l = PairLabeling::constant(3, 1, 1);
  EXPECT_EQ(verify_certificate(l, clique_cert(Color::Red, {1, 2})).clause, "instance");
  const auto c = TwoColoring::monochromatic(3, Color::Red);
  EXPECT_EQ(verify_certificate(c, ni_cert({1, 2, 3})).clause, "instance");
}

// Functions of an 11-node two-level example, listed by position.
ChiFunctions figure_functions() {
  return ChiFunctions(10, {{7, 2, 3, 4, 2, 5, 6, 5, 9, 7, 10}, {2, 2, 1, 3, 1, 5, 4, 3, 7, 6, 4}});
}

OrderedForest figure_forest() {
  return OrderedForest::from_edges(
      {{1, 0}, {2, 1}, {3, 2}, {4, 1}, {5, 4}, {6, 1}, {7, 6}, {8, 6}, {9, 0}, {10, 9}, {11, 10}});
}

TEST(Verify, ChiForestExample) {
  const auto chi = figure_functions();
  EXPECT_TRUE(verify_certificate(chi, chi_forest_cert(figure_forest())));
  const auto last_tree = OrderedForest::from_edges({{9, 0}, {10, 9}, {11, 10}});
  EXPECT_TRUE(verify_certificate(chi, chi_forest_cert(last_tree)));
  EXPECT_TRUE(ordtest::chi_forest_ok(chi, figure_forest()));
}

TEST(Verify, ChiForestRejections) {
  const auto chi = figure_functions();
  // chi_1(5) = 1 < chi_1(7) = 4.
  const auto swapped = OrderedForest::from_edges({{4, 0}, {5, 4}, {7, 5}});
  EXPECT_EQ(verify_certificate(chi, chi_forest_cert(swapped)).clause, "forest-chi");
  const auto unbalanced = OrderedForest::from_edges({{1, 0}, {2, 1}, {3, 2}, {4, 1}});
  EXPECT_EQ(verify_certificate(chi, chi_forest_cert(unbalanced)).clause, "forest-balance");
  // Node 4 (under 2) comes after 3, a later node at the depth of 2.
  const auto crossing = OrderedForest::from_edges({{1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 3}});
  const auto v = verify_certificate(ChiFunctions(10, {{9, 1, 1, 1, 1}, {1, 5, 5, 1, 1}}), chi_forest_cert(crossing));
  EXPECT_EQ(v.clause, "forest-order");
}

TEST(Forest, Structure) {
  const auto f = figure_forest();
  EXPECT_EQ(f.roots(), (VertexList{1, 9}));
  EXPECT_EQ(f.leaves(), (VertexList{3, 5, 7, 8, 11}));
  EXPECT_EQ(f.balanced_depth(), 2);
  EXPECT_EQ(f.head(), (VertexList{1, 2, 3}));
  EXPECT_EQ(f.tail(), (VertexList{9, 10, 11}));
  EXPECT_TRUE(f.is_ancestor(1, 8));
  EXPECT_FALSE(f.is_ancestor(2, 5));
  EXPECT_FALSE(f.well_order_violation());
  EXPECT_THROW(OrderedForest::from_edges({{1, 2}, {2, 1}}), std::invalid_argument);
  EXPECT_THROW(OrderedForest::from_edges({{1, 7}}), std::invalid_argument);
}

TEST(Ktt, CompleteAndEmpty) {
  const auto blue = TwoColoring::monochromatic(8, Color::Blue);
  const auto got = has_blue_ktt(blue, {1, 2, 3}, {5, 6, 7}, 2);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->left, (VertexList{1, 2}));
  EXPECT_EQ(got->right, (VertexList{5, 6}));
  const auto red = TwoColoring::monochromatic(8, Color::Red);
  EXPECT_FALSE(has_blue_ktt(red, {1, 2, 3}, {5, 6, 7}, 2));
}

TEST(Ktt, AgreesWithSubsetPairs) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto c = ordtest::coin(12, seed);
    const VertexList a{1, 2, 3, 4, 5, 6}, b{7, 8, 9, 10, 11, 12};
    for (int t = 1; t <= 3; ++t) {
      const auto got = has_blue_ktt(c, a, b, t);
      EXPECT_EQ(got.has_value(), ordtest::brute_ktt(c, a, b, t)) << seed << " t=" << t;
      if (got) {
        for (Vertex x : got->left)
          for (Vertex y : got->right) EXPECT_EQ(c(x, y), Color::Blue);
      }
    }
  }
}

TEST(CertificateJson, RoundTrip) {
  std::vector<Certificate> certs;
  certs.push_back(clique_cert(Color::Red, {1, 4, 6}, "lambda-class"));
  certs.push_back(path_power_cert(Color::Blue, {1, 2, 5, 7}, 2));
  certs.push_back(chi_forest_cert(figure_forest()));
  Certificate lex;
  lex.kind = CertKind::LexicographicSet;
  lex.vertices = {2, 3, 9};
  lex.params["s"] = 3;
  lex.aux = LexAux{false, {4, 2}, true};
  certs.push_back(lex);
  Certificate chain;
  chain.kind = CertKind::CliqueChain;
  chain.color = Color::Blue;
  chain.params = {{"t", 2}, {"m", 2}};
  chain.vertices = {1, 3, 4};
  chain.aux = ChainAux{{{1, 3}, {3, 4}}};
  certs.push_back(chain);
  RedNet net{1, 3, 1, OrderedForest::from_edges({{1, 0}, {2, 0}}), {{1, {1, 2, 3}}, {2, {4, 5, 6}}}};
  certs.push_back(net.certificate());
  for (const auto& c : certs) {
    const auto back = parse_certificate(serialize(c));
    EXPECT_EQ(back, c) << serialize(c);
  }
  EXPECT_THROW(parse_certificate("{\"kind\": \"Nope\"}"), ParseError);
  EXPECT_THROW(parse_certificate("not json"), ParseError);
}

TEST(Verify, TamperedChainRejected) {
  const auto c = TwoColoring::monochromatic(5, Color::Blue);
  Certificate chain;
  chain.kind = CertKind::CliqueChain;
  chain.color = Color::Blue;
  chain.params = {{"t", 2}, {"m", 2}};
  chain.vertices = {1, 2, 3, 4};
  chain.aux = ChainAux{{{1, 2}, {3, 4}}};
  EXPECT_EQ(verify_certificate(c, chain).clause, "chain-link");
}

}  // namespace
