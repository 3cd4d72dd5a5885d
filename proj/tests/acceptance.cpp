// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace ordram;

namespace {

using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kOracleSmallSeconds = 120.0;
constexpr double kOracleTightSeconds = 1800.0;
constexpr double kBlockedSeconds = 60.0;
constexpr std::uint64_t kSoundSeeds = 10'000;
constexpr std::uint64_t kDpSeeds = 1'000;
constexpr int kForestTrials = 10'000;
constexpr std::uint64_t kNetTrials = 1'000;
constexpr std::uint64_t kLexTrials = 1'000;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class Inst>
void check_cert(Outcome& o, const Inst& inst, const Extraction& got, const std::string& what) {
  if (!got) return;
  if (auto v = verify_certificate(inst, *got); !v) o.fail(what + " rejected: " + v.to_string());
}

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  for (int n : {3, 4}) {
    const auto r = exact_ordered_ramsey(PatternSpec::clique(3, Color::Red), PatternSpec::path_power(n, 1, Color::Blue), 12);
    if (r.value != 2 * n - 1) o.fail("K3 vs P" + std::to_string(n) + " gave " + (r.value ? std::to_string(*r.value) : "Unknown"));
  }
  const double secs = seconds_since(start);
  if (secs > kOracleSmallSeconds) o.fail("took " + std::to_string(secs) + "s");
  o.note << (o.pass ? "K3 vs P3 = 5, K3 vs P4 = 7" : "") << " in " << secs << "s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = Clock::now();
  const auto g = PatternSpec::tight_path3(4, Color::Red), h = PatternSpec::tight_path3(4, Color::Blue);
  const auto r = exact_ordered_ramsey(g, h, 8);
  if (r.value != 7) o.fail("value " + (r.value ? std::to_string(*r.value) : "Unknown"));
  if (!r.extremal) {
    o.fail("no extremal coloring");
  } else {
    const auto& ext = std::get<TripleColoring>(*r.extremal);
    if (ext.size() != 6) o.fail("extremal on " + std::to_string(ext.size()) + " vertices");
    if (brute_force_witness(*r.extremal, g) || brute_force_witness(*r.extremal, h)) o.fail("extremal holds a witness");
  }
  const double secs = seconds_since(start);
  if (secs > kOracleTightSeconds) o.fail("took " + std::to_string(secs) + "s");
  o.note << (o.pass ? "value 7, extremal on 6 vertices" : "") << " in " << secs << "s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  struct Case {
    int s, t, n;
    TwoColoring inner;
  };
  const std::vector<Case> cases{{2, 1, 4, TwoColoring::monochromatic(2, Color::Red)},
                                {2, 2, 5, pentagon_coloring()},
                                {3, 1, 4, TwoColoring::monochromatic(3, Color::Red)}};
  double worst = 0;
  for (const auto& k : cases) {
    const auto start = Clock::now();
    const auto c = generate_lower_bound_blocked(k.s, k.t, k.n, k.inner);
    const std::string tag = "(" + std::to_string(k.s) + "," + std::to_string(k.t) + "," + std::to_string(k.n) + ")";
    if (brute_force_witness(c, PatternSpec::clique(k.s + 1, Color::Red))) o.fail(tag + " has red clique");
    if (brute_force_witness(c, PatternSpec::path_power(k.n, k.t, Color::Blue))) o.fail(tag + " has blue path power");
    const double secs = seconds_since(start);
    worst = std::max(worst, secs);
    if (secs > kBlockedSeconds) o.fail(tag + " took " + std::to_string(secs) + "s");
  }
  o.note << (o.pass ? "3 constructions witness-free" : "") << ", slowest " << worst << "s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  long long found = 0, paradox = 0;
  auto run = [&](const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const ParadoxError& e) {
      ++paradox;
      o.fail(what + " paradox: " + e.what());
    }
  };
  for (std::uint64_t seed = 1; seed <= kSoundSeeds; ++seed) {
    const auto c = ordtest::coin(12, seed);
    const auto w = ordtest::coin(14, seed, "0.7");
    const auto l = random_labeling(10, 2, seed);
    const auto c3 = random_triple_coloring(9, Probability::parse("1/2"), seed);
    const std::string s = " seed " + std::to_string(seed);
    auto two = [&](const TwoColoring& inst, const std::string& name, const std::function<Extraction()>& f) {
      run(name + s, [&] {
        const auto got = f();
        found += got.has_value();
        check_cert(o, inst, got, name + s);
      });
    };
    two(c, "monopath", [&] { return extract_clique_vs_monopath(c, 3, 5); });
    two(c, "ramsey", [&] { return ramsey_extract(c, 3, 4); });
    two(c, "chain", [&] { return clique_chain_extract(c, 2, 3, ChainMode::mono()); });
    two(w, "pathpower", [&] { return extract_pathpower_vs_clique(w, 2, 4); });
    two(w, "diagonal", [&] { return extract_diagonal_pathpower(w, 2, 4); });
    two(w, "blowup", [&] { return extract_blowup_vs_clique(w, 2, 3); });
    two(c, "powerpath", [&] { return extract_clique_vs_powerpath(c, 2, 2, 5, seed); });
    auto lab = [&](const std::string& name, const std::function<Extraction()>& f) {
      run(name + s, [&] {
        const auto got = f();
        found += got.has_value();
        check_cert(o, l, got, name + s);
      });
    };
    lab("ck", [&] { return chvatal_komlos_extract(l, 3, 3); });
    lab("hst", [&] { return extract_hst(l, 3, 2); });
    lab("noninc-proof", [&] { return extract_non_increasing(l, 3, NonIncreasingStrategy::ProofRecursion); });
    lab("noninc-dfs", [&] { return extract_non_increasing(l, 3, NonIncreasingStrategy::DirectDFS); });
    lab("lex", [&] { return extract_lexicographic_nonincreasing(l, 3); });
    run("tightpath3" + s, [&] {
      const auto got = extract_3uniform_clique_vs_tightpath(c3, 3, 4);
      found += got.has_value();
      check_cert(o, c3, got, "tightpath3" + s);
    });
  }
  o.note << (o.pass ? "" : "; ") << found << " certificates verified, " << paradox << " paradoxes";
  return o;
}

Outcome criterion5() {
  Outcome o;
  int es_total = 0;
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> blue;
    int bit = 0;
    for (Vertex i = 1; i <= 5; ++i)
      for (Vertex j = i + 1; j <= 5; ++j, ++bit)
        if (mask >> bit & 1u) blue.emplace_back(i, j);
    const auto c = TwoColoring::from_blue_pairs(5, blue);
    const auto got = extract_clique_vs_monopath(c, 3, 3);
    if (!got || !verify_certificate(c, *got)) o.fail("ES (3,3) missed mask " + std::to_string(mask));
    ++es_total;
  }
  for (std::uint64_t seed = 1; seed <= kSoundSeeds; ++seed) {
    const auto c = ordtest::coin(28, seed);
    const auto got = extract_clique_vs_monopath(c, 4, 10);
    if (!got || !verify_certificate(c, *got)) o.fail("ES (4,10) missed seed " + std::to_string(seed));
  }
  for (int n : {5, 10})
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const auto c = ordtest::coin(24 * n, seed, "0.9");
      const auto got = extract_clique_vs_powerpath(c, 1, 1, n, seed);
      if (!got || !verify_certificate(c, *got)) o.fail("powerpath n=" + std::to_string(n) + " missed seed " + std::to_string(seed));
    }
  for (int s = 2; s <= 5; ++s)
    for (int n = 2; n <= 5; ++n) {
      const auto big = bound_calculator(BoundRequest{Formula::RamseyGreedy, {{'s', s}, {'n', n}}});
      const int size = static_cast<int>(big);
      for (std::uint64_t seed = 1; seed <= kSoundSeeds; ++seed) {
        const auto c = ordtest::coin(size, seed);
        const auto got = ramsey_extract(c, s, n);
        if (!got || !verify_certificate(c, *got))
          o.fail("ramsey (" + std::to_string(s) + "," + std::to_string(n) + ") missed seed " + std::to_string(seed));
      }
    }
  o.note << (o.pass ? "" : "; ") << es_total << " exhaustive ES colorings plus sampled runs";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= kDpSeeds; ++seed) {
    const auto c = ordtest::coin(10, seed);
    for (int t = 1; t <= 3; ++t)
      for (auto col : {Color::Red, Color::Blue}) {
        const WindowChi w(c, t, col);
        const auto expect = ordtest::brute_window_chi(c, t, col);
        if (w.entries().size() != expect.size()) o.fail("window count at seed " + std::to_string(seed));
        for (const auto& e : w.entries())
          if (!expect.count(e.window) || expect.at(e.window) != e.chi) o.fail("window value at seed " + std::to_string(seed));
      }
    for (int t = 2; t <= 3; ++t) {
      const auto expect = ordtest::brute_chain(c, Color::Red, t);
      const auto got = chain_values(c, Color::Red, t);
      for (Vertex v = 1; v <= 10; ++v)
        if (got[static_cast<std::size_t>(v)] != expect[static_cast<std::size_t>(v)]) o.fail("chain at seed " + std::to_string(seed));
    }
    const auto c3 = random_triple_coloring(9, Probability::parse("1/2"), seed);
    const TightPathTable tab(c3);
    const auto expect = ordtest::brute_tight(c3);
    for (Vertex y = 2; y <= 9; ++y)
      for (Vertex x = 1; x < y; ++x)
        if (tab(x, y) != expect[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])
          o.fail("tight path at seed " + std::to_string(seed));
  }
  o.note << (o.pass ? "window, chain and tight path tables match subset scans" : "");
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(2024);
  for (int trial = 0; trial < kForestTrials; ++trial) {
    const int q = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(200));
    const int n = 1 + static_cast<int>(rng.below(20));
    std::vector<std::vector<int>> values(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(m)));
    for (auto& row : values)
      for (int& v : row) v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const ChiFunctions chi(n, values);
    try {
      const auto f = build_chi_forest(chi);
      if (auto v = verify_certificate(chi, chi_forest_cert(f)); !v) o.fail("trial " + std::to_string(trial) + ": " + v.to_string());
      if (m <= 60 && !ordtest::chi_forest_ok(chi, f)) o.fail("trial " + std::to_string(trial) + " fails direct check");
      const double bound = static_cast<double>(m) / (1 << (q - 1)) - n;
      if (static_cast<double>(f.leaves().size()) < bound) o.fail("trial " + std::to_string(trial) + " below leaf bound");
    } catch (const ParadoxError& e) {
      o.fail("trial " + std::to_string(trial) + " paradox: " + e.what());
    }
  }
  o.note << (o.pass ? std::to_string(kForestTrials) + " forests valid with enough leaves" : "");
  return o;
}

Outcome criterion8() {
  Outcome o;
  int families = 0, bundles = 0;
  for (std::uint64_t seed = 1; seed <= kNetTrials; ++seed) {
    const int s = 1 + static_cast<int>(seed % 2), t = 1 + static_cast<int>(seed / 2 % 2);
    const int r = seed % 5 == 0 ? 48 : 12;
    const auto fx = ordtest::random_net(seed, s, t, r, Probability::parse(seed % 3 ? "1/2" : "0.9"));
    try {
      const auto res = resolve_red_net(fx.coloring, fx.net);
      if (auto v = check_resolution(fx.coloring, fx.net, res); !v) o.fail("seed " + std::to_string(seed) + ": " + v.to_string());
      if (const auto p = ordtest::resolution_problem(fx.coloring, fx.net, res); !p.empty())
        o.fail("seed " + std::to_string(seed) + ": " + p);
      (res.is_family() ? families : bundles)++;
    } catch (const ParadoxError& e) {
      o.fail("seed " + std::to_string(seed) + " paradox: " + e.what());
    }
  }
  o.note << (o.pass ? "" : "; ") << families << " families, " << bundles << " bundles";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::map<std::string, int> routes;
  for (std::uint64_t seed = 1; seed <= kLexTrials; ++seed) {
    const auto l = random_labeling(64, 2, seed);
    const auto got = extract_lexicographic_nonincreasing(l, 3);
    if (!got) o.fail("lex missed seed " + std::to_string(seed));
    else check_cert(o, l, got, "lex seed " + std::to_string(seed));
    if (got) ++routes[got->route];
  }
  const auto g = exact_g(2, 3, 10);
  if (g.value != 5) o.fail("threshold is not 5");
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    int bit = 0;
    std::vector<std::vector<int>> lab(6, std::vector<int>(6, 0));
    for (Vertex i = 1; i <= 5; ++i)
      for (Vertex j = i + 1; j <= 5; ++j, ++bit) lab[i][j] = 1 + static_cast<int>(mask >> bit & 1u);
    const auto l = PairLabeling::from_function(5, 2, [&](Vertex i, Vertex j) { return lab[i][j]; });
    for (auto strategy : {NonIncreasingStrategy::ProofRecursion, NonIncreasingStrategy::DirectDFS}) {
      const auto got = extract_non_increasing(l, 3, strategy);
      if (!got) o.fail("labeling " + std::to_string(mask) + " missed");
      else check_cert(o, l, got, "labeling " + std::to_string(mask));
    }
  }
  if (!g.extremal) {
    o.fail("no extremal labeling");
  } else {
    for (auto strategy : {NonIncreasingStrategy::ProofRecursion, NonIncreasingStrategy::DirectDFS})
      if (extract_non_increasing(*g.extremal, 3, strategy)) o.fail("extremal labeling yields a set");
  }
  o.note << (o.pass ? "lex on N=64, all 1024 labelings at N=5, extremal at N=4 NotFound" : "") << "; lex routes";
  for (const auto& [route, count] : routes) o.note << " " << route << "=" << count;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                      criterion6, criterion7, criterion8, criterion9};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "Criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.note.str() << "; "
              << seconds_since(start) << "s)" << std::endl;
  }
  return all ? 0 : 1;
}
