#pragma once

#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordram/ordram.hpp"

namespace ordram::cli {

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kParadox = 3 };

/// Thrown for bad flag combinations found after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using Params = std::map<std::string, long long>;

/// "s=3,n=5" (commas or spaces).
inline Params parse_params(const std::string& text) {
  Params out;
  std::string item;
  std::istringstream is(text);
  auto take = [&](const std::string& kv) {
    if (kv.empty()) return;
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameter '" + kv + "' is not key=value");
    try {
      std::size_t used = 0;
      const long long v = std::stoll(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
      out[kv.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw UsageError("parameter '" + kv + "' needs an integer value");
    }
  };
  while (std::getline(is, item, ',')) {
    std::istringstream words(item);
    for (std::string w; words >> w;) take(w);
  }
  return out;
}

struct Numbers {
  std::string params;
  std::map<std::string, long long> flags;

  Params merged() const {
    Params p = parse_params(params);
    for (auto [k, v] : flags)
      if (v != kUnset) p[k] = v;
    return p;
  }

  void attach(CLI::App& app, const std::string& keys) {
    for (char k : keys) {
      const std::string key(1, k);
      flags[key] = kUnset;
      app.add_option("--" + key, flags[key], "parameter " + key);
    }
  }

  static constexpr long long kUnset = std::numeric_limits<long long>::min();
};

inline int need(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw UsageError("missing parameter " + key);
  if (it->second < std::numeric_limits<int>::min() || it->second > std::numeric_limits<int>::max())
    throw UsageError("parameter " + key + " out of range");
  return static_cast<int>(it->second);
}

inline std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return read_file(path);
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") out << text;
  else write_file(path, text);
}

template <class T>
const T& as(const Instance& inst, const char* what) {
  if (const auto* x = std::get_if<T>(&inst)) return *x;
  throw UsageError(std::string("this theorem needs ") + what + " input");
}

inline Notion notion_from(const std::string& s) {
  if (s == "full") return Notion::Full;
  if (s == "middle") return Notion::MiddleChain;
  if (s == "weak") return Notion::WeakOnly;
  throw UsageError("unknown notion '" + s + "'");
}

inline Extraction run_theorem(const std::string& theorem, const Params& p, const Instance& inst,
                                  std::uint64_t seed, const std::string& mode) {
  if (theorem == "es") {
    const auto& c = as<TwoColoring>(inst, "an ORC2");
    return extract_clique_vs_monopath(c, need(p, "s"), need(p, "n"));
  }
  if (theorem == "ramsey") {
    const auto& c = as<TwoColoring>(inst, "an ORC2");
    return ramsey_extract(c, need(p, "s"), need(p, "n"));
  }
  if (theorem == "ck") {
    const auto& l = as<PairLabeling>(inst, "a LAB");
    return chvatal_komlos_extract(l, need(p, "p"), need(p, "q"));
  }
  if (theorem == "chain") {
    const auto& c = as<TwoColoring>(inst, "an ORC2");
    ChainMode m = ChainMode::mono();
    if (mode == "clique") m = ChainMode::red_or_blue_clique_of(need(p, "n"));
    else if (mode != "mono") throw UsageError("chain mode must be mono or clique");
    return clique_chain_extract(c, need(p, "t"), need(p, "m"), m);
  }
  if (theorem == "thm11") {
    const auto& c = as<TwoColoring>(inst, "an ORC2");
    return extract_clique_vs_powerpath(c, need(p, "s"), need(p, "t"), need(p, "n"), seed);
  }
  if (theorem == "thm12") {
    const auto& c = as<TwoColoring>(inst, "an ORC2");
    return extract_pathpower_vs_clique(c, need(p, "t"), need(p, "n"));
  }
  if (theorem == "thm13") {
    const auto& c = as<TwoColoring>(inst, "an ORC2");
    return extract_diagonal_pathpower(c, need(p, "t"), need(p, "n"));
  }
  if (theorem == "blowup") {
    const auto& c = as<TwoColoring>(inst, "an ORC2");
    return extract_blowup_vs_clique(c, need(p, "t"), need(p, "n"));
  }
  if (theorem == "thm14") {
    const auto& c = as<TripleColoring>(inst, "an ORC3");
    return extract_3uniform_clique_vs_tightpath(c, need(p, "s"), need(p, "n"));
  }
  if (theorem == "thm16") {
    const auto& l = as<PairLabeling>(inst, "a LAB");
    return extract_lexicographic_nonincreasing(l, need(p, "s"));
  }
  if (theorem == "hst") {
    const auto& l = as<PairLabeling>(inst, "a LAB");
    return extract_hst(l, need(p, "s"), need(p, "t"));
  }
  if (theorem == "noninc") {
    const auto& l = as<PairLabeling>(inst, "a LAB");
    const auto strategy = mode == "proof" ? NonIncreasingStrategy::ProofRecursion : NonIncreasingStrategy::DirectDFS;
    return extract_non_increasing(l, need(p, "s"), strategy);
  }
  if (theorem == "forest") {
    const auto& f = as<ChiFunctions>(inst, "a CHI");
    return chi_forest_cert(build_chi_forest(f));
  }
  throw UsageError("unknown theorem '" + theorem + "'");
}

inline std::string threshold_text(const std::optional<int>& v, int n_max) {
  return v ? std::to_string(*v) : "Unknown(" + std::to_string(n_max) + ")";
}

}  // namespace detail

/// Runs one command. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered Ramsey numbers of monotone paths: extraction, verification, oracles"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  std::string gen_out;
  std::uint64_t gen_seed = 1;
  int vertices = 0, colors = 2, nmax = 10;
  std::string shape = "pairs", p_blue = "1/2", family = "es", inner_path, g_text, h_text;
  detail::Numbers gen_nums;
  auto* gen_random = gen->add_subcommand("random", "uniform random instance");
  gen_random->add_option("--shape", shape, "pairs, triples or labels")->check(CLI::IsMember({"pairs", "triples", "labels"}));
  gen_random->add_option("-N,--vertices", vertices, "vertex count")->required()->check(CLI::Range(1, 100000));
  gen_random->add_option("--colors", colors, "label count for labels");
  gen_random->add_option("--p-blue", p_blue, "probability of blue, a/b or decimal");
  gen_random->add_option("--seed", gen_seed, "seed");
  gen_random->add_option("--output", gen_out, "output file (stdout if omitted)");
  auto* gen_blocked = gen->add_subcommand("blocked", "blocked lower-bound coloring");
  gen_nums.attach(*gen_blocked, "stn");
  gen_blocked->add_option("--inner", inner_path, "inner ORC2 coloring (found by the oracle if omitted)");
  gen_blocked->add_option("--output", gen_out, "output file");
  auto* gen_extremal = gen->add_subcommand("extremal", "extremal fixture");
  gen_extremal->add_option("--family", family, "es, pentagon or oracle")->check(CLI::IsMember({"es", "pentagon", "oracle"}));
  gen_nums.attach(*gen_extremal, "sn");
  gen_extremal->add_option("--red", g_text, "red pattern for --family oracle");
  gen_extremal->add_option("--blue", h_text, "blue pattern for --family oracle");
  gen_extremal->add_option("--nmax", nmax, "oracle cap");
  gen_extremal->add_option("--output", gen_out, "output file");

  // extract
  auto* extract = app.add_subcommand("extract", "run an extractor and write its certificate");
  std::string theorem, input, output, mode = "mono";
  std::uint64_t seed = 1;
  detail::Numbers nums;
  extract->add_option("--theorem", theorem, "es, ck, chain, thm11, thm12, thm13, thm14, thm16, blowup, ramsey, hst, noninc, forest")
      ->required();
  extract->add_option("--params", nums.params, "parameters as key=value list");
  nums.attach(*extract, "stnmpq");
  extract->add_option("--mode", mode, "chain: mono or clique; noninc: dfs or proof");
  extract->add_option("--input", input, "instance file, - for stdin")->required();
  extract->add_option("--output", output, "certificate file (stdout if omitted)");
  extract->add_option("--seed", seed, "seed for randomized steps");

  // verify
  auto* verify = app.add_subcommand("verify", "check a certificate against an instance");
  std::string cert_path;
  verify->add_option("--input", input, "instance file")->required();
  verify->add_option("--cert", cert_path, "certificate file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact thresholds by exhaustive search");
  std::string target, notion = "full", extremal_out;
  int jobs = 1;
  detail::Numbers onums;
  oracle->add_option("--target", target, "ramsey, g or f")->required()->check(CLI::IsMember({"ramsey", "g", "f"}));
  oracle->add_option("--red", g_text, "red pattern, e.g. clique:3");
  oracle->add_option("--blue", h_text, "blue pattern, e.g. path:4");
  oracle->add_option("--params", onums.params, "parameters as key=value list");
  onums.attach(*oracle, "nst");
  oracle->add_option("--notion", notion, "full, middle or weak")->check(CLI::IsMember({"full", "middle", "weak"}));
  oracle->add_option("--nmax", nmax, "largest N searched")->check(CLI::Range(1, 64));
  oracle->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  oracle->add_option("--extremal", extremal_out, "write the extremal instance here");

  // bound
  auto* bound = app.add_subcommand("bound", "evaluate a threshold formula");
  std::string formula;
  detail::Numbers bnums;
  bound->add_option("--formula", formula, "formula id")->required();
  bound->add_option("--params", bnums.params, "parameters as key=value list");
  bnums.attach(*bound, "stnpq");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen_random->parsed()) {
      const auto inst = generate_random(shape_from_string(shape), vertices, colors, Probability::parse(p_blue), gen_seed);
      detail::emit(gen_out, serialize(inst), out);
      return kOk;
    }
    if (gen_blocked->parsed()) {
      const auto p = gen_nums.merged();
      const int s = detail::need(p, "s"), t = detail::need(p, "t"), n = detail::need(p, "n");
      TwoColoring inner;
      if (!inner_path.empty()) {
        inner = parse_two_coloring(read_file(inner_path));
      } else {
        auto r = exact_ordered_ramsey(PatternSpec::clique(s + 1, Color::Red), PatternSpec::clique(t + 1, Color::Blue), 12);
        if (!r.known() || !r.extremal) throw UsageError("no inner coloring found; pass --inner");
        inner = std::get<TwoColoring>(*r.extremal);
      }
      detail::emit(gen_out, serialize(generate_lower_bound_blocked(s, t, n, inner)), out);
      return kOk;
    }
    if (gen_extremal->parsed()) {
      const auto p = gen_nums.merged();
      if (family == "pentagon") {
        detail::emit(gen_out, serialize(pentagon_coloring()), out);
      } else if (family == "es") {
        detail::emit(gen_out, serialize(generate_es_extremal(detail::need(p, "s"), detail::need(p, "n"))), out);
      } else {
        auto r = exact_ordered_ramsey(PatternSpec::parse(g_text, Color::Red), PatternSpec::parse(h_text, Color::Blue), nmax);
        if (!r.extremal) {
          err << "no avoiding instance\n";
          return kNegative;
        }
        detail::emit(gen_out, serialize(*r.extremal), out);
      }
      return kOk;
    }
    if (extract->parsed()) {
      const Instance inst = parse_instance(detail::read_input(input));
      const auto res = detail::run_theorem(theorem, nums.merged(), inst, seed, mode);
      if (!res) {
        out << "NotFound\n";
        return kNegative;
      }
      if (auto v = verify_certificate(inst, *res); !v) {
        err << "re-verification failed: " << v.clause << " " << ordram::detail::format_list(v.tuple) << "\n";
        return kParadox;
      }
      detail::emit(output, serialize(*res), out);
      return kOk;
    }
    if (verify->parsed()) {
      const Instance inst = parse_instance(detail::read_input(input));
      const Certificate cert = parse_certificate(read_file(cert_path));
      const Verdict v = verify_certificate(inst, cert);
      if (v) {
        out << "Accepted\n";
        return kOk;
      }
      out << "Rejected: " << v.clause << " " << ordram::detail::format_list(v.tuple);
      if (!v.detail.empty()) out << " (" << v.detail << ")";
      out << "\n";
      return kNegative;
    }
    if (oracle->parsed()) {
      const auto p = onums.merged();
      if (target == "ramsey") {
        if (g_text.empty() || h_text.empty()) throw UsageError("--target ramsey needs --red and --blue");
        auto r = exact_ordered_ramsey(PatternSpec::parse(g_text, Color::Red), PatternSpec::parse(h_text, Color::Blue), nmax,
                                      jobs);
        out << detail::threshold_text(r.value, nmax) << "\n";
        if (!extremal_out.empty() && r.extremal) write_file(extremal_out, serialize(*r.extremal));
        return r.known() ? kOk : kNegative;
      }
      LabelThreshold r = target == "g"
                             ? exact_g(detail::need(p, "n"), detail::need(p, "s"), nmax, detail::notion_from(notion), jobs)
                             : exact_f(detail::need(p, "n"), detail::need(p, "s"), detail::need(p, "t"), nmax, jobs);
      out << detail::threshold_text(r.value, nmax) << "\n";
      if (!extremal_out.empty() && r.extremal) write_file(extremal_out, serialize(*r.extremal));
      return r.known() ? kOk : kNegative;
    }
    if (bound->parsed()) {
      BoundRequest req{formula_from_id(formula), {}};
      for (auto [k, v] : bnums.merged()) {
        if (k.size() != 1) throw UsageError("parameter names are single letters");
        req.params[k[0]] = v;
      }
      out << bound_calculator(req) << "\n";
      return kOk;
    }
  } catch (const ParadoxError& e) {
    err << "paradox: " << e.what() << "\n";
    return kParadox;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kNegative;
  } catch (const EnumerationBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kNegative;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ordram::cli
