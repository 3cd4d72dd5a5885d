#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordram/core/types.hpp"

namespace ordram {

/// Target structure searched for in a coloring.
struct PatternSpec {
  enum class Kind { Clique, PathPower, TightPath3, Clique3, Blowup };

  Kind kind = Kind::Clique;
  int n = 1;  // vertex count for cliques and paths, group count for blowups
  int t = 1;  // power for path powers, group size for blowups
  Color color = Color::Red;

  static PatternSpec clique(int s, Color c) { return make(Kind::Clique, s, 1, c); }
  static PatternSpec path_power(int n, int t, Color c) { return make(Kind::PathPower, n, t, c); }
  static PatternSpec tight_path3(int n, Color c) { return make(Kind::TightPath3, n, 1, c); }
  static PatternSpec clique3(int s, Color c) { return make(Kind::Clique3, s, 1, c); }
  static PatternSpec blowup(int n, int t, Color c) { return make(Kind::Blowup, n, t, c); }

  bool uniform3() const { return kind == Kind::TightPath3 || kind == Kind::Clique3; }

  /// Number of vertices the pattern occupies.
  int order() const { return kind == Kind::Blowup ? n * t : n; }

  void validate() const {
    if (n < 1 || t < 1) throw std::invalid_argument("pattern sizes must be >= 1");
    if (kind == Kind::PathPower && n < t) throw std::invalid_argument("path power needs n >= t");
  }

  /// Parses "clique:3", "path:5:2", "tight:4", "clique3:4", "blowup:3:2"
  /// (the power defaults to 1).
  static PatternSpec parse(std::string_view text, Color c) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
      if (ch == ':') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    parts.push_back(cur);
    auto num = [&](std::size_t k, int def) {
      if (parts.size() <= k) return def;
      try {
        std::size_t used = 0;
        const int v = std::stoi(parts[k], &used);
        if (used != parts[k].size()) throw std::invalid_argument("");
        return v;
      } catch (const std::exception&) {
        throw std::invalid_argument("bad pattern '" + std::string(text) + "'");
      }
    };
    const auto& name = parts.front();
    PatternSpec p;
    if (name == "clique") p = clique(num(1, 0), c);
    else if (name == "path") p = path_power(num(1, 0), num(2, 1), c);
    else if (name == "tight") p = tight_path3(num(1, 0), c);
    else if (name == "clique3") p = clique3(num(1, 0), c);
    else if (name == "blowup") p = blowup(num(1, 0), num(2, 1), c);
    else throw std::invalid_argument("unknown pattern '" + std::string(text) + "'");
    p.validate();
    return p;
  }

  std::string describe() const {
    const std::string col(to_string(color));
    switch (kind) {
      case Kind::Clique: return col + " K_" + std::to_string(n);
      case Kind::PathPower:
        return col + " P_" + std::to_string(n) + (t > 1 ? "^" + std::to_string(t) : std::string());
      case Kind::TightPath3: return col + " tight P_" + std::to_string(n) + "^(3)";
      case Kind::Clique3: return col + " K_" + std::to_string(n) + "^(3)";
      case Kind::Blowup: return col + " P_" + std::to_string(n) + "[" + std::to_string(t) + "]";
    }
    return col;
  }

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;

 private:
  static PatternSpec make(Kind k, int n, int t, Color c) {
    PatternSpec p;
    p.kind = k;
    p.n = n;
    p.t = t;
    p.color = c;
    return p;
  }
};

}  // namespace ordram
