#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ordram/core/coloring.hpp"

// Line-oriented text formats, 1-based vertices.
//
//   ORC2 N        then N-1 rows; row i holds R/B for pairs (i, i+1..N)
//   ORC3 N        then one R/B string over triples i<j<k in lexicographic
//                 order, wrapped at 80 symbols per line
//   LAB N n       then N-1 rows of space-separated labels in 1..n
//   CHI M n q     then q rows of M values in 1..n (function families)

namespace ordram {

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_int(std::string_view tok, std::string_view what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("expected integer for " + std::string(what) + ", got '" + std::string(tok) + "'");
  return v;
}

inline Color parse_symbol(char c) {
  if (c == 'R') return Color::Red;
  if (c == 'B') return Color::Blue;
  throw ParseError(std::string("invalid color symbol '") + c + "'");
}

}  // namespace detail

inline std::string serialize(const TwoColoring& c) {
  std::string out = "ORC2 " + std::to_string(c.size()) + "\n";
  for (int i = 1; i < c.size(); ++i) {
    for (int j = i + 1; j <= c.size(); ++j) out.push_back(symbol(c(i, j)));
    out.push_back('\n');
  }
  return out;
}

inline std::string serialize(const TripleColoring& c) {
  std::string out = "ORC3 " + std::to_string(c.size()) + "\n";
  int col = 0;
  const int n = c.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        out.push_back(symbol(c(i, j, k)));
        if (++col == 80) {
          out.push_back('\n');
          col = 0;
        }
      }
  if (col) out.push_back('\n');
  return out;
}

inline std::string serialize(const PairLabeling& l) {
  std::string out = "LAB " + std::to_string(l.size()) + " " + std::to_string(l.colors()) + "\n";
  for (int i = 1; i < l.size(); ++i) {
    for (int j = i + 1; j <= l.size(); ++j) {
      if (j > i + 1) out.push_back(' ');
      out += std::to_string(l(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

inline std::string serialize(const ChiFunctions& f) {
  std::string out = "CHI " + std::to_string(f.domain()) + " " + std::to_string(f.range()) + " " +
                    std::to_string(f.q()) + "\n";
  for (const auto& row : f.values()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(row[i]);
    }
    out.push_back('\n');
  }
  return out;
}

inline std::string serialize(const Instance& inst) {
  return std::visit([](const auto& x) { return serialize(x); }, inst);
}

namespace detail {

inline TwoColoring parse_orc2(int n, const std::vector<std::string>& lines) {
  if (static_cast<int>(lines.size()) != std::max(0, n - 1))
    throw ParseError("ORC2 " + std::to_string(n) + " expects " + std::to_string(std::max(0, n - 1)) +
                     " rows, got " + std::to_string(lines.size()));
  for (int i = 1; i < n; ++i) {
    const auto& row = lines[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n - i)
      throw ParseError("ORC2 row " + std::to_string(i) + " expects " + std::to_string(n - i) + " symbols, got " +
                       std::to_string(row.size()));
    for (char ch : row) (void)parse_symbol(ch);
  }
  return TwoColoring::from_function(n, [&](Vertex i, Vertex j) {
    return parse_symbol(lines[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - i - 1)]);
  });
}

inline TripleColoring parse_orc3(int n, const std::vector<std::string>& lines) {
  std::string symbols;
  for (const auto& l : lines) symbols += l;
  const long long expected = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
  if (static_cast<long long>(symbols.size()) != expected)
    throw ParseError("ORC3 " + std::to_string(n) + " expects " + std::to_string(expected) + " symbols, got " +
                     std::to_string(symbols.size()));
  for (char ch : symbols) (void)parse_symbol(ch);
  std::size_t pos = 0;
  return TripleColoring::from_function(n, [&](Vertex, Vertex, Vertex) { return parse_symbol(symbols[pos++]); });
}

inline PairLabeling parse_lab(int n, int colors, const std::vector<std::string>& lines) {
  if (colors < 1) throw ParseError("LAB needs n >= 1");
  if (static_cast<int>(lines.size()) != std::max(0, n - 1))
    throw ParseError("LAB " + std::to_string(n) + " expects " + std::to_string(std::max(0, n - 1)) + " rows, got " +
                     std::to_string(lines.size()));
  std::vector<std::vector<int>> rows;
  for (int i = 1; i < n; ++i) {
    auto toks = split_ws(lines[static_cast<std::size_t>(i - 1)]);
    if (static_cast<int>(toks.size()) != n - i)
      throw ParseError("LAB row " + std::to_string(i) + " expects " + std::to_string(n - i) + " labels, got " +
                       std::to_string(toks.size()));
    std::vector<int> row;
    for (auto t : toks) {
      const long long v = parse_int(t, "label");
      if (v < 1 || v > colors) throw ParseError("label " + std::string(t) + " outside [1," + std::to_string(colors) + "]");
      row.push_back(static_cast<int>(v));
    }
    rows.push_back(std::move(row));
  }
  return PairLabeling::from_function(n, colors, [&](Vertex i, Vertex j) {
    return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - i - 1)];
  });
}

inline ChiFunctions parse_chi(int m, int n, int q, const std::vector<std::string>& lines) {
  if (static_cast<int>(lines.size()) != q)
    throw ParseError("CHI expects " + std::to_string(q) + " rows, got " + std::to_string(lines.size()));
  std::vector<std::vector<int>> values;
  for (const auto& line : lines) {
    auto toks = split_ws(line);
    if (static_cast<int>(toks.size()) != m)
      throw ParseError("CHI row expects " + std::to_string(m) + " values, got " + std::to_string(toks.size()));
    std::vector<int> row;
    for (auto t : toks) {
      const long long v = parse_int(t, "function value");
      if (v < 1 || v > n) throw ParseError("function value " + std::string(t) + " outside [1," + std::to_string(n) + "]");
      row.push_back(static_cast<int>(v));
    }
    values.push_back(std::move(row));
  }
  return ChiFunctions(n, std::move(values));
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  auto lines = detail::split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty input");
  const auto header = detail::split_ws(lines.front());
  std::vector<std::string> body(lines.begin() + 1, lines.end());
  if (header.empty()) throw ParseError("malformed header");
  auto arg = [&](std::size_t k, std::string_view what, long long lo) {
    if (header.size() <= k) throw ParseError("malformed header: missing " + std::string(what));
    const long long v = detail::parse_int(header[k], what);
    if (v < lo) throw ParseError("malformed header: " + std::string(what) + " out of range");
    if (v > 1000000) throw ParseError("malformed header: " + std::string(what) + " too large");
    return static_cast<int>(v);
  };
  const auto tag = header.front();
  if (tag == "ORC2") {
    if (header.size() != 2) throw ParseError("malformed header: ORC2 takes one field");
    return detail::parse_orc2(arg(1, "N", 1), body);
  }
  if (tag == "ORC3") {
    if (header.size() != 2) throw ParseError("malformed header: ORC3 takes one field");
    return detail::parse_orc3(arg(1, "N", 1), body);
  }
  if (tag == "LAB") {
    if (header.size() != 3) throw ParseError("malformed header: LAB takes two fields");
    return detail::parse_lab(arg(1, "N", 1), arg(2, "n", 1), body);
  }
  if (tag == "CHI") {
    if (header.size() != 4) throw ParseError("malformed header: CHI takes three fields");
    return detail::parse_chi(arg(1, "M", 0), arg(2, "n", 1), arg(3, "q", 0), body);
  }
  throw ParseError("malformed header: unknown tag '" + std::string(tag) + "'");
}

template <class T>
T parse_as(std::string_view text) {
  auto inst = parse_instance(text);
  if (auto* p = std::get_if<T>(&inst)) return std::move(*p);
  throw ParseError("input holds a different instance type");
}

inline TwoColoring parse_two_coloring(std::string_view text) { return parse_as<TwoColoring>(text); }
inline TripleColoring parse_triple_coloring(std::string_view text) { return parse_as<TripleColoring>(text); }
inline PairLabeling parse_labeling(std::string_view text) { return parse_as<PairLabeling>(text); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace ordram
