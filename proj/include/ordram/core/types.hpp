#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordram {

// Vertices are 1-based everywhere in the public API.
using Vertex = int;
using VertexList = std::vector<Vertex>;

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

/// Triple conditions for non-increasing sets of a pair labeling chi.
/// Full: chi(x,y) >= chi(y,z) and chi(x,z) is one of the two.
/// MiddleChain: chi(x,y) >= chi(x,z) >= chi(y,z).
/// WeakOnly: chi(x,y) >= chi(y,z).
enum class Notion { Full, MiddleChain, WeakOnly };

constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

constexpr char symbol(Color c) { return c == Color::Red ? 'R' : 'B'; }

inline std::string_view to_string(Color c) { return c == Color::Red ? "Red" : "Blue"; }

inline Color color_from_string(std::string_view s) {
  if (s == "Red" || s == "red" || s == "R") return Color::Red;
  if (s == "Blue" || s == "blue" || s == "B") return Color::Blue;
  throw std::invalid_argument("unknown color '" + std::string(s) + "'");
}

/// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a branch that a proof rules out is reached. Always a bug,
/// either in an extractor or in the inference it implements.
class ParadoxError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search refused to run because the instance is above its cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string format_list(const VertexList& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

inline bool strictly_increasing(const VertexList& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

}  // namespace detail
}  // namespace ordram
