#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace qcommute {

// Which family is being counted.  Token letters (K/U/N/S) are the
// command-line vocabulary:
//   pairs        (K): all matrices A paired with every compatible B
//   nonsingular  (U): pairs whose A is invertible
//   nilpotent    (N): pairs whose A is nilpotent
//   classes      (S): similarity classes of A fixed by the scaling
enum class CountSet { pairs, nonsingular, nilpotent, classes };

constexpr const char* to_token(CountSet s) {
  switch (s) {
    case CountSet::pairs: return "K";
    case CountSet::nonsingular: return "U";
    case CountSet::nilpotent: return "N";
    case CountSet::classes: return "S";
  }
  return "?";
}

inline std::optional<CountSet> parse_count_set(std::string_view token) {
  if (token == "K") return CountSet::pairs;
  if (token == "U") return CountSet::nonsingular;
  if (token == "N") return CountSet::nilpotent;
  if (token == "S") return CountSet::classes;
  return std::nullopt;
}

}  // namespace qcommute
