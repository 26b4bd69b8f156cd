#pragma once

#include <string>
#include <variant>
#include <vector>

namespace dqdotto {

// Column-ordered result table shared by every subcommand. A monostate
// cell is an absent value: empty field in CSV, null in JSON.
struct Table {
  using Cell = std::variant<std::monostate, double, std::string>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Single-result subcommands (cycle, spectrum, optimize) serialize to a
  // lone JSON object instead of a one-element array.
  bool singleton = false;
};

// Shortest round-trip decimal form (std::to_chars); non-finite values
// render as inf/-inf/nan.
std::string format_double(double x);

}  // namespace dqdotto
