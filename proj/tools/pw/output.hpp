#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pwcli {

// Thrown for bad flags or inputs; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string cache_dir = "cache";
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string format = "text";
  std::string out;
  std::string command_line;  // echoed into every output
};

/// Writes one report in the selected format to --out or stdout. `csv` may be
/// empty when a command has no tabular form; CSV output then falls back to JSON.
void emit(const Globals& g, nlohmann::json report, const std::function<void(std::ostream&)>& text,
          const std::function<void(std::ostream&)>& csv = {});

std::vector<double> parse_list(const std::string& text);

}  // namespace pwcli
