#include "output.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace pwcli {

void emit(const Globals& g, nlohmann::json report, const std::function<void(std::ostream&)>& text,
          const std::function<void(std::ostream&)>& csv) {
  std::ofstream file;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) throw std::runtime_error("cannot write " + g.out);
  }
  std::ostream& os = g.out.empty() ? std::cout : file;
  if (g.format == "json" || (g.format == "csv" && !csv)) {
    nlohmann::json j{{"schema", "pw/1"}, {"command_line", g.command_line}, {"seed", g.seed}};
    j.update(report);
    os << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    os << "# " << g.command_line << '\n';
    csv(os);
  } else {
    os << "# " << g.command_line << '\n';
    text(os);
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw UsageError("not a number: '" + item + "'");
  }
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

}  // namespace pwcli
