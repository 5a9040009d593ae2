// Runs every acceptance criterion and prints one line per criterion.
// Exit status is 0 only when all of them pass.

#include <cstdlib>
#include <iostream>

#include "pw/verification.hpp"

int main(int argc, char** argv) {
  pw::VerifyOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  for (const auto& c : pw::acceptance_criteria()) {
    const auto r = pw::run_criterion(c, options);
    std::cout << pw::format_result_line(r) << '\n';
    for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
    failed += !r.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " of " : "all ") << pw::acceptance_criteria().size()
            << " criteria " << (failed ? "failed" : "passed") << '\n';
  return failed ? 1 : 0;
}
