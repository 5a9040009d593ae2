#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pw {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string summary;
  std::vector<std::string> details;
  std::vector<std::string> failures;
  nlohmann::json data = nlohmann::json::object();
};

struct VerifyOptions {
  std::uint64_t seed = 0;
};

struct Criterion {
  int id = 0;
  std::string name;
  double budget_seconds = 0.0;
  std::function<CriterionResult(const VerifyOptions&)> run;
};

/// The thirteen acceptance criteria in order.
const std::vector<Criterion>& acceptance_criteria();

/// Criterion ids for a suite name: all, characters, schur-weyl, tripartite,
/// semisep, families, table1, polytope, immanants, decomposable, werner,
/// epsilon, sampling, seven-qubit. Throws std::invalid_argument otherwise.
std::vector<int> suite_criteria(const std::string& suite);

/// Runs one criterion, timing it; exceeding the budget is a failure.
CriterionResult run_criterion(const Criterion& c, const VerifyOptions& options);

/// "criterion  4 semisep-closed-form ........ PASS  (1.2 s / 120 s)  summary"
std::string format_result_line(const CriterionResult& r);

nlohmann::json to_json(const CriterionResult& r);

}  // namespace pw
