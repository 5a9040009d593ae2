#include "pw/witness_io.hpp"

#include <fstream>
#include <stdexcept>

namespace pw {

nlohmann::json partition_to_json(const Partition& p) { return p.parts(); }

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t i = 0; i < w.partitions.size(); ++i) {
    if (w.coeffs[i] == 0.0) continue;
    coeffs.push_back({{"partition", partition_to_json(w.partitions[i])}, {"c", w.coeffs[i]}});
  }
  nlohmann::json j{{"n", w.n}, {"d", w.d}, {"coeffs", coeffs}};
  if (w.shift) j["shift"] = *w.shift;
  return j;
}

Witness witness_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  std::map<Partition, double> coeffs;
  for (const auto& entry : j.at("coeffs")) {
    Partition lambda(entry.at("partition").get<std::vector<int>>());
    if (lambda.size() != n) throw std::invalid_argument("witness: " + lambda.to_string() + " is not a partition of n");
    coeffs[lambda] += entry.at("c").get<double>();
  }
  Witness w = make_witness(n, d, coeffs);
  if (j.contains("shift") && !j.at("shift").is_null()) w.shift = j.at("shift").get<double>();
  w.validate();
  return w;
}

Witness load_witness(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open witness file " + path.string());
  try {
    return witness_from_json(nlohmann::json::parse(in));
  } catch (const std::exception& e) {
    throw std::runtime_error("invalid witness file " + path.string() + ": " + e.what());
  }
}

void save_witness(const Witness& w, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write witness file " + path.string());
  out << witness_to_json(w).dump(2) << '\n';
}

}  // namespace pw
