#include "pw/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pw/parallel.hpp"
#include "pw/projectors.hpp"
#include "pw/random.hpp"
#include "pw/separability.hpp"
#include "pw/witness_io.hpp"

namespace pw {

namespace {

constexpr std::int64_t kBlockShots = 1 << 16;

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad number '" + item + "' in state spec");
    out.push_back(v);
  }
  return out;
}

}  // namespace

SchurDistribution schur_probabilities(const DenseOperator& rho) {
  const int d = rho.local_dim(), n = rho.sites();
  if (!rho.is_hermitian(1e-10)) throw std::invalid_argument("schur_probabilities: state is not Hermitian");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-8) throw std::invalid_argument("schur_probabilities: trace deviates from 1 by " + std::to_string(tr - 1.0));
  if (min_eigenvalue(rho) < -1e-8) throw std::invalid_argument("schur_probabilities: state is not positive semidefinite");
  const auto set = shared_projectors(d, n);
  const auto all = enumerate_partitions(n);
  std::vector<double> p(all.size(), 0.0);
  for (std::size_t i = 0; i < set->partitions.size(); ++i) {
    const auto& pi = set->projectors[i].matrix();
    const double v = pi.cwiseProduct(rho.matrix().transpose()).sum().real();
    p[static_cast<std::size_t>(partition_index(all, set->partitions[i]))] = std::max(0.0, v);
  }
  double total = 0.0;
  for (double v : p) total += v;
  for (double& v : p) v /= total;
  return make_distribution(n, d, p);
}

ShotRecord sample(const SchurDistribution& p, std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: need at least one shot");
  p.validate();
  ShotRecord rec;
  rec.n = p.n;
  rec.d = p.d;
  rec.partitions = p.partitions;
  rec.total = shots;
  rec.seed = seed;
  std::vector<double> cdf(p.probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < cdf.size(); ++i) cdf[i] = acc += std::max(0.0, p.probs[i]);
  for (double& c : cdf) c /= acc;
  std::size_t last = 0;
  for (std::size_t i = 0; i < cdf.size(); ++i)
    if (p.probs[i] > 0.0) last = i;

  const auto blocks = static_cast<std::size_t>((shots + kBlockShots - 1) / kBlockShots);
  std::vector<std::vector<std::int64_t>> partial(blocks, std::vector<std::int64_t>(cdf.size(), 0));
  parallel_for(blocks, [&](std::size_t b) {
    CounterRng rng(seed, b);
    const std::int64_t begin = static_cast<std::int64_t>(b) * kBlockShots;
    const std::int64_t end = std::min(shots, begin + kBlockShots);
    auto& counts = partial[b];
    for (std::int64_t s = begin; s < end; ++s) {
      const double u = rng.uniform();
      const auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      ++counts[std::min(k, last)];
    }
  });
  rec.counts.assign(cdf.size(), 0);
  for (const auto& c : partial)
    for (std::size_t i = 0; i < c.size(); ++i) rec.counts[i] += c[i];
  return rec;
}

double coefficient_range(const Witness& w, double alpha) {
  double max_abs = 0.0, min_val = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < w.partitions.size(); ++i) {
    if (w.partitions[i].length() > w.d) continue;
    const double v = w.coeffs[i] - alpha;
    max_abs = std::max(max_abs, std::abs(v));
    min_val = std::min(min_val, v);
  }
  return max_abs - min_val;
}

EstimateReport estimate_and_decide(const ShotRecord& rec, const Witness& w, double alpha, double delta) {
  if (rec.total <= 0) throw std::invalid_argument("estimate_and_decide: empty shot record");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("estimate_and_decide: delta must lie in (0, 1)");
  if (rec.n != w.n || rec.d != w.d) throw std::invalid_argument("estimate_and_decide: (n, d) of record and witness differ");
  EstimateReport r;
  r.delta = delta;
  r.shots = rec.total;
  r.seed = rec.seed;
  r.range = coefficient_range(w, alpha);
  if (!std::isfinite(r.range)) throw std::invalid_argument("estimate_and_decide: coefficient range is not finite");
  double acc = 0.0;
  for (std::size_t i = 0; i < rec.counts.size(); ++i)
    if (rec.counts[i]) acc += (w.coeffs[i] - alpha) * static_cast<double>(rec.counts[i]);
  r.estimate = acc / static_cast<double>(rec.total);
  r.radius = r.range * std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(rec.total)));
  r.detected = r.estimate + r.radius < 0.0;
  return r;
}

DenseOperator state_from_spec(const std::string& spec, const Witness& w) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "werner") {
    if (w.n != 3) throw std::invalid_argument("werner state needs n = 3");
    const auto v = parse_numbers(arg);
    if (v.size() != 1 || v[0] < 0.0 || v[0] > 1.0) throw std::invalid_argument("werner:P needs one value P in [0, 1]");
    return symmetric_state(3, w.d, werner_weights(v[0]));
  }
  if (kind == "symmetric") return symmetric_state(w.n, w.d, parse_numbers(arg));
  if (kind == "basis") {
    if (static_cast<int>(arg.size()) != w.n) throw std::invalid_argument("basis state needs " + std::to_string(w.n) + " digits");
    VectorXc psi = VectorXc::Zero(checked_dimension(w.d, w.n));
    std::int64_t index = 0;
    for (char c : arg) {
      const int digit = c - '0';
      if (digit < 0 || digit >= w.d) throw std::invalid_argument("basis digit out of range in '" + arg + "'");
      index = index * w.d + digit;
    }
    psi(index) = 1.0;
    return DenseOperator::projector_onto(w.d, w.n, psi);
  }
  if (kind == "optimal") {
    const auto a = alpha_semisep_numeric(w);
    if (!a.state) throw std::runtime_error("no minimizing product state available");
    return a.state->density();
  }
  throw std::invalid_argument("unknown state spec '" + spec + "' (werner:P, symmetric:q,..., basis:DIGITS, optimal)");
}

PipelineReport pipeline(const std::string& state_spec, const Witness& w, const SeparabilityPartition& kappa,
                        std::int64_t shots, double delta, std::uint64_t seed, const SeesawOptions& seesaw) {
  PipelineReport r;
  r.state = state_spec;
  r.kappa = kappa;
  r.witness = w;
  const DenseOperator rho = state_from_spec(state_spec, w);
  SeesawOptions opts = seesaw;
  opts.seed = seed;
  r.alpha = compute_alpha(w, kappa, AlphaMethod::Auto, opts);
  if (w.shift && std::abs(*w.shift + r.alpha.value) > 1e-9)
    r.warnings.push_back("stated shift " + std::to_string(*w.shift) + " differs from -alpha = " +
                         std::to_string(-r.alpha.value));
  const bool exact = r.alpha.method != "seesaw";
  r.alpha_provenance = exact ? "closed-form" : "seesaw-heuristic";
  if (!exact)
    r.warnings.push_back("SOUNDNESS: alpha is a seesaw upper bound; a detection claim is heuristic");
  r.exact = schur_probabilities(rho);
  r.shots = sample(r.exact, shots, seed);
  r.estimate = estimate_and_decide(r.shots, w, r.alpha.value, delta);
  return r;
}

nlohmann::json to_json(const PipelineReport& r) {
  nlohmann::json j;
  j["witness"] = witness_to_json(r.witness);
  j["state"] = r.state;
  j["kappa"] = r.kappa.to_string();
  j["alpha"] = r.alpha.value;
  j["alpha_method"] = r.alpha.method;
  j["alpha_provenance"] = r.alpha_provenance;
  j["N"] = r.estimate.shots;
  j["delta"] = r.estimate.delta;
  j["estimate"] = r.estimate.estimate;
  j["radius"] = r.estimate.radius;
  j["range"] = r.estimate.range;
  j["detected"] = r.estimate.detected;
  j["seed"] = r.estimate.seed;
  nlohmann::json outcomes = nlohmann::json::array();
  for (std::size_t i = 0; i < r.shots.partitions.size(); ++i)
    outcomes.push_back({{"lambda", partition_to_json(r.shots.partitions[i])},
                        {"p", r.exact.probs[i]},
                        {"count", r.shots.counts[i]}});
  j["outcomes"] = outcomes;
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace pw
