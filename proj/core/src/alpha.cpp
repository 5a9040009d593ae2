#include "pw/alpha.hpp"

#include <limits>
#include <stdexcept>

namespace pw {

AlphaMethod parse_alpha_method(const std::string& text) {
  if (text == "auto") return AlphaMethod::Auto;
  if (text == "closed") return AlphaMethod::Closed;
  if (text == "numeric") return AlphaMethod::Numeric;
  if (text == "seesaw") return AlphaMethod::Seesaw;
  throw std::invalid_argument("unknown alpha method '" + text + "' (auto, closed, numeric, seesaw)");
}

std::string to_string(AlphaMethod method) {
  switch (method) {
    case AlphaMethod::Auto: return "auto";
    case AlphaMethod::Closed: return "closed";
    case AlphaMethod::Numeric: return "numeric";
    case AlphaMethod::Seesaw: return "seesaw";
  }
  return "unknown";
}

namespace {

bool is_semisep(const SeparabilityPartition& kappa) {
  const auto& f = kappa.parts();
  return f.size() == 2 && f[1] == 1;
}

AlphaResult closed(const Witness& w, const SeparabilityPartition& kappa) {
  if (kappa.factors() == 1) {
    // No separability constraint: lambda_min of W.
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < w.partitions.size(); ++i)
      if (w.partitions[i].length() <= w.d) best = std::min(best, w.coeffs[i]);
    AlphaResult r;
    r.value = best;
    r.method = "closed-form";
    return r;
  }
  if (w.n == 3) {
    const double c3 = w.coeff(Partition({3})), c21 = w.coeff(Partition({2, 1})), c111 = w.coeff(Partition({1, 1, 1}));
    AlphaResult r;
    r.method = "tripartite-closed-form";
    r.value = kappa.factors() == 3 ? alpha_tripartite_fullsep(c3, c21, c111, w.d)
                                          : alpha_tripartite_bisep(c3, c21, c111, w.d);
    return r;
  }
  if (is_semisep(kappa)) return alpha_semisep(w);
  throw std::invalid_argument("no closed form for kappa = " + kappa.to_string() + " at n = " + std::to_string(w.n));
}

}  // namespace

bool has_closed_form(const SeparabilityPartition& kappa) {
  return kappa.factors() == 1 || kappa.n() == 3 || is_semisep(kappa);
}

AlphaResult compute_alpha(const Witness& w, const SeparabilityPartition& kappa, AlphaMethod method,
                          const SeesawOptions& seesaw) {
  w.validate();
  if (kappa.n() != w.n)
    throw std::invalid_argument("kappa " + kappa.to_string() + " does not partition n = " + std::to_string(w.n));
  switch (method) {
    case AlphaMethod::Closed:
      return closed(w, kappa);
    case AlphaMethod::Numeric:
      if (!is_semisep(kappa)) throw std::invalid_argument("numeric alpha is only available for kappa = [n-1|1]");
      return alpha_semisep_numeric(w);
    case AlphaMethod::Auto:
      if (has_closed_form(kappa)) return closed(w, kappa);
      [[fallthrough]];
    case AlphaMethod::Seesaw: {
      if (kappa.factors() < 2) return closed(w, kappa);
      const auto s = seesaw_minimize(witness_operator(w), kappa, seesaw);
      AlphaResult r;
      r.value = s.value;
      r.method = "seesaw";
      r.state = s.state;
      r.converged = s.converged;
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace pw
