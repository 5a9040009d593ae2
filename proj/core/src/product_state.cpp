#include "pw/product_state.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pw {

SeparabilityPartition::SeparabilityPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("separability partition is empty");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("separability partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int SeparabilityPartition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string SeparabilityPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(parts_[i]);
  }
  return out;
}

SeparabilityPartition parse_kappa(const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == ' ') continue;
    cleaned += (ch == '|') ? ',' : ch;
  }
  // 1^4 style
  if (const auto caret = cleaned.find('^'); caret != std::string::npos && cleaned.find(',') == std::string::npos) {
    const int part = std::stoi(cleaned.substr(0, caret));
    const int times = std::stoi(cleaned.substr(caret + 1));
    return SeparabilityPartition(std::vector<int>(static_cast<std::size_t>(times), part));
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const auto comma = cleaned.find(',', pos);
    const auto token = cleaned.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty()) throw std::invalid_argument("malformed separability partition: " + text);
    std::size_t used = 0;
    parts.push_back(std::stoi(token, &used));
    if (used != token.size()) throw std::invalid_argument("malformed separability partition: " + text);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return SeparabilityPartition(std::move(parts));
}

VectorXc ProductState::vector() const {
  if (factors.size() != kappa.parts().size()) throw std::invalid_argument("product state: factor count mismatch");
  VectorXc out = VectorXc::Ones(1);
  for (std::size_t r = 0; r < factors.size(); ++r) {
    const auto& f = factors[r];
    if (f.size() != ipow(d, kappa.parts()[r])) throw std::invalid_argument("product state: factor dimension mismatch");
    VectorXc next(out.size() * f.size());
    for (Eigen::Index i = 0; i < out.size(); ++i) next.segment(i * f.size(), f.size()) = out(i) * f;
    out = std::move(next);
  }
  return out;
}

DenseOperator ProductState::density() const {
  return DenseOperator::projector_onto(d, kappa.n(), vector());
}

ProductState random_product_state(const SeparabilityPartition& kappa, int d, CounterRng& rng) {
  ProductState s{kappa, d, {}};
  for (int k : kappa.parts()) s.factors.push_back(haar_vector(ipow(d, k), rng));
  return s;
}

double expectation(const DenseOperator& a, const VectorXc& psi) {
  return psi.dot(a.matrix() * psi).real();
}

double expectation(const DenseOperator& a, const ProductState& s) { return expectation(a, s.vector()); }

}  // namespace pw
