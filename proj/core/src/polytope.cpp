#include "pw/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pw/lp.hpp"
#include "pw/projectors.hpp"
#include "pw/random.hpp"
#include "pw/sector.hpp"
#include "pw/separability.hpp"

namespace pw {

namespace {

constexpr int kD = 4;
constexpr int kN = 4;

double dot(const QPoint& a, const QPoint& b) {
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += a[i] * b[i];
  return s;
}

double distance(const QPoint& a, const QPoint& b) {
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

std::vector<double> as_vector(const QPoint& q) { return {q.begin(), q.end()}; }

}  // namespace

QPoint TableRow::point() const {
  QPoint q;
  for (int i = 0; i < 5; ++i) q[i] = static_cast<double>(coords[i]) / norm;
  return q;
}

const std::vector<TableRow>& fppt_vertex_table() {
  static const std::vector<TableRow> rows = {
      {{1, 0, 0, 0, 0}, 1, "f.sep.", "|0000>"},  {{1, 3, 0, 0, 0}, 4, "f.sep.", "|0001>"},
      {{1, 9, 4, 0, 0}, 14, "ent.", "W1"},        {{2, 9, 6, 0, 0}, 17, "ent.", "W1"},
      {{1, 9, 4, 6, 0}, 20, "ent.", "W2"},        {{5, 36, 18, 27, 0}, 86, "ent.", "W3"},
      {{1, 9, 4, 9, 1}, 24, "f.sep.", "|0123>"},
  };
  return rows;
}

const std::vector<TableRow>& fppt_facet_table() {
  static const std::vector<TableRow> rows = {
      {{0, 0, 0, 0, 1}, 1, "F1", ""},    {{0, 0, 0, 1, -9}, 36, "F2", ""},  {{0, 0, 3, -2, 6}, 36, "F3", ""},
      {{0, 6, -9, -2, 0}, 360, "F4", ""}, {{6, -2, 3, 0, 0}, 60, "F5", ""},  {{18, 2, -9, 0, 0}, 540, "F6", ""},
  };
  return rows;
}

QPoint basis_state_coordinates(const std::array<int, 4>& digits) {
  const auto set = shared_projectors(kD, kN);
  std::int64_t index = 0;
  for (int x : digits) index = index * kD + x;
  QPoint q{};
  for (std::size_t i = 0; i < set->partitions.size(); ++i)
    q[static_cast<std::size_t>(partition_index(enumerate_partitions(kN), set->partitions[i]))] =
        set->projectors[i].matrix()(index, index).real();
  return q;
}

PolytopeReport verify_polytope_tables() {
  PolytopeReport r;
  const auto& vertices = fppt_vertex_table();
  const auto& facets = fppt_facet_table();
  const std::vector<int> cut1{1}, cut2{2};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto rho = symmetric_state(kN, kD, as_vector(vertices[i].point()));
    const auto ppt = fppt_check(rho, {1, 2});
    VertexCheck c{static_cast<int>(i) + 1, ppt.min_eigenvalues[0], ppt.min_eigenvalues[1], false};
    c.pass = c.min_pt_cut1 >= -1e-9 && c.min_pt_cut2 >= -1e-9;
    if (!c.pass) r.failures.push_back("vertex row " + std::to_string(c.row) + " is not FPPT");
    r.vertices.push_back(c);
  }
  for (std::size_t k = 0; k < facets.size(); ++k) {
    FacetCheck c;
    c.row = static_cast<int>(k) + 1;
    QPoint f = facets[k].point();
    for (const auto& v : vertices) c.values.push_back(dot(f, v.point()));
    c.min_value = *std::min_element(c.values.begin(), c.values.end());
    c.zeros = static_cast<int>(std::count_if(c.values.begin(), c.values.end(), [](double x) { return std::abs(x) <= 1e-8; }));
    c.pass = c.min_value >= -1e-8 && c.zeros >= 4;
    if (!c.pass) r.failures.push_back("facet row " + std::to_string(c.row));
    r.facets.push_back(c);
  }
  const std::vector<std::pair<int, std::array<int, 4>>> certs = {{0, {0, 0, 0, 0}}, {1, {0, 0, 0, 1}}, {6, {0, 1, 2, 3}}};
  for (const auto& [row, digits] : certs) {
    CertificateCheck c;
    c.row = row + 1;
    c.state = vertices[static_cast<std::size_t>(row)].certificate;
    c.coords = basis_state_coordinates(digits);
    c.residual = distance(c.coords, vertices[static_cast<std::size_t>(row)].point());
    c.pass = c.residual <= 1e-12;
    if (!c.pass) r.failures.push_back("certificate " + c.state + " for vertex row " + std::to_string(c.row));
    r.certificates.push_back(c);
  }
  r.pass = r.failures.empty();
  return r;
}

FpptCuttingPlane::FpptCuttingPlane() {
  const auto set = shared_projectors(kD, kN);
  const auto all = enumerate_partitions(kN);
  std::vector<Eigen::MatrixXd> normalized(5);
  for (std::size_t i = 0; i < set->partitions.size(); ++i) {
    const auto& m = set->projectors[i].matrix();
    const auto pos = static_cast<std::size_t>(partition_index(all, set->partitions[i]));
    normalized[pos] = m.real() / m.trace().real();
  }
  for (int s : {1, 2}) {
    std::vector<int> sites(static_cast<std::size_t>(s));
    std::vector<int> signs(kN, 1);
    for (int j = 0; j < s; ++j) {
      sites[static_cast<std::size_t>(j)] = j + 1;
      signs[static_cast<std::size_t>(j)] = -1;
    }
    const auto map = partial_transpose_map(kD, kN, sites);
    std::vector<Eigen::MatrixXd> transposed;
    for (const auto& m : normalized) transposed.push_back(apply_entry_map(m, map));
    SectorDecomposition sectors(kD, signs);
    for (const auto& basis : sectors.blocks()) {
      if (basis.empty()) continue;
      Block b;
      b.cut = s;
      for (const auto& m : transposed) b.terms.push_back(sector_block(m, basis));
      blocks_.push_back(std::move(b));
    }
  }
}

double FpptCuttingPlane::min_pt_eigenvalue(const QPoint& q) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : blocks_) {
    Eigen::MatrixXd m = q[0] * b.terms[0];
    for (int i = 1; i < 5; ++i) m += q[i] * b.terms[static_cast<std::size_t>(i)];
    if (m.rows() == 1) {
      best = std::min(best, m(0, 0));
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    best = std::min(best, es.eigenvalues()(0));
  }
  return best;
}

void FpptCuttingPlane::add_cut(const QPoint& g) {
  double scale = 0.0;
  for (double x : g) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return;
  QPoint u;
  for (int i = 0; i < 5; ++i) u[i] = g[i] / scale;
  for (const auto& c : cuts_)
    if (distance(c, u) < 1e-12) return;
  cuts_.push_back(u);
}

FpptMaximum FpptCuttingPlane::maximize(const QPoint& f, double tol, int max_iterations) {
  // x = (q_0..q_3), q_4 = 1 - sum x.
  FpptMaximum out;
  Eigen::VectorXd c(4);
  for (int i = 0; i < 4; ++i) c(i) = f[i] - f[4];
  for (out.iterations = 1; out.iterations <= max_iterations; ++out.iterations) {
    const auto m = static_cast<Eigen::Index>(cuts_.size()) + 1;
    Eigen::MatrixXd a(m, 4);
    Eigen::VectorXd b(m);
    a.row(0).setOnes();
    b(0) = 1.0;
    for (Eigen::Index k = 1; k < m; ++k) {
      const auto& g = cuts_[static_cast<std::size_t>(k - 1)];
      for (int i = 0; i < 4; ++i) a(k, i) = -(g[i] - g[4]);
      b(k) = g[4];
    }
    const auto lp = solve_lp(c, a, b);
    if (lp.status != LpStatus::Optimal) throw std::runtime_error("FPPT cutting plane: LP " + std::string(lp.status == LpStatus::Infeasible ? "infeasible" : "unbounded"));
    for (int i = 0; i < 4; ++i) out.q[i] = lp.x(i);
    out.q[4] = std::max(0.0, 1.0 - lp.x.sum());
    out.value = dot(f, out.q);

    double worst = std::numeric_limits<double>::infinity();
    for (const auto& blk : blocks_) {
      Eigen::MatrixXd mat = out.q[0] * blk.terms[0];
      for (int i = 1; i < 5; ++i) mat += out.q[i] * blk.terms[static_cast<std::size_t>(i)];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mat);
      worst = std::min(worst, es.eigenvalues()(0));
      for (Eigen::Index j = 0; j < es.eigenvalues().size() && es.eigenvalues()(j) < -tol; ++j) {
        const Eigen::VectorXd v = es.eigenvectors().col(j);
        QPoint g;
        for (int i = 0; i < 5; ++i) g[i] = v.dot(blk.terms[static_cast<std::size_t>(i)] * v);
        add_cut(g);
      }
    }
    out.violation = -worst;
    if (worst >= -tol) {
      out.converged = true;
      return out;
    }
  }
  out.iterations = max_iterations;
  return out;
}

ExtremePointReport extreme_point_search(std::uint64_t seed, int trials) {
  ExtremePointReport r;
  r.seed = seed;
  r.trials = trials;
  FpptCuttingPlane plane;
  const auto& table = fppt_vertex_table();
  const auto all = enumerate_partitions(kN);
  QPoint traces;
  for (std::size_t i = 0; i < 5; ++i)
    traces[i] = static_cast<double>(hook_dimension(all[i]) * weyl_dimension(all[i], kD));
  for (int t = 0; t < trials; ++t) {
    CounterRng rng(seed, static_cast<std::uint64_t>(t));
    // Gaussian coefficients in the dual basis Pi_lambda / tr Pi_lambda.
    QPoint f;
    for (std::size_t i = 0; i < 5; ++i) f[i] = rng.normal() / traces[i];
    const auto best = plane.maximize(f);
    if (!best.converged) ++r.unconverged;
    r.max_violation = std::max(r.max_violation, best.violation);
    auto it = std::find_if(r.clusters.begin(), r.clusters.end(),
                           [&](const VertexCluster& c) { return distance(c.q, best.q) <= 1e-6; });
    if (it == r.clusters.end()) {
      r.clusters.push_back({best.q, 1, -1});
    } else {
      ++it->hits;
    }
  }
  std::vector<bool> used(table.size(), false);
  bool ok = r.clusters.size() == table.size();
  for (auto& c : r.clusters) {
    for (std::size_t i = 0; i < table.size(); ++i)
      if (distance(c.q, table[i].point()) <= 1e-6) c.table_row = static_cast<int>(i) + 1;
    if (c.table_row < 0 || used[static_cast<std::size_t>(c.table_row - 1)]) ok = false;
    else used[static_cast<std::size_t>(c.table_row - 1)] = true;
  }
  r.matches_table = ok;
  r.cuts = plane.cut_count();
  return r;
}

}  // namespace pw
