#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pw {

// Four ququarts (d = n = 4). Coordinates q_lambda = tr(Pi_lambda rho) in the
// order (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
using QPoint = std::array<double, 5>;

struct TableRow {
  std::array<int, 5> coords;
  int norm = 1;
  std::string label;        // vertices: "f.sep." / "ent."; facets: "F1".."F6"
  std::string certificate;  // vertices: "|0000>" or witness name
  QPoint point() const;     // coords / norm
};

const std::vector<TableRow>& fppt_vertex_table();
const std::vector<TableRow>& fppt_facet_table();

struct VertexCheck {
  int row = 0;
  double min_pt_cut1 = 0.0;
  double min_pt_cut2 = 0.0;
  bool pass = false;
};

struct FacetCheck {
  int row = 0;
  std::vector<double> values;  // tr(F rho_j) per vertex, F = sum f_lambda Pi_lambda / N
  double min_value = 0.0;
  int zeros = 0;
  bool pass = false;
};

struct CertificateCheck {
  int row = 0;
  std::string state;
  QPoint coords{};
  double residual = 0.0;
  bool pass = false;
};

struct PolytopeReport {
  std::vector<VertexCheck> vertices;
  std::vector<FacetCheck> facets;
  std::vector<CertificateCheck> certificates;
  bool pass = false;
  std::vector<std::string> failures;
};

PolytopeReport verify_polytope_tables();

/// Coordinates of a product basis state |i_1 i_2 i_3 i_4>.
QPoint basis_state_coordinates(const std::array<int, 4>& digits);

struct FpptMaximum {
  QPoint q{};
  double value = 0.0;
  double violation = 0.0;  // -(smallest partial-transpose eigenvalue), <= 0 when feasible
  int iterations = 0;
  bool converged = false;
};

/// Outer approximation of the symmetric FPPT set by linear cuts, refined by
/// partial-transpose eigenvectors. Cuts persist across calls on the same object.
class FpptCuttingPlane {
 public:
  FpptCuttingPlane();
  FpptMaximum maximize(const QPoint& f, double tol = 1e-12, int max_iterations = 2000);
  /// Smallest eigenvalue of rho(q)^{T_S} over |S| in {1, 2}.
  double min_pt_eigenvalue(const QPoint& q) const;
  std::size_t cut_count() const { return cuts_.size(); }

 private:
  struct Block {
    int cut = 0;
    std::vector<Eigen::MatrixXd> terms;  // per lambda, (Pi_lambda / tr Pi_lambda)^{T_S} on the sector
  };
  std::vector<Block> blocks_;
  std::vector<QPoint> cuts_;  // g . q >= 0
  void add_cut(const QPoint& g);
};

struct VertexCluster {
  QPoint q{};
  int hits = 0;
  int table_row = -1;  // matching row of the vertex table, -1 if none
};

struct ExtremePointReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<VertexCluster> clusters;
  int unconverged = 0;
  double max_violation = 0.0;
  std::size_t cuts = 0;
  bool matches_table = false;  // exactly 7 clusters, each matching a distinct row
};

/// Maximizes random linear functionals over the symmetric FPPT set and clusters
/// the optima at distance 1e-6.
ExtremePointReport extreme_point_search(std::uint64_t seed, int trials);

}  // namespace pw
