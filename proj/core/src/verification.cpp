#include "pw/verification.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pw/alpha.hpp"
#include "pw/epsilon_certify.hpp"
#include "pw/immanant.hpp"
#include "pw/polytope.hpp"
#include "pw/projectors.hpp"
#include "pw/random.hpp"
#include "pw/sampling.hpp"
#include "pw/seesaw.hpp"
#include "pw/separability.hpp"
#include "pw/witness.hpp"

namespace pw {

namespace {

std::string num(double v, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

void check(CriterionResult& r, bool ok, const std::string& what) {
  if (!ok) r.failures.push_back(what);
}

struct TableWitness {
  std::string name;
  std::vector<double> row;
  int d;
  double alpha_13, alpha_22, alpha_112;
  double tol_112;
};

// Four-party witnesses with local dimension and the listed alpha values.
const std::vector<TableWitness>& table_witnesses() {
  static const std::vector<TableWitness> rows = {
      {"W1", {9, -1, 0, 0, 0}, 2, -1.0, -1.0, -1.0, 1e-4},
      {"W2", {0, 9, 0, -9, 0}, 3, -1.0, -0.5, -0.31, 1e-2},
      {"W3", {0, 0, 0, 1, -9}, 4, -9.0 / 4.0, -1.5, -0.5, 1e-4},
      {"W4", {4, 0, -1, 0, 0}, 2, -0.5, -1.0, -0.5, 1e-4},
      {"W5", {0, 0, 1, 0, -4}, 4, -1.0, -1.0 / 3.0, -1.0 / 6.0, 1e-4},
  };
  return rows;
}

CriterionResult characters(const VerifyOptions&) {
  CriterionResult r;
  const std::vector<std::string> lambdas = {"4", "3,1", "2,2", "2,1,1", "1,1,1,1"};
  const std::vector<std::string> classes = {"1,1,1,1", "2,1,1", "2,2", "3,1", "4"};
  const int expected[5][5] = {
      {1, 1, 1, 1, 1}, {3, 1, -1, 0, -1}, {2, 0, 2, -1, 0}, {3, -1, -1, 0, 1}, {1, -1, 1, 1, -1},
  };
  int matched = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const auto got = character(parse_partition(lambdas[static_cast<std::size_t>(i)]),
                                 CycleType(parse_partition(classes[static_cast<std::size_t>(j)])));
      if (got == expected[i][j]) ++matched;
      else r.failures.push_back("chi_(" + lambdas[static_cast<std::size_t>(i)] + ") on class (" + classes[static_cast<std::size_t>(j)] +
                                ") = " + std::to_string(got) + ", expected " + std::to_string(expected[i][j]));
    }
  }
  r.summary = std::to_string(matched) + "/25 characters match";
  r.data["matched"] = matched;
  return r;
}

CriterionResult schur_weyl(const VerifyOptions&) {
  CriterionResult r;
  std::vector<std::pair<int, int>> cases;
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n) cases.emplace_back(d, n);
  for (int n = 5; n <= 7; ++n) cases.emplace_back(2, n);
  double worst = 0.0;
  for (const auto& [d, n] : cases) {
    std::int64_t total = 0;
    for (const auto& lambda : enumerate_partitions(n, d)) total += hook_dimension(lambda) * weyl_dimension(lambda, d);
    check(r, total == ipow(d, n), "sum d_lambda m_lambda != d^n at d=" + std::to_string(d) + ", n=" + std::to_string(n));
    const auto rep = check_projector_set(*shared_projectors(d, n));
    const double m = std::max({rep.orthogonality, rep.idempotence, rep.completeness, rep.trace, rep.hermiticity});
    worst = std::max(worst, m);
    check(r, m <= 1e-9, "projector invariants off by " + num(m) + " at d=" + std::to_string(d) + ", n=" + std::to_string(n));
  }
  r.summary = std::to_string(cases.size()) + " (d, n) cases, worst invariant residual " + num(worst, 3);
  r.data["worst_residual"] = worst;
  return r;
}

CriterionResult tripartite(const VerifyOptions& o) {
  CriterionResult r;
  const int d = 3;
  struct Case {
    std::string name;
    std::vector<double> c;
    bool full;
  };
  const std::vector<Case> cases = {{"(4,-1,0) full", {4, -1, 0}, true},
                                   {"(3,-1,1) full", {3, -1, 1}, true},
                                   {"(0,1,-2) [2|1]", {0, 1, -2}, false}};
  SeesawOptions so;
  so.restarts = 50;
  so.seed = o.seed;
  for (const auto& c : cases) {
    const double exact = c.full ? alpha_tripartite_fullsep(c.c[0], c.c[1], c.c[2], d)
                                : alpha_tripartite_bisep(c.c[0], c.c[1], c.c[2], d);
    check(r, exact == 0.0, c.name + ": closed form " + num(exact, 17) + " != 0");
    const auto s = seesaw_minimize(witness_operator(make_witness(3, d, c.c)),
                                   parse_kappa(c.full ? "1|1|1" : "2|1"), so);
    check(r, std::abs(s.value) <= 1e-6, c.name + ": seesaw " + num(s.value, 10));
    check(r, s.monotone, c.name + ": seesaw objective increased during a sweep");
    r.details.push_back(c.name + ": closed " + num(exact) + ", seesaw " + num(s.value, 3));
  }
  r.summary = "closed forms exactly 0; seesaw within 1e-6";
  return r;
}

CriterionResult semisep(const VerifyOptions& o) {
  CriterionResult r;
  double worst = 0.0;
  for (const auto& t : table_witnesses()) {
    const Witness w = make_witness(4, t.d, t.row);
    const auto closed = alpha_semisep_closed(w);
    const auto numeric = alpha_semisep_numeric(w);
    const double diff = std::abs(closed.value - numeric.value);
    worst = std::max(worst, diff);
    check(r, diff <= 1e-8, t.name + ": closed " + num(closed.value, 12) + " vs numeric " + num(numeric.value, 12));
    const bool literal = std::abs(closed.value - t.alpha_13) <= 1e-9;
    check(r, literal, t.name + ": alpha_[3|1] = " + num(closed.value, 10) + ", listed " + num(t.alpha_13, 10));
    r.details.push_back(t.name + " (d=" + std::to_string(t.d) + "): closed " + num(closed.value) + ", numeric " +
                        num(numeric.value) + ", listed " + num(t.alpha_13) + (literal ? "" : "  MISMATCH"));
  }
  CounterRng rng(o.seed, 0x5e);
  int trials = 0;
  for (; trials < 200; ++trials) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int d = 2 + static_cast<int>(rng() % 3);
    std::vector<double> row(enumerate_partitions(n, d).size());
    for (auto& c : row) c = rng.normal();
    const Witness w = make_witness(n, d, row);
    const double diff = std::abs(alpha_semisep_closed(w).value - alpha_semisep_numeric(w).value);
    worst = std::max(worst, diff);
    check(r, diff <= 1e-8, "random witness n=" + std::to_string(n) + " d=" + std::to_string(d) + ": diff " + num(diff));
  }
  r.summary = "closed vs spectral max diff " + num(worst, 3) + " over 5 table rows + " + std::to_string(trials) + " random";
  r.data["max_diff"] = worst;
  return r;
}

CriterionResult families(const VerifyOptions&) {
  CriterionResult r;
  double worst = 0.0;
  int count = 0;
  auto compare = [&](const std::string& name, const WitnessFamilyMember& m) {
    const double numeric = alpha_semisep_numeric(m.witness).value;
    const double diff = std::abs(numeric - m.alpha);
    worst = std::max(worst, diff);
    ++count;
    check(r, diff <= 1e-8, name + ": family " + num(m.alpha, 12) + " vs numeric " + num(numeric, 12));
  };
  for (int n = 2; n <= 7; ++n)
    for (int d = 2; d <= 4; ++d)
      for (int k = 0; k + 2 <= std::min(n, d); ++k)
        compare("hook n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k),
                hook_family_witness(k, n, d));
  for (int n = 2; n <= 7; ++n)
    for (int b = 0; 2 * b <= n; ++b)
      for (int k = 1; n - 2 * b >= 2 * k; ++k)
        compare("two-row (" + std::to_string(n - b) + "," + std::to_string(b) + ") k=" + std::to_string(k),
                two_row_qubit_witness(n - b, b, k));
  const std::map<int, double> shifts = {{4, 1.0 / 8.0}, {6, 1.0 / 50.0}};
  for (const auto& [n, expected] : shifts) {
    const auto m = even_qubit_witness(n);
    check(r, std::abs(m.alpha - expected) <= 1e-15, "even-qubit n=" + std::to_string(n) + " shift " + num(m.alpha, 12));
    const double a = alpha_semisep_numeric(m.witness).value;
    check(r, std::abs(a + expected) <= 1e-8, "even-qubit n=" + std::to_string(n) + ": alpha " + num(a, 12) + " != -shift");
    r.details.push_back("even-qubit n=" + std::to_string(n) + ": shift " + num(m.alpha) + ", alpha_[n-1|1] " + num(a));
  }
  r.summary = std::to_string(count) + " family members, max diff " + num(worst, 3) + "; shifts 1/8, 1/50";
  r.data["members"] = count;
  r.data["max_diff"] = worst;
  return r;
}

CriterionResult table_seesaw(const VerifyOptions& o) {
  CriterionResult r;
  SeesawOptions so;
  so.restarts = 50;
  so.seed = o.seed;
  int mismatches = 0;
  for (const auto& t : table_witnesses()) {
    const auto op = witness_operator(make_witness(4, t.d, t.row));
    const auto s22 = seesaw_minimize(op, parse_kappa("2|2"), so);
    const auto s112 = seesaw_minimize(op, parse_kappa("1|1|2"), so);
    const bool ok22 = std::abs(s22.value - t.alpha_22) <= 1e-4;
    const bool ok112 = std::abs(s112.value - t.alpha_112) <= t.tol_112;
    check(r, ok22, t.name + " [2|2]: seesaw " + num(s22.value, 8) + ", listed " + num(t.alpha_22, 8));
    check(r, ok112, t.name + " [1|1|2]: seesaw " + num(s112.value, 8) + ", listed " + num(t.alpha_112, 8));
    check(r, s22.monotone && s112.monotone, t.name + ": seesaw objective increased during a sweep");
    mismatches += !ok22 + !ok112;
    r.details.push_back(t.name + " (d=" + std::to_string(t.d) + "): [2|2] " + num(s22.value) + " (listed " +
                        num(t.alpha_22) + ")" + (ok22 ? "" : " MISMATCH") + ", [1|1|2] " + num(s112.value) + " (listed " +
                        num(t.alpha_112) + ")" + (ok112 ? "" : " MISMATCH"));
  }
  r.summary = std::to_string(10 - mismatches) + "/10 entries reproduced, 50 restarts, seed " + std::to_string(o.seed);
  return r;
}

CriterionResult polytope(const VerifyOptions& o) {
  CriterionResult r;
  const auto tables = verify_polytope_tables();
  for (const auto& f : tables.failures) r.failures.push_back(f);
  for (const auto& v : tables.vertices)
    r.details.push_back("vertex " + std::to_string(v.row) + ": min PT eigenvalue " + num(std::min(v.min_pt_cut1, v.min_pt_cut2), 3));
  for (const auto& f : tables.facets)
    r.details.push_back("facet F" + std::to_string(f.row) + ": min " + num(f.min_value, 3) + ", zeros " + std::to_string(f.zeros));
  for (const auto& c : tables.certificates)
    r.details.push_back("certificate " + c.state + " -> row " + std::to_string(c.row) + ", residual " + num(c.residual, 3));
  const auto search = extreme_point_search(o.seed, 200);
  check(r, search.matches_table,
        "extreme point search found " + std::to_string(search.clusters.size()) + " clusters not matching the 7 table rows");
  for (const auto& c : search.clusters)
    r.details.push_back("cluster -> row " + std::to_string(c.table_row) + " (" + std::to_string(c.hits) + " hits)");
  r.summary = "7 vertices FPPT, 6 facets tight, 3 certificates; search: " + std::to_string(search.clusters.size()) +
              " clusters from 200 trials, " + std::to_string(search.cuts) + " cuts";
  r.data["clusters"] = search.clusters.size();
  return r;
}

CriterionResult immanants_check(const VerifyOptions& o) {
  CriterionResult r;
  const int samples = 10000;
  std::map<std::string, int> violations;
  std::map<std::string, double> worst;
  for (int n = 2; n <= 6; ++n) {
    for (int i = 0; i < samples; ++i) {
      CounterRng rng(o.seed, static_cast<std::uint64_t>(n) * 1000003ULL + static_cast<std::uint64_t>(i));
      const int rank = 1 + i % n;
      const auto g = random_psd(n, rank, rng);
      for (const auto& m : inequality_suite(g)) {
        const double rel = m.margin / m.scale;
        auto it = worst.find(m.id);
        if (it == worst.end() || rel < it->second) worst[m.id] = rel;
        if (m.violated) ++violations[m.id];
      }
    }
  }
  int total = 0;
  for (const auto& [id, count] : violations) {
    total += count;
    r.failures.push_back(id + ": " + std::to_string(count) + " violations");
  }
  for (const auto& [id, w] : worst) r.details.push_back(id + ": min margin/scale " + num(w, 3));

  double bridge_worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    CounterRng rng(o.seed ^ 0xB41D6EULL, static_cast<std::uint64_t>(i));
    const int n = 2 + i % 5;
    const int rank = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(n, n == 6 ? 3 : 4)));
    const auto g = random_psd(n, rank, rng);
    std::vector<double> a(enumerate_partitions(n).size());
    for (auto& x : a) x = rng.normal();
    const auto b = bridge_identity_check(a, g);
    bridge_worst = std::max(bridge_worst, b.residual / b.scale);
    check(r, b.residual <= 1e-7 * b.scale, "bridge residual " + num(b.residual, 3) + " (scale " + num(b.scale, 3) + ")");
  }
  r.summary = std::to_string(total) + " violations over " + std::to_string(5 * samples) +
              " matrices; bridge max residual/scale " + num(bridge_worst, 3);
  r.data["violations"] = total;
  r.data["bridge_max_relative"] = bridge_worst;
  return r;
}

CriterionResult decomposable(const VerifyOptions&) {
  CriterionResult r;
  double worst = 0.0;
  for (int d : {2, 3}) {
    const auto rep = decomposability_identity_check(d);
    worst = std::max({worst, rep.residual_plus, rep.residual_minus});
    check(r, rep.residual_plus <= 1e-10, "W+ residual " + num(rep.residual_plus, 3) + " at d=" + std::to_string(d));
    check(r, rep.residual_minus <= 1e-10, "W- residual " + num(rep.residual_minus, 3) + " at d=" + std::to_string(d));
    r.details.push_back("d=" + std::to_string(d) + ": W+ " + num(rep.residual_plus, 3) + ", W- " + num(rep.residual_minus, 3));
  }
  r.summary = "max residual " + num(worst, 3);
  return r;
}

CriterionResult werner(const VerifyOptions&) {
  CriterionResult r;
  const auto rep = classify_werner_family(200, 3);
  check(r, std::abs(rep.sep_boundary - 0.25) <= 1e-9, "SEP boundary " + num(rep.sep_boundary, 12) + " != 1/4");
  r.details.push_back("PPT boundary " + num(rep.ppt_boundary, 10) + " (reference 1/5, diff " + num(rep.ppt_boundary - 0.2, 3) + ")");
  r.details.push_back("label changes along p: " + std::to_string(rep.label_changes) +
                      (rep.bisep_everywhere ? ", [2,1]-separable everywhere" : ""));
  r.details.push_back("note: " + rep.note);
  r.summary = "SEP boundary " + num(rep.sep_boundary, 10) + ", PPT boundary " + num(rep.ppt_boundary, 10);
  r.data["sep_boundary"] = rep.sep_boundary;
  r.data["ppt_boundary"] = rep.ppt_boundary;
  return r;
}

CriterionResult epsilon(const VerifyOptions&) {
  CriterionResult r;
  const std::vector<double> listed = {4.048e-2, 5.476e-3, 1.759e-2};
  const std::vector<double> tol = {0.2, 0.5, 0.5};
  const auto& rows = indecomposable_rows();
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto c = epsilon_certify(dual_basis_witness(4, 4, rows[i]));
    const double rel = std::abs(std::abs(c.epsilon) - listed[i]) / listed[i];
    check(r, rel <= tol[i], "w" + std::to_string(i + 1) + ": |eps| " + num(std::abs(c.epsilon)) + " vs " + num(listed[i]));
    check(r, c.weak_duality, "w" + std::to_string(i + 1) + ": dual bound exceeded primal bound");
    r.details.push_back("w" + std::to_string(i + 1) + ": eps " + num(c.epsilon) + " (listed " + num(listed[i]) + ", rel err " +
                        num(rel, 2) + "), bounds [" + num(c.lower_bound) + ", " + num(c.upper_bound) + "], " +
                        (c.certified ? "certified" : "UNCERTIFIED") +
                        (c.epsilon < 0 ? "; minimum is positive, listed value is its magnitude" : ""));
    parts.push_back(num(c.epsilon, 4));
  }
  r.summary = "eps = (" + parts[0] + ", " + parts[1] + ", " + parts[2] + ")";
  return r;
}

CriterionResult sampling(const VerifyOptions& o) {
  CriterionResult r;
  const Witness w = make_witness(3, 3, std::vector<double>{3, -1, 1});
  const auto p = schur_probabilities(symmetric_state(3, 3, {0.2, 0.5, 0.3}));
  double truth = 0.0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) truth += w.coeffs[i] * p.probs[i];
  const double range = coefficient_range(w, 0.0);
  for (std::int64_t shots : {std::int64_t{1000}, std::int64_t{100000}}) {
    double sq = 0.0;
    for (int s = 0; s < 100; ++s) {
      const auto e = estimate_and_decide(sample(p, shots, o.seed + static_cast<std::uint64_t>(s)), w, 0.0, 0.05);
      sq += (e.estimate - truth) * (e.estimate - truth);
    }
    const double rms = std::sqrt(sq / 100.0);
    const double bound = range / std::sqrt(static_cast<double>(shots));
    check(r, rms <= bound, "RMS " + num(rms) + " > R/sqrt(N) = " + num(bound) + " at N=" + std::to_string(shots));
    r.details.push_back("N=" + std::to_string(shots) + ": RMS " + num(rms, 3) + " (bound " + num(bound, 3) + ")");
  }
  // Boundary state: the [3|1] minimizer of a four-qubit witness saturates alpha exactly.
  const Witness w1 = make_witness(4, 2, std::vector<double>{9, -1, 0, 0, 0});
  int false_detections = 0;
  for (int s = 0; s < 100; ++s) {
    const auto rep = pipeline("optimal", w1, parse_kappa("3|1"), 10000, 0.05, o.seed + 1000 + static_cast<std::uint64_t>(s));
    false_detections += rep.estimate.detected;
  }
  check(r, false_detections <= 10, std::to_string(false_detections) + "/100 false detections on a [3|1]-separable state");
  r.details.push_back("false detections: " + std::to_string(false_detections) + "/100 (allowed 10)");
  r.summary = "RMS within R/sqrt(N); " + std::to_string(false_detections) + "/100 false detections at delta 0.05";
  return r;
}

CriterionResult seven_qubit(const VerifyOptions& o) {
  CriterionResult r;
  const auto rep = seven_qubit_consistency(10000, o.seed);
  check(r, rep.violations_511 == 0, std::to_string(rep.violations_511) + " violations on [5|1|1] states");
  check(r, rep.violations_331 == 0, std::to_string(rep.violations_331) + " violations on [3|3|1] states");
  check(r, rep.symmetric_product_min >= -1e-9, "symmetric product value " + num(rep.symmetric_product_min));
  r.details.push_back("alpha = 24/C(33,5) = " + num(rep.alpha, 6));
  r.details.push_back("min over [5|1|1]: " + num(rep.min_511) + ", over [3|3|1]: " + num(rep.min_331) +
                      ", symmetric products: " + num(rep.symmetric_product_min));
  r.summary = std::to_string(rep.violations_511 + rep.violations_331) + " violations over 2 x 10^4 product states";
  return r;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list = {
      {1, "characters", 1, characters},
      {2, "schur-weyl", 60, schur_weyl},
      {3, "tripartite-tightness", 30, tripartite},
      {4, "semisep-closed-form", 120, semisep},
      {5, "witness-families", 60, families},
      {6, "four-party-seesaw", 180, table_seesaw},
      {7, "ququart-polytope", 300, polytope},
      {8, "immanant-inequalities", 120, immanants_check},
      {9, "decomposability", 10, decomposable},
      {10, "werner-family", 30, werner},
      {11, "epsilon-certification", 300, epsilon},
      {12, "sampling-statistics", 60, sampling},
      {13, "seven-qubit", 60, seven_qubit},
  };
  return list;
}

std::vector<int> suite_criteria(const std::string& suite) {
  static const std::map<std::string, std::vector<int>> suites = {
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}},
      {"characters", {1}},
      {"schur-weyl", {2}},
      {"tripartite", {3}},
      {"semisep", {4}},
      {"families", {5}},
      {"table1", {4, 6}},
      {"polytope", {7}},
      {"immanants", {8}},
      {"decomposable", {9}},
      {"werner", {10}},
      {"epsilon", {11}},
      {"sampling", {12}},
      {"seven-qubit", {13}},
  };
  const auto it = suites.find(suite);
  if (it == suites.end()) throw std::invalid_argument("unknown verification suite '" + suite + "'");
  return it->second;
}

CriterionResult run_criterion(const Criterion& c, const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c.run(options);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
    r.summary = "aborted";
  }
  r.id = c.id;
  r.name = c.name;
  r.budget_seconds = c.budget_seconds;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > r.budget_seconds)
    r.failures.push_back("runtime " + num(r.seconds, 3) + " s exceeds budget " + num(r.budget_seconds) + " s");
  r.pass = r.failures.empty();
  return r;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << std::setw(2) << r.id << " " << std::left << std::setw(24) << r.name << std::right
     << (r.pass ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s / "
     << std::setprecision(0) << r.budget_seconds << " s)  " << r.summary;
  return os.str();
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"id", r.id},           {"name", r.name},         {"pass", r.pass},         {"seconds", r.seconds},
          {"budget_seconds", r.budget_seconds}, {"summary", r.summary}, {"details", r.details},
          {"failures", r.failures}, {"data", r.data}};
}

}  // namespace pw
