#include "commands.hpp"

#include <iomanip>
#include <iostream>
#include <memory>

#include "pw/alpha.hpp"
#include "pw/immanant.hpp"
#include "pw/polytope.hpp"
#include "pw/projector_cache.hpp"
#include "pw/sampling.hpp"
#include "pw/seesaw.hpp"
#include "pw/separability.hpp"
#include "pw/verification.hpp"
#include "pw/witness_io.hpp"

namespace pwcli {

namespace {

using nlohmann::json;

// --witness FILE, or --coeffs with -n and -d.
struct WitnessSource {
  std::string file;
  std::string coeffs;
  int n = 0;
  int d = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("-w,--witness", file, "witness JSON file");
    cmd->add_option("--coeffs", coeffs, "coefficients over all partitions of n, comma separated");
    cmd->add_option("-n", n, "number of parties (with --coeffs)");
    cmd->add_option("-d", d, "local dimension (with --coeffs)");
  }

  pw::Witness load() const {
    if (!file.empty()) {
      if (!coeffs.empty()) throw UsageError("give either --witness or --coeffs, not both");
      return pw::load_witness(file);
    }
    if (coeffs.empty()) throw UsageError("a witness is required (--witness FILE or --coeffs with -n, -d)");
    if (n < 1 || d < 1) throw UsageError("--coeffs needs -n and -d");
    return pw::make_witness(n, d, parse_list(coeffs));
  }
};

json state_json(const pw::ProductState& s) {
  json factors = json::array();
  for (const auto& v : s.factors) {
    json f = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) f.push_back({v(i).real(), v(i).imag()});
    factors.push_back(f);
  }
  return {{"kappa", s.kappa.to_string()}, {"d", s.d}, {"factors", factors}};
}

json alpha_json(const pw::AlphaResult& a) {
  json j{{"alpha", a.value}, {"method", a.method}, {"converged", a.converged}};
  if (a.oracle) j["oracle"] = *a.oracle;
  if (a.pattern) j["pattern"] = {{"mu", a.pattern->mu}, {"nu", a.pattern->nu}};
  if (a.state) j["certificate"] = state_json(*a.state);
  return j;
}

pw::CacheMode cache_mode(bool refresh, bool disabled) {
  if (disabled) return pw::CacheMode::Disabled;
  return refresh ? pw::CacheMode::Refresh : pw::CacheMode::ReadWrite;
}

void gen_projectors(CLI::App& app, Globals& g, int& status) {
  auto* cmd = app.add_subcommand("gen-projectors", "Build the Young projectors for (d, n) and store them in the cache");
  auto d = std::make_shared<int>(0), n = std::make_shared<int>(0);
  auto refresh = std::make_shared<bool>(false);
  cmd->add_option("-d", *d, "local dimension")->required();
  cmd->add_option("-n", *n, "number of parties")->required();
  cmd->add_flag("--refresh", *refresh, "recompute even when a valid file exists");
  cmd->callback([=, &g, &status] {
    const auto cached = pw::all_projectors(*d, *n, {cache_mode(*refresh, false), g.cache_dir});
    std::cerr << "cache " << pw::to_string(cached.status) << ": " << cached.file.string() << '\n';
    json zero = json::array(), nonzero = json::array();
    for (const auto& lambda : pw::enumerate_partitions(*n))
      (lambda.length() > *d ? zero : nonzero).push_back(lambda.parts());
    const json report{{"command", "gen-projectors"}, {"d", *d},           {"n", *n},
                      {"file", cached.file.string()}, {"cache", pw::to_string(cached.status)},
                      {"dimension", pw::ipow(*d, *n)}, {"projectors", nonzero}, {"zero_blocks", zero}};
    emit(g, report, [&](std::ostream& os) {
      os << "file       " << cached.file.string() << "\ncache      " << pw::to_string(cached.status)
         << "\ndimension  " << pw::ipow(*d, *n) << "\nprojectors " << nonzero.size() << "\nzero       "
         << zero.size() << '\n';
    });
    status = 0;
  });
}

void alpha(CLI::App& app, Globals& g, int& status) {
  auto* cmd = app.add_subcommand("alpha", "Minimum of tr(W rho) over kappa-separable states");
  auto src = std::make_shared<WitnessSource>();
  auto kappa = std::make_shared<std::string>();
  auto method = std::make_shared<std::string>("auto");
  auto restarts = std::make_shared<int>(50);
  src->attach(cmd);
  cmd->add_option("-k,--kappa", *kappa, "separability partition, e.g. 3|1 or 1|1|2")->required();
  cmd->add_option("-m,--method", *method, "auto, closed, numeric or seesaw")
      ->check(CLI::IsMember({"auto", "closed", "numeric", "seesaw"}));
  cmd->add_option("--restarts", *restarts, "seesaw restarts")->check(CLI::PositiveNumber);
  cmd->callback([=, &g, &status] {
    const auto w = src->load();
    pw::SeesawOptions so;
    so.restarts = *restarts;
    so.seed = g.seed;
    const auto k = pw::parse_kappa(*kappa);
    const auto a = pw::compute_alpha(w, k, pw::parse_alpha_method(*method), so);
    json report = alpha_json(a);
    report["command"] = "alpha";
    report["kappa"] = k.to_string();
    report["witness"] = pw::witness_to_json(w);
    emit(g, report, [&](std::ostream& os) {
      os << "alpha_[" << k.to_string() << "] = " << std::setprecision(12) << a.value << "  (" << a.method << ")\n";
      if (a.oracle) os << "oracle       " << *a.oracle << '\n';
      if (a.method == "seesaw") os << "upper bound from " << *restarts << " restarts, seed " << g.seed << '\n';
    });
    status = 0;
  });
}

void detect(CLI::App& app, Globals& g, int& status) {
  auto* cmd = app.add_subcommand("detect", "Apply the witness rule to given outcome probabilities");
  auto src = std::make_shared<WitnessSource>();
  auto probs = std::make_shared<std::string>();
  auto kappa = std::make_shared<std::string>();
  auto alpha_value = std::make_shared<double>(0.0);
  src->attach(cmd);
  cmd->add_option("-p,--probs", *probs, "p_lambda over all partitions of n, comma separated")->required();
  auto* kopt = cmd->add_option("-k,--kappa", *kappa, "compute alpha for this separability partition");
  auto* aopt = cmd->add_option("-a,--alpha", *alpha_value, "use this alpha");
  kopt->excludes(aopt);
  cmd->callback([=, &g, &status] {
    const auto w = src->load();
    const auto p = pw::make_distribution(w.n, w.d, parse_list(*probs));
    std::string provenance = "given";
    double a = *alpha_value;
    if (!kappa->empty()) {
      pw::SeesawOptions so;
      so.seed = g.seed;
      const auto r = pw::compute_alpha(w, pw::parse_kappa(*kappa), pw::AlphaMethod::Auto, so);
      a = r.value;
      provenance = r.method;
    } else if (aopt->count() == 0) {
      throw UsageError("detect needs --kappa or --alpha");
    }
    const auto det = pw::detect_inseparability(p, w, a);
    const json report{{"command", "detect"}, {"alpha", a},           {"alpha_provenance", provenance},
                      {"value", det.value},  {"detected", det.detected}, {"witness", pw::witness_to_json(w)}};
    emit(g, report, [&](std::ostream& os) {
      os << "sum (c - alpha) p = " << std::setprecision(12) << det.value << "  alpha = " << a << " (" << provenance
         << ")\n"
         << (det.detected ? "DETECTED" : "not detected") << '\n';
    });
    status = 0;
  });
}

void sample(CLI::App& app, Globals& g, int& status) {
  auto* cmd = app.add_subcommand("sample", "Simulate weak Schur sampling and decide with a confidence bound");
  auto src = std::make_shared<WitnessSource>();
  auto state = std::make_shared<std::string>();
  auto kappa = std::make_shared<std::string>();
  auto shots = std::make_shared<std::int64_t>(100000);
  auto delta = std::make_shared<double>(0.05);
  src->attach(cmd);
  cmd->add_option("-s,--state", *state, "werner:P, symmetric:q1,q2,..., basis:DIGITS or optimal")->required();
  cmd->add_option("-k,--kappa", *kappa, "separability partition")->required();
  cmd->add_option("-N,--shots", *shots, "number of shots")->check(CLI::PositiveNumber);
  cmd->add_option("--delta", *delta, "failure probability")->check(CLI::Range(1e-12, 0.999999));
  cmd->callback([=, &g, &status] {
    const auto w = src->load();
    const auto rep = pw::pipeline(*state, w, pw::parse_kappa(*kappa), *shots, *delta, g.seed);
    json report = pw::to_json(rep);
    report["command"] = "sample";
    for (const auto& warning : rep.warnings) std::cerr << "warning: " << warning << '\n';
    emit(
        g, report,
        [&](std::ostream& os) {
          os << std::setprecision(8) << "alpha     " << rep.alpha.value << " (" << rep.alpha_provenance << ")\n"
             << "estimate  " << rep.estimate.estimate << "\nradius    " << rep.estimate.radius << "\nN         "
             << rep.estimate.shots << "\ndelta     " << rep.estimate.delta << '\n'
             << (rep.estimate.detected ? "DETECTED" : "not detected") << '\n';
        },
        [&](std::ostream& os) {
          os << "partition,p,count\n";
          for (std::size_t i = 0; i < rep.shots.partitions.size(); ++i)
            os << '"' << rep.shots.partitions[i].to_string() << "\"," << std::setprecision(17) << rep.exact.probs[i]
               << ',' << rep.shots.counts[i] << '\n';
        });
    status = 0;
  });
}

void seesaw(CLI::App& app, Globals& g, int& status) {
  auto* cmd = app.add_subcommand("seesaw", "Alternating minimization of tr(W rho) over kappa-product states");
  auto src = std::make_shared<WitnessSource>();
  auto kappa = std::make_shared<std::string>();
  auto opts = std::make_shared<pw::SeesawOptions>();
  src->attach(cmd);
  cmd->add_option("-k,--kappa", *kappa, "separability partition")->required();
  cmd->add_option("--restarts", opts->restarts, "random restarts")->check(CLI::PositiveNumber);
  cmd->add_option("--sweeps", opts->max_sweeps, "maximum sweeps per restart")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", opts->tol, "convergence tolerance on the objective");
  cmd->callback([=, &g, &status] {
    const auto w = src->load();
    pw::SeesawOptions o = *opts;
    o.seed = g.seed;
    const auto r = pw::seesaw_minimize(pw::witness_operator(w), pw::parse_kappa(*kappa), o);
    const json report{{"command", "seesaw"}, {"kappa", pw::parse_kappa(*kappa).to_string()},
                      {"value", r.value},     {"converged", r.converged},
                      {"monotone", r.monotone}, {"sweeps", r.sweeps},
                      {"restarts", o.restarts}, {"certificate", state_json(r.state)},
                      {"witness", pw::witness_to_json(w)}};
    emit(g, report, [&](std::ostream& os) {
      os << "min tr(W rho) over [" << pw::parse_kappa(*kappa).to_string() << "] products: " << std::setprecision(12)
         << r.value << "\nconverged " << (r.converged ? "yes" : "no") << ", monotone " << (r.monotone ? "yes" : "no")
         << ", sweeps " << r.sweeps << ", restarts " << o.restarts << '\n';
    });
    status = 0;
  });
}

void verify(CLI::App& app, Globals& g, int& status) {
  auto* cmd = app.add_subcommand("verify", "Run acceptance suites");
  auto suite = std::make_shared<std::string>("all");
  auto verbose = std::make_shared<bool>(false);
  cmd->add_option("suite", *suite,
                  "all, characters, schur-weyl, tripartite, semisep, families, table1, polytope, immanants, "
                  "decomposable, werner, epsilon, sampling, seven-qubit");
  cmd->add_flag("-v,--verbose", *verbose, "print per-check details");
  cmd->callback([=, &g, &status] {
    std::vector<int> ids;
    try {
      ids = pw::suite_criteria(*suite);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    pw::VerifyOptions vo;
    vo.seed = g.seed;
    std::vector<pw::CriterionResult> results;
    for (const auto& c : pw::acceptance_criteria()) {
      if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
      results.push_back(pw::run_criterion(c, vo));
      if (g.format != "text" || !g.out.empty()) std::cerr << pw::format_result_line(results.back()) << '\n';
    }
    json list = json::array();
    bool pass = true;
    for (const auto& r : results) {
      list.push_back(pw::to_json(r));
      pass = pass && r.pass;
    }
    const json report{{"command", "verify"}, {"suite", *suite}, {"pass", pass}, {"criteria", list}};
    emit(
        g, report,
        [&](std::ostream& os) {
          for (const auto& r : results) {
            os << pw::format_result_line(r) << '\n';
            if (*verbose)
              for (const auto& d : r.details) os << "    " << d << '\n';
            for (const auto& f : r.failures) os << "    failed: " << f << '\n';
          }
          os << (pass ? "all criteria passed" : "some criteria failed") << '\n';
        },
        [&](std::ostream& os) {
          os << "id,name,pass,seconds,budget_seconds\n";
          for (const auto& r : results)
            os << r.id << ',' << r.name << ',' << (r.pass ? 1 : 0) << ',' << r.seconds << ',' << r.budget_seconds << '\n';
        });
    status = pass ? 0 : 1;
  });
}

void classify_werner(CLI::App& app, Globals& g, int& status) {
  auto* cmd = app.add_subcommand("classify-werner", "Scan rho_p = p Pi_(3)/tr + (1-p) Pi_(2,1)/tr");
  auto resolution = std::make_shared<int>(200);
  auto d = std::make_shared<int>(3);
  cmd->add_option("--resolution", *resolution, "grid intervals on [0, 1]")->check(CLI::Range(2, 1000000));
  cmd->add_option("-d", *d, "local dimension")->check(CLI::Range(2, 6));
  cmd->callback([=, &g, &status] {
    const auto rep = pw::classify_werner_family(*resolution, *d);
    json scan = json::array();
    for (const auto& s : rep.scan)
      scan.push_back({{"p", s.p},
                      {"label", pw::to_string(s.c.label)},
                      {"sep1", s.c.sep_criterion_1},
                      {"sep2", s.c.sep_criterion_2},
                      {"bisep", s.c.bisep_criterion},
                      {"fppt_min_eigenvalue", s.c.fppt_min_eigenvalue}});
    const json report{{"command", "classify-werner"},
                      {"d", rep.d},
                      {"sep_boundary", rep.sep_boundary},
                      {"ppt_boundary", rep.ppt_boundary},
                      {"bound_entangled", {rep.bound_entangled_low, rep.bound_entangled_high}},
                      {"bisep_everywhere", rep.bisep_everywhere},
                      {"label_changes", rep.label_changes},
                      {"note", rep.note},
                      {"scan", scan}};
    emit(
        g, report,
        [&](std::ostream& os) {
          os << std::setprecision(10) << "fully separable for p >= " << rep.sep_boundary
             << "\nFPPT for p >= " << rep.ppt_boundary << "\nbound entangled on [" << rep.bound_entangled_low << ", "
             << rep.bound_entangled_high << ")\n[2,1]-separable for all p: " << (rep.bisep_everywhere ? "yes" : "no")
             << "\n" << rep.note << '\n';
        },
        [&](std::ostream& os) {
          os << "p,sep1,sep2,bisep,fppt_min_eigenvalue,label\n" << std::setprecision(12);
          for (const auto& s : rep.scan)
            os << s.p << ',' << s.c.sep_criterion_1 << ',' << s.c.sep_criterion_2 << ',' << s.c.bisep_criterion << ','
               << s.c.fppt_min_eigenvalue << ',' << pw::to_string(s.c.label) << '\n';
        });
    status = 0;
  });
}

void immanant_test(CLI::App& app, Globals& g, int& status) {
  auto* cmd = app.add_subcommand("immanant-test", "Check immanant inequalities on random PSD matrices");
  auto size = std::make_shared<int>(4);
  auto samples = std::make_shared<int>(1000);
  auto rank = std::make_shared<int>(0);
  cmd->add_option("--size", *size, "matrix size")->check(CLI::Range(2, 6));
  cmd->add_option("--samples", *samples, "number of random matrices")->check(CLI::PositiveNumber);
  cmd->add_option("--rank", *rank, "matrix rank (0 cycles through 1..size)")->check(CLI::NonNegativeNumber);
  cmd->callback([=, &g, &status] {
    if (*rank > *size) throw UsageError("--rank exceeds --size");
    std::vector<std::pair<std::uint64_t, pw::InequalityMargin>> rows;
    std::map<std::string, std::pair<int, double>> summary;  // violations, min margin / scale
    for (int i = 0; i < *samples; ++i) {
      pw::CounterRng rng(g.seed, static_cast<std::uint64_t>(i));
      const int r = *rank > 0 ? *rank : 1 + i % *size;
      for (const auto& m : pw::inequality_suite(pw::random_psd(*size, r, rng))) {
        auto& s = summary.try_emplace(m.id, 0, m.margin / m.scale).first->second;
        s.first += m.violated;
        s.second = std::min(s.second, m.margin / m.scale);
        rows.emplace_back(static_cast<std::uint64_t>(i), m);
      }
    }
    int violations = 0;
    json ids = json::object();
    for (const auto& [id, s] : summary) {
      violations += s.first;
      ids[id] = {{"violations", s.first}, {"min_relative_margin", s.second}};
    }
    const json report{{"command", "immanant-test"}, {"size", *size}, {"samples", *samples},
                      {"violations", violations}, {"inequalities", ids}};
    emit(
        g, report,
        [&](std::ostream& os) {
          for (const auto& [id, s] : summary)
            os << std::left << std::setw(34) << id << std::right << " violations " << s.first << "  min margin/scale "
               << std::setprecision(4) << s.second << '\n';
          os << violations << " violations over " << *samples << " matrices of size " << *size << '\n';
        },
        [&](std::ostream& os) {
          os << "inequality_id,n,matrix_seed,margin\n";
          for (const auto& [seed, m] : rows) os << m.id << ',' << m.n << ',' << seed << ',' << std::setprecision(17) << m.margin << '\n';
        });
    status = violations == 0 ? 0 : 1;
  });
}

void polytope(CLI::App& app, Globals& g, int& status) {
  auto* cmd = app.add_subcommand("polytope", "Verify the four-ququart FPPT polytope and search its vertices");
  auto trials = std::make_shared<int>(200);
  cmd->add_option("--trials", *trials, "random functionals to maximize")->check(CLI::PositiveNumber);
  cmd->callback([=, &g, &status] {
    const auto tables = pw::verify_polytope_tables();
    const auto search = pw::extreme_point_search(g.seed, *trials);
    json clusters = json::array();
    for (const auto& c : search.clusters)
      clusters.push_back({{"q", c.q}, {"hits", c.hits}, {"table_row", c.table_row}});
    json facets = json::array();
    for (const auto& f : tables.facets) facets.push_back({{"row", f.row}, {"values", f.values}, {"zeros", f.zeros}});
    json vertices = json::array();
    for (const auto& v : tables.vertices)
      vertices.push_back({{"row", v.row}, {"min_pt_cut1", v.min_pt_cut1}, {"min_pt_cut2", v.min_pt_cut2}});
    const bool pass = tables.pass && search.matches_table;
    const json report{{"command", "polytope"}, {"pass", pass},       {"table_failures", tables.failures},
                      {"vertices", vertices},  {"facets", facets},   {"clusters", clusters},
                      {"trials", *trials},     {"cuts", search.cuts}, {"matches_table", search.matches_table}};
    emit(
        g, report,
        [&](std::ostream& os) {
          os << "tables: " << (tables.pass ? "7 vertices FPPT, 6 facets verified, 3 certificates reproduced" : "FAILED")
             << '\n';
          for (const auto& f : tables.failures) os << "  " << f << '\n';
          os << "search: " << search.clusters.size() << " clusters from " << *trials << " trials (" << search.cuts
             << " cuts)\n";
          for (const auto& c : search.clusters) {
            os << "  row " << std::setw(2) << c.table_row << "  hits " << std::setw(4) << c.hits << "  q =";
            for (double x : c.q) os << ' ' << std::fixed << std::setprecision(6) << x;
            os << std::defaultfloat << '\n';
          }
        },
        [&](std::ostream& os) {
          os << "table_row,hits,q4,q31,q22,q211,q1111\n" << std::setprecision(12);
          for (const auto& c : search.clusters) {
            os << c.table_row << ',' << c.hits;
            for (double x : c.q) os << ',' << x;
            os << '\n';
          }
        });
    status = pass ? 0 : 1;
  });
}

}  // namespace

void add_commands(CLI::App& app, Globals& globals, int& status) {
  gen_projectors(app, globals, status);
  alpha(app, globals, status);
  detect(app, globals, status);
  sample(app, globals, status);
  seesaw(app, globals, status);
  verify(app, globals, status);
  classify_werner(app, globals, status);
  immanant_test(app, globals, status);
  polytope(app, globals, status);
}

}  // namespace pwcli
