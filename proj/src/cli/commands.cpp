#include "frameflow/cli/commands.hpp"

#include <cmath>
#include <map>

#include "frameflow/base/disk.hpp"
#include "frameflow/base/torus.hpp"
#include "frameflow/cli/output.hpp"
#include "frameflow/cli/parallel.hpp"
#include "frameflow/errors.hpp"
#include "frameflow/extension/equidistribution.hpp"
#include "frameflow/extension/extension.hpp"
#include "frameflow/harmonics/spectrum.hpp"
#include "frameflow/pestov/threshold.hpp"
#include "frameflow/topology/tables.hpp"
#include "frameflow/transitivity/holonomy.hpp"
#include "frameflow/transitivity/subgroup.hpp"
#include "frameflow/transitivity/tensors.hpp"

namespace frameflow::cli {

using nlohmann::json;

namespace {

int workers(const ExperimentConfig& cfg) {
  const int w = cfg.get_int("run.workers");
  if (w < 1) throw ConfigError("run.workers must be at least 1");
  return w;
}

int fiber_dim(const ExperimentConfig& cfg) {
  const int m = cfg.get_int("model.m");
  if (m < 2 || m > 32) throw ConfigError("model.m must lie in [2, 32]");
  return m;
}

base::ToralAutomorphism automorphism(const ExperimentConfig& cfg) {
  const auto e = cfg.get_int_list("model.matrix");
  if (e.size() != 4) throw ConfigError("model.matrix needs four integers a,b,c,d");
  try {
    return base::ToralAutomorphism(e[0], e[1], e[2], e[3]);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(std::string("model.matrix: ") + ex.what());
  }
}

extension::CocycleKind cocycle_kind(const ExperimentConfig& cfg) {
  const std::string b = cfg.get_string("model.base");
  if (b == "torus") return extension::CocycleKind::discrete;
  if (b == "disk") return extension::CocycleKind::continuous;
  throw ConfigError("model.base must be torus or disk, got '" + b + "'");
}

bool cocycle_is_random(const ExperimentConfig& cfg) { return cfg.get_string("model.cocycle") != "trivial"; }

extension::Cocycle make_cocycle(const ExperimentConfig& cfg, int m, extension::CocycleKind kind, Rng& rng) {
  const std::string name = cfg.get_string("model.cocycle");
  const double amp = cfg.get_double("model.amplitude");
  if (name == "trivial") return extension::trivial_cocycle(m, kind);
  if (name == "random") return extension::random_trig_cocycle(m, kind, rng, amp);
  if (name == "kahler") {
    if (m % 2 != 0) throw ConfigError("model.cocycle = kahler needs even model.m");
    return extension::kahler_like_cocycle(m, kind, rng, amp);
  }
  if (name == "constant") {
    const Rotation r = random_rotation(m, rng);
    if (kind == extension::CocycleKind::discrete) return extension::constant_cocycle(r);
    return extension::constant_generator(logm(r));
  }
  throw ConfigError("model.cocycle must be trivial, random, kahler or constant, got '" + name + "'");
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> fiber_cells(const Rotation& r) {
  std::vector<std::string> cells;
  for (int i = 0; i < r.dim(); ++i) {
    for (int j = 0; j < r.dim(); ++j) cells.push_back(format_double(r(i, j)));
  }
  return cells;
}

std::vector<std::string> fiber_columns(int m) {
  std::vector<std::string> cols;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) cols.push_back("r" + std::to_string(i) + "_" + std::to_string(j));
  }
  return cols;
}

std::vector<extension::FiberObservable> default_observables(int m) {
  std::vector<extension::FiberObservable> obs = {extension::matrix_coefficient(0, 0),
                                                 extension::matrix_coefficient(0, 1)};
  if (m % 2 == 0) obs.push_back(extension::complex_structure_observable(m));
  return obs;
}

struct OrbitOutput {
  std::vector<std::vector<std::string>> rows;
  std::vector<extension::BirkhoffEstimate> estimates;
};

/// Sparse full-tensor components: [[i, j, …], value] for |value| > 1e−12.
json tensor_components_json(const Vector& full, int m, int rank) {
  json out = json::array();
  for (Eigen::Index flat = 0; flat < full.size(); ++flat) {
    if (std::abs(full(flat)) <= 1e-12) continue;
    std::vector<int> idx(static_cast<std::size_t>(rank));
    Eigen::Index rest = flat;
    for (int s = rank - 1; s >= 0; --s) {
      idx[static_cast<std::size_t>(s)] = static_cast<int>(rest % m);
      rest /= m;
    }
    out.push_back(json::array({idx, full(flat)}));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"simulate", "transitivity", "harmonics", "threshold", "tables"};
  return names;
}

RunResult run_simulate(const ExperimentConfig& cfg, std::ostream& log) {
  const int m = fiber_dim(cfg);
  const auto kind = cocycle_kind(cfg);
  const long steps = cfg.get_long("simulate.steps");
  const long dump_every = cfg.get_long("simulate.dump_every");
  const int orbits = cfg.get_int("simulate.orbits");
  const double dt = cfg.get_double("simulate.dt");
  if (steps < extension::BirkhoffAccumulator::kMinLength) {
    throw ConfigError("simulate.steps must be at least " + std::to_string(extension::BirkhoffAccumulator::kMinLength));
  }
  if (dump_every < 1) throw ConfigError("simulate.dump_every must be positive");
  if (orbits < 1) throw ConfigError("simulate.orbits must be positive");
  if (kind == extension::CocycleKind::continuous && !(dt > 0)) throw ConfigError("simulate.dt must be positive");
  extension::StepOptions opt;
  opt.reortho_every = cfg.get_int("simulate.reortho_every");
  if (opt.reortho_every < 1) throw ConfigError("simulate.reortho_every must be positive");

  Rng rng(cfg.seed());
  const auto cocycle = make_cocycle(cfg, m, kind, rng);
  const auto a = automorphism(cfg);
  const auto dom = base::FuchsianDomain::regular_octagon();
  std::vector<std::uint64_t> orbit_seeds;
  for (int i = 0; i < orbits; ++i) orbit_seeds.push_back(rng());

  const auto results = parallel_map(static_cast<std::size_t>(orbits), workers(cfg), [&](std::size_t i) {
    Rng orng(orbit_seeds[i]);
    OrbitOutput out;
    extension::BirkhoffAccumulator acc(default_observables(m), steps);
    auto record = [&](long step, std::vector<std::string> base_cells, const Rotation& fiber) {
      if (step > 0) acc.add(fiber);
      if (step % dump_every != 0) return;
      std::vector<std::string> row = {std::to_string(i), std::to_string(step)};
      row.insert(row.end(), base_cells.begin(), base_cells.end());
      const auto f = fiber_cells(fiber);
      row.insert(row.end(), f.begin(), f.end());
      out.rows.push_back(std::move(row));
    };
    if (kind == extension::CocycleKind::discrete) {
      extension::TorusState s{base::TorusPoint(uniform(orng), uniform(orng)), Rotation::identity(m), 0};
      extension::visit_orbit(s, cocycle, a, steps, [&](long step, const extension::TorusState& st) {
        record(step, {format_double(st.base.x()), format_double(st.base.y()), ""}, st.fiber);
      }, opt);
    } else {
      // The base is folded back into the octagon after every step so that it
      // stays away from the boundary circle.
      const double r = 0.5 * std::sqrt(uniform(orng));
      const double phi = uniform(orng, 0.0, 2.0 * M_PI);
      extension::FlowState s{base::UnitTangent(base::DiskPoint(std::polar(r, phi)), uniform(orng, 0.0, 2.0 * M_PI)),
                             Rotation::identity(m), 0};
      for (long step = 0; step <= steps; ++step) {
        if (step > 0) {
          s = extension::step_extension(s, cocycle, dt, opt);
          s.base = base::reduce_to_domain(s.base, dom).state;
        }
        record(step, {format_double(s.base.z().real()), format_double(s.base.z().imag()), format_double(s.base.angle())},
               s.fiber);
      }
    }
    out.estimates = acc.finish();
    return out;
  });

  const auto dir = output_directory(cfg);
  RunResult res;
  std::vector<std::string> cols = {"orbit", "step", "x", "y", "angle"};
  const auto fc = fiber_columns(m);
  cols.insert(cols.end(), fc.begin(), fc.end());
  {
    CsvWriter csv(dir / "orbit.csv", cfg, cols);
    for (const auto& o : results) {
      for (const auto& row : o.rows) csv.row(row);
    }
  }
  res.artifacts.push_back(dir / "orbit.csv");

  json report;
  report["base"] = cfg.get_string("model.base");
  report["cocycle"] = cfg.get_string("model.cocycle");
  report["m"] = m;
  report["steps"] = steps;
  report["haar_mean"] = 0.0;
  json per_orbit = json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    json tests = json::array();
    for (const auto& e : results[i].estimates) {
      const double z = e.standard_error > 0 ? e.average / e.standard_error : 0.0;
      tests.push_back({{"observable", e.name}, {"average", e.average}, {"standard_error", e.standard_error}, {"z", z}});
      log << "orbit " << i << " " << e.name << ": average " << format_double(e.average) << " (se "
          << format_double(e.standard_error) << ")\n";
    }
    per_orbit.push_back({{"orbit", i}, {"tests", tests}});
  }
  report["orbits"] = per_orbit;
  write_json(dir / "equidistribution.json", cfg, report);
  res.artifacts.push_back(dir / "equidistribution.json");
  return res;
}

RunResult run_transitivity(const ExperimentConfig& cfg, std::ostream& log) {
  const int m = fiber_dim(cfg);
  if (cocycle_kind(cfg) != extension::CocycleKind::discrete) {
    throw ConfigError("transitivity needs model.base = torus");
  }
  const auto a = automorphism(cfg);
  Rng rng(cocycle_is_random(cfg) ? cfg.seed() : 0);
  const auto cocycle = make_cocycle(cfg, m, extension::CocycleKind::discrete, rng);

  const int box = cfg.get_int("transitivity.box_radius");
  const int wanted = cfg.get_int("transitivity.generators");
  if (box < 1) throw ConfigError("transitivity.box_radius must be at least 1");
  if (wanted < 1) throw ConfigError("transitivity.generators must be positive");
  auto points = base::homoclinic_points(a, box);
  if (static_cast<int>(points.size()) < wanted) {
    throw ConfigError("only " + std::to_string(points.size()) + " homoclinic points within box_radius " +
                      std::to_string(box));
  }
  points.resize(static_cast<std::size_t>(wanted));

  transitivity::BrinOptions bopt;
  bopt.holonomy.tol = cfg.get_double("transitivity.holonomy_tol");
  bopt.holonomy.depth_cap = cfg.get_int("transitivity.depth_cap");
  const auto rhos = parallel_map(points.size(), workers(cfg),
                                 [&](std::size_t i) { return transitivity::brin_rho(points[i], cocycle, a, bopt); });

  transitivity::SubgroupOptions sopt;
  sopt.max_word_length = cfg.get_int("transitivity.max_word_length");
  sopt.max_words = cfg.get_long("transitivity.max_words");
  sopt.injectivity_radius = cfg.get_double("transitivity.injectivity_radius");
  const auto h = transitivity::estimate_transitivity_group(rhos, sopt);
  const auto verdict = transitivity::ergodicity_verdict(h, m, cfg.get_int("transitivity.min_generators"));

  json report;
  report["m"] = m;
  report["cocycle"] = cfg.get_string("model.cocycle");
  json hp = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    hp.push_back({{"lattice", points[i].lattice},
                  {"point", {points[i].point.x(), points[i].point.y()}},
                  {"rho", matrix_json(rhos[i].matrix())}});
  }
  report["homoclinic"] = hp;
  json basis = json::array();
  for (const auto& b : h.algebra_basis) basis.push_back(matrix_json(b));
  report["algebra_basis"] = basis;
  report["dimension"] = h.dimension;
  report["generator_count"] = h.generator_count;
  report["words_examined"] = h.words_examined;
  report["logs_harvested"] = h.logs_harvested;
  report["closure_residual"] = h.closure_residual;
  report["verdict"] = transitivity::to_string(verdict);
  report["identity_component_only"] = true;

  json invariants = json::array();
  json skipped = json::array();
  for (const auto& name : cfg.get_list("transitivity.representations")) {
    transitivity::Representation rep;
    try {
      rep = transitivity::representation_from_string(name);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("transitivity.representations: ") + e.what());
    }
    if (rep == transitivity::Representation::lambda3 && m > 16) {
      skipped.push_back(name);
      continue;
    }
    for (const auto& t : transitivity::fixed_tensors(h, rep, m)) {
      invariants.push_back({{"representation", transitivity::to_string(rep)},
                            {"components", tensor_components_json(t.components, m, transitivity::tensor_rank(rep))},
                            {"residual", t.residual}});
    }
  }
  report["invariant_tensors"] = invariants;
  report["skipped_representations"] = skipped;

  const auto dir = output_directory(cfg);
  write_json(dir / "transitivity.json", cfg, report);
  log << "transitivity: dimension " << h.dimension << " of " << m * (m - 1) / 2 << ", verdict "
      << transitivity::to_string(verdict) << ", " << invariants.size() << " invariant tensor(s)\n";
  return {kExitOk, {dir / "transitivity.json"}};
}

RunResult run_harmonics(const ExperimentConfig& cfg, std::ostream& log) {
  const int n = cfg.get_int("harmonics.n");
  const int k_max = cfg.get_int("harmonics.k_max");
  if (n < 2 || n > 150) throw ConfigError("harmonics.n must lie in [2, 150]");
  if (k_max < 0 || k_max > 40) throw ConfigError("harmonics.k_max must lie in [0, 40]");
  const std::string section = cfg.get_string("harmonics.section");

  json report;
  report["n"] = n;
  report["section"] = section;
  harmonics::FiberFunction f;
  f.n = n;
  f.quadrature = harmonics::product_quadrature(n, 2 * k_max);
  if (section == "pi_star") {
    const int k = cfg.get_int("harmonics.k");
    if (k < 0 || k > 6) throw ConfigError("harmonics.k must lie in [0, 6]");
    if (k > k_max) throw ConfigError("harmonics.k must not exceed harmonics.k_max");
    Rng rng(cfg.seed());
    const auto t = harmonics::trace_free_project(harmonics::random_sym_tensor(n, k, rng));
    f.eval = [t](const Vector& v) { return harmonics::pi_star(t, v); };
    json entries = json::array();
    for (const auto& [idx, v] : t.entries()) entries.push_back(json::array({idx, v}));
    report["tensor"] = {{"k", k}, {"entries", entries}};
    report["rayleigh_quotient"] = harmonics::rayleigh_quotient_exact(t);
  } else if (section == "monomial") {
    const auto e = cfg.get_int_list("harmonics.exponents");
    if (static_cast<int>(e.size()) != n) throw ConfigError("harmonics.exponents needs n entries");
    int deg = 0;
    for (int x : e) {
      if (x < 0) throw ConfigError("harmonics.exponents must be nonnegative");
      deg += x;
    }
    if (deg > k_max) throw ConfigError("monomial degree exceeds harmonics.k_max");
    harmonics::Polynomial p(n);
    p.add(e, 1.0);
    f.eval = [p](const Vector& v) { return p(v); };
    report["exponents"] = e;
  } else {
    throw ConfigError("harmonics.section must be pi_star or monomial, got '" + section + "'");
  }

  const auto spec = harmonics::degree_spectrum(f, k_max, cfg.get_double("harmonics.threshold"),
                                               cfg.get_bool("harmonics.zonal"));
  report["degree"] = spec.degree;
  report["parity"] = harmonics::to_string(spec.parity);
  report["total"] = spec.total;
  report["method"] = spec.method;
  report["exceeds_k_max"] = spec.exceeds_k_max;

  const auto dir = output_directory(cfg);
  {
    CsvWriter csv(dir / "spectrum.csv", cfg, {"k", "energy"});
    for (std::size_t k = 0; k < spec.energies.size(); ++k) csv.row({std::to_string(k), format_double(spec.energies[k])});
  }
  write_json(dir / "harmonics.json", cfg, report);
  log << "harmonics: degree " << spec.degree << ", parity " << harmonics::to_string(spec.parity) << " (" << spec.method
      << ")\n";
  return {kExitOk, {dir / "spectrum.csv", dir / "harmonics.json"}};
}

RunResult run_threshold(const ExperimentConfig& cfg, std::ostream& log) {
  const int n_min = cfg.get_int("threshold.n_min");
  const int n_max = cfg.get_int("threshold.n_max");
  const int target = cfg.get_int("threshold.target_degree");
  if (n_min < 3 || n_max < n_min || n_max > 100000) throw ConfigError("threshold needs 3 <= n_min <= n_max <= 100000");
  if (target < 1) throw ConfigError("threshold.target_degree must be positive");
  const std::string mode = cfg.get_string("threshold.q_mode");
  pestov::QEntry::Mode qm;
  if (mode == "calibrated") {
    qm = pestov::QEntry::Mode::calibrated;
  } else if (mode == "direct") {
    qm = pestov::QEntry::Mode::direct;
  } else {
    throw ConfigError("threshold.q_mode must be direct or calibrated, got '" + mode + "'");
  }
  pestov::QTable table;
  for (int c = 1; c <= 4; ++c) table[c] = {qm, cfg.get_double("threshold.q" + std::to_string(c))};

  const auto count = static_cast<std::size_t>(n_max - n_min + 1);
  const auto reports = parallel_map(count, workers(cfg), [&](std::size_t i) {
    const int n = n_min + static_cast<int>(i);
    return pestov::threshold_curve(n, n, table, target).front();
  });

  const auto dir = output_directory(cfg);
  json rows = json::array();
  {
    CsvWriter csv(dir / "threshold.csv", cfg, {"n", "case", "k_cutoff", "delta_threshold"});
    for (const auto& r : reports) {
      csv.row({std::to_string(r.n), std::to_string(r.case_tag), std::to_string(r.k_cutoff),
               format_double(r.delta_threshold)});
      json cases = json::array();
      for (const auto& c : r.cases) {
        cases.push_back({{"case", c.case_tag}, {"group", c.group}, {"q", c.q}, {"k_cutoff", c.k_cutoff},
                         {"delta_threshold", c.delta_threshold}});
      }
      rows.push_back({{"n", r.n}, {"case", r.case_tag}, {"group", r.group}, {"k_cutoff", r.k_cutoff},
                      {"delta_threshold", r.delta_threshold}, {"cases", cases}});
    }
  }
  json q = json::object();
  for (const auto& [c, e] : table) q[std::to_string(c)] = e.resolve(target);
  write_json(dir / "threshold.json", cfg, {{"q_mode", mode}, {"q", q}, {"target_degree", target}, {"rows", rows}});
  log << "threshold: " << reports.size() << " dimensions written\n";
  return {kExitOk, {dir / "threshold.csv", dir / "threshold.json"}};
}

RunResult run_tables(const ExperimentConfig& cfg, std::ostream& log) {
  const int n_max = cfg.get_int("tables.n_max");
  const int n_check = cfg.get_int("tables.n_check");
  if (n_max < 3 || n_max > 100000) throw ConfigError("tables.n_max must lie in [3, 100000]");
  if (n_check < 3 || n_check > 40) throw ConfigError("tables.n_check must lie in [3, 40]");

  json dims = json::array();
  for (int n = 3; n <= n_max; ++n) {
    json cands = json::array();
    for (const auto& c : topology::reduction_candidates(n)) {
      cands.push_back({{"group", c.group_name}, {"p", c.p}, {"case", c.invariant_case},
                       {"representation", transitivity::to_string(c.rep)},
                       {"existence", c.existence == topology::Existence::known ? "known" : "unknown"},
                       {"matrix_model", c.has_matrix_model}});
    }
    dims.push_back({{"n", n}, {"radon_hurwitz", topology::radon_hurwitz(n)},
                    {"vector_fields", topology::vector_field_count(n)}, {"candidates", cands}});
  }
  const auto check = topology::consistency_check(n_check);
  json rows = json::array();
  for (const auto& r : check.rows) {
    rows.push_back({{"n", r.n}, {"group", r.group_name}, {"status", r.status}, {"kernel_dim", r.kernel_dim},
                    {"residual", r.residual}, {"passed", r.passed}});
  }
  const auto dir = output_directory(cfg);
  write_json(dir / "tables.json", cfg,
             {{"dimensions", dims},
              {"consistency", {{"passed", check.passed}, {"failures", check.failures}, {"rows", rows}}}});
  log << "tables: consistency check " << (check.passed ? "passed" : "FAILED") << "\n";
  for (const auto& f : check.failures) log << "  mismatch: " << f << "\n";
  return {check.passed ? kExitOk : kExitNumerical, {dir / "tables.json"}};
}

RunResult run(const std::string& subcommand, const ExperimentConfig& cfg, std::ostream& log) {
  try {
    if (subcommand == "simulate") return run_simulate(cfg, log);
    if (subcommand == "transitivity") return run_transitivity(cfg, log);
    if (subcommand == "harmonics") return run_harmonics(cfg, log);
    if (subcommand == "threshold") return run_threshold(cfg, log);
    if (subcommand == "tables") return run_tables(cfg, log);
    throw ConfigError("unknown subcommand '" + subcommand + "'");
  } catch (const NumericalError& e) {
    log << "numerical failure: " << e.what() << "\n";
    return {kExitNumerical, {}};
  } catch (const std::invalid_argument& e) {
    log << "configuration error: " << e.what() << "\n";
    return {kExitConfig, {}};
  }
}

}  // namespace frameflow::cli
