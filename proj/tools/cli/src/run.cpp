#include "blaschke_lab_cli/run.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "blaschke_lab/criteria.hpp"
#include "blaschke_lab/errors.hpp"
#include "blaschke_lab/interpolation.hpp"
#include "blaschke_lab/sequences.hpp"
#include "blaschke_lab_cli/sequence_file.hpp"

namespace blaschke_lab::cli {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::ConfigInvalid, msg); }

std::int64_t as_int(std::size_t i) { return static_cast<std::int64_t>(i); }

json complex_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

json points_json(const ZeroSequence& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(complex_json(p.value()));
  return out;
}

json targets_json(const TargetVector& t) {
  json out = json::array();
  for (auto v : t) out.push_back(complex_json(v));
  return out;
}

json witness_json(const Witness& w) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(std::size_t i) const { return {{"index", i}}; }
    json operator()(IndexPair p) const { return {{"j", p.j}, {"k", p.k}}; }
    json operator()(CirclePoint z) const { return {{"arg", z.arg()}}; }
  };
  return std::visit(Visitor{}, w);
}

json criterion_json(const CriterionReport& r) {
  json out = {{"name", std::string(to_string(r.name))},
              {"value", r.value},
              {"witness", witness_json(r.witness)},
              {"per_index", r.per_index}};
  if (r.grid_meta) {
    out["grid"] = {{"base_count", r.grid_meta->base_count},
                   {"refinement_rounds", r.grid_meta->refinement_rounds},
                   {"extra_args", r.grid_meta->extra_args.size()}};
  }
  return out;
}

std::string suffix(std::size_t n) { return "_N" + std::to_string(n); }

/// One row per index plus a summary row carrying the extremum.
Table criterion_table(const CriterionReport& r, std::size_t n) {
  Table t{std::string(to_string(r.name)) + suffix(n), {"row", "index", "value", "witness_arg"}, {}};
  for (std::size_t i = 0; i < r.per_index.size(); ++i) {
    t.rows.push_back({std::string("index"), as_int(i), r.per_index[i], std::string()});
  }
  Cell witness_index = std::string();
  Cell witness_arg = std::string();
  if (const auto* i = std::get_if<std::size_t>(&r.witness)) witness_index = as_int(*i);
  if (const auto* z = std::get_if<CirclePoint>(&r.witness)) witness_arg = z->arg();
  t.rows.push_back({std::string("summary"), witness_index, r.value, witness_arg});
  return t;
}

/// The N values to run at; 0 means "the sequence as given".
std::vector<std::size_t> schedule(const ExperimentConfig& c) {
  if (c.n_schedule.empty()) return {0};
  return c.n_schedule;
}

Series circle_modulus_series(const std::string& name, const std::string& label, std::size_t base_count,
                             const auto& f) {
  Series s{name, label, {}, {}};
  CircleGrid g{base_count, 0, {}};
  for (double t : g.sample_args()) {
    s.x.push_back(t);
    s.y.push_back(std::abs(f(CirclePoint(t).value())));
  }
  return s;
}

void run_criteria(const ExperimentConfig& c, ReportBundle& out) {
  Table trend{"criteria_trend", {"N", "carleson", "frostman", "cohn", "dyakonov", "vasyunin"}, {}};
  std::vector<Series> trend_series;
  for (const char* name : {"carleson", "frostman", "cohn", "dyakonov", "vasyunin"}) {
    trend_series.push_back({std::string("trend_") + name, std::string(name) + " vs N", {}, {}});
  }
  for (std::size_t n : c.n_schedule) {
    ZeroSequence a = resolve_sequence(*c.a, n);
    BlaschkeProduct b(a);
    TargetVector alpha = resolve_targets(c.alpha, a.size(), c.seed);
    std::vector<CriterionReport> reports{carleson_criterion(b), frostman_sum(a, c.grid), cohn_sum(a),
                                         dyakonov_sup(b, alpha)};
    double vasyunin = vasyunin_sum(a);
    json result = {{"N", a.size()}, {"points", points_json(a)}, {"vasyunin", vasyunin}};
    std::vector<Cell> row{as_int(a.size())};
    for (std::size_t k = 0; k < reports.size(); ++k) {
      result[std::string(to_string(reports[k].name))] = criterion_json(reports[k]);
      row.emplace_back(reports[k].value);
      out.tables.push_back(criterion_table(reports[k], a.size()));
      trend_series[k].x.push_back(static_cast<double>(a.size()));
      trend_series[k].y.push_back(reports[k].value);
    }
    row.emplace_back(vasyunin);
    trend_series[4].x.push_back(static_cast<double>(a.size()));
    trend_series[4].y.push_back(vasyunin);
    trend.rows.push_back(std::move(row));
    out.structured["results"].push_back(result);
  }
  out.tables.insert(out.tables.begin(), std::move(trend));
  for (auto& s : trend_series) out.series.push_back(std::move(s));
}

void run_interpolate(const ExperimentConfig& c, ReportBundle& out) {
  for (std::size_t n : schedule(c)) {
    ZeroSequence a = resolve_sequence(*c.a, n);
    BlaschkeProduct b(a);
    TargetVector alpha = resolve_targets(c.alpha, a.size(), c.seed);
    InterpolantRep f = solve_kb(b, alpha);
    Table t{"interpolant" + suffix(a.size()),
            {"index", "a_re", "a_im", "alpha_re", "alpha_im", "f_re", "f_im", "node_error"},
            {}};
    json values = json::array();
    double max_error = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      Complex v = f(a[j]);
      double err = std::abs(v - alpha[j]);
      max_error = std::max(max_error, err);
      values.push_back(complex_json(v));
      t.rows.push_back({as_int(j), a[j].re(), a[j].im(), alpha[j].real(), alpha[j].imag(), v.real(),
                        v.imag(), err});
    }
    bool kernel_ok = f.kernel_status() == KernelSolveStatus::ok;
    json kernel = json::array();
    for (auto k : f.kernel_coeffs()) kernel.push_back(complex_json(k));
    out.structured["results"].push_back({
        {"N", a.size()},
        {"points", points_json(a)},
        {"alpha", targets_json(alpha)},
        {"values_at_points", values},
        {"max_node_error", max_error},
        {"lebesgue_constant", lebesgue_constant(b, c.grid)},
        {"sup_norm", sup_norm(f, c.grid)},
        {"kernel_status", kernel_ok ? "ok" : "ill_conditioned"},
        {"kernel_residual", f.kernel_residual()},
        {"kernel_coeffs", kernel},
    });
    out.tables.push_back(std::move(t));
    out.series.push_back(circle_modulus_series("interpolant_modulus" + suffix(a.size()),
                                               "|f| on the circle, N=" + std::to_string(a.size()),
                                               c.grid.base_count, f));
  }
}

void run_union(const ExperimentConfig& c, ReportBundle& out) {
  for (std::size_t n : schedule(c)) {
    ZeroSequence a = resolve_sequence(*c.a, n);
    ZeroSequence z = resolve_sequence(*c.z, n);
    BlaschkeProduct b(a);
    BlaschkeProduct cz(z);
    TargetVector alpha = resolve_targets(c.alpha, a.size(), c.seed);
    TargetVector beta = resolve_targets(c.beta, z.size(), RngSeed{c.seed.value + 1});
    UnionConstruction g = interpolate_union(b, cz, alpha, beta);
    Table t{"union" + suffix(a.size()),
            {"set", "index", "re", "im", "target_re", "target_im", "G_re", "G_im", "node_error",
             "other_part_abs"},
            {}};
    double max_error = 0.0;
    double max_other = 0.0;
    auto add_rows = [&](const ZeroSequence& pts, const TargetVector& targets, const std::string& set,
                        bool a_side) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        Complex v = g(pts[j]);
        double err = std::abs(v - targets[j]);
        double other = std::abs(a_side ? g.g2(pts[j]) : g.g1(pts[j]));
        max_error = std::max(max_error, err);
        max_other = std::max(max_other, other);
        t.rows.push_back({set, as_int(j), pts[j].re(), pts[j].im(), targets[j].real(), targets[j].imag(),
                          v.real(), v.imag(), err, other});
      }
    };
    add_rows(a, alpha, "a", true);
    add_rows(z, beta, "z", false);
    json tilde = json::array();
    for (auto v : g.tilde_gamma()) tilde.push_back(complex_json(v));
    PairedSequences pairs(a, z);
    out.structured["results"].push_back({
        {"N", a.size()},
        {"a", points_json(a)},
        {"z", points_json(z)},
        {"alpha", targets_json(alpha)},
        {"beta", targets_json(beta)},
        {"separation", criterion_json(separation(pairs))},
        {"cross_modulus", criterion_json(cross_modulus(b, z))},
        {"tilde_gamma", tilde},
        {"max_node_error", max_error},
        {"max_other_part_abs", max_other},
        {"sup_norm", sup_norm(g, c.grid)},
    });
    out.tables.push_back(std::move(t));
    out.series.push_back(circle_modulus_series("union_modulus" + suffix(a.size()),
                                               "|G| on the circle, N=" + std::to_string(a.size()),
                                               c.grid.base_count, g));
  }
}

void run_nearby(const ExperimentConfig& c, ReportBundle& out) {
  for (std::size_t n : schedule(c)) {
    ZeroSequence a = resolve_sequence(*c.a, n);
    BlaschkeProduct b(a);
    TargetVector alpha = resolve_targets(c.alpha, a.size(), c.seed);
    double m = lebesgue_constant(b, c.grid);
    std::optional<double> radius;
    std::optional<ZeroSequence> z;
    if (c.z) {
      z = resolve_sequence(*c.z, n);
    } else {
      radius = c.radius_factor / (2.0 * m);
      z = perturb_sample(a, *radius, c.seed, c.min_sep).z();
    }
    PairedSequences pairs(a, *z);
    NearbyResult r = nearby_iterate(b, *z, alpha, c.max_iter, c.tol, c.grid);
    const IterationTrace& tr = r.trace;
    std::string sfx = suffix(a.size());
    Table t{"nearby_trace" + sfx, {"step", "residual_sup", "bound"}, {}};
    Series res{"nearby_residual" + sfx, "residual sup, N=" + std::to_string(a.size()), {}, {}};
    Series bound{"nearby_bound" + sfx, "geometric bound, N=" + std::to_string(a.size()), {}, {}};
    for (std::size_t k = 0; k < tr.residual_sup.size(); ++k) {
      Cell bnd = k < tr.bound_curve.size() ? Cell(tr.bound_curve[k]) : Cell(std::string());
      t.rows.push_back({as_int(k), tr.residual_sup[k], bnd});
      res.x.push_back(static_cast<double>(k));
      res.y.push_back(tr.residual_sup[k]);
    }
    for (std::size_t k = 0; k < tr.bound_curve.size(); ++k) {
      bound.x.push_back(static_cast<double>(k));
      bound.y.push_back(tr.bound_curve[k]);
    }
    json values = json::array();
    for (const auto& p : *z) values.push_back(complex_json(r.interpolant(p)));
    json result = {
        {"N", a.size()},
        {"a", points_json(a)},
        {"z", points_json(*z)},
        {"alpha", targets_json(alpha)},
        {"lebesgue_constant", m},
        {"nearness", criterion_json(nearness(pairs))},
        {"values_at_z", values},
        {"trace",
         {{"residual_sup", tr.residual_sup},
          {"bound_curve", tr.bound_curve},
          {"M_used", tr.M_used},
          {"epsilon_used", tr.epsilon_used},
          {"converged", tr.converged},
          {"beyond_guaranteed_radius", tr.beyond_guaranteed_radius},
          {"bound_dominated", tr.bound_dominated}}},
    };
    result["sample_radius"] = radius ? json(*radius) : json(nullptr);
    out.structured["results"].push_back(result);
    out.tables.push_back(std::move(t));
    out.series.push_back(std::move(res));
    out.series.push_back(std::move(bound));
  }
}

struct TrialOutcome {
  double r = 0.0;
  std::uint64_t seed = 0;
  double nearness = 0.0;
  PerturbationReport report;
};

void run_perturb(const ExperimentConfig& c, ReportBundle& out) {
  for (std::size_t n : schedule(c)) {
    ZeroSequence a = resolve_sequence(*c.a, n);
    const std::size_t total = c.radii.size() * c.trials;
    std::vector<TrialOutcome> outcomes(total);
    std::vector<std::exception_ptr> errors(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < total; i = next++) {
        try {
          TrialOutcome& o = outcomes[i];
          o.r = c.radii[i / c.trials];
          o.seed = c.seed.value + i;
          PairedSequences p = perturb_sample(a, o.r, RngSeed{o.seed}, c.min_sep);
          o.nearness = p.nearness();
          o.report = perturbation_report(p, o.r, c.grid);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      std::size_t workers = std::min(worker_count(), std::max<std::size_t>(total, 1));
      for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
      worker();
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    std::string sfx = suffix(a.size());
    Table trials{"perturb_trials" + sfx,
                 {"trial", "r", "seed", "nearness", "violations", "pseudo_violations", "C_r", "C1", "C2", "C3",
                  "C4", "D1", "D2", "frostman_A", "frostman_Z", "frostman_Z_envelope"},
                 {}};
    Table summary{"perturb_summary" + sfx,
                  {"r", "trials", "violations", "pseudo_violations", "C_r", "min_C1", "max_C2", "min_C3",
                   "min_C4", "min_D1", "max_D2", "max_frostman_Z", "max_frostman_Z_envelope"},
                  {}};
    Series d1{"perturb_D1" + sfx, "empirical D1 per trial", {}, {}};
    Series d2{"perturb_D2" + sfx, "empirical D2 per trial", {}, {}};
    json trial_json = json::array();
    json summary_json = json::array();
    for (std::size_t ri = 0; ri < c.radii.size(); ++ri) {
      std::size_t violations = 0;
      std::size_t pseudo = 0;
      double inf = std::numeric_limits<double>::infinity();
      double min_c1 = inf, max_c2 = -inf, min_c3 = inf, min_c4 = inf, min_d1 = inf, max_d2 = -inf;
      double max_z = -inf, max_env = -inf, c_r = 0.0;
      for (std::size_t t = 0; t < c.trials; ++t) {
        std::size_t i = ri * c.trials + t;
        const TrialOutcome& o = outcomes[i];
        const PerturbationReport& p = o.report;
        violations += p.violations;
        pseudo += p.pseudo_violations;
        c_r = p.C_r;
        min_c1 = std::min(min_c1, p.empirical_C1);
        max_c2 = std::max(max_c2, p.empirical_C2);
        min_c3 = std::min(min_c3, p.empirical_C3);
        min_c4 = std::min(min_c4, p.empirical_C4);
        min_d1 = std::min(min_d1, p.empirical_D1);
        max_d2 = std::max(max_d2, p.empirical_D2);
        max_z = std::max(max_z, p.frostman_Z);
        max_env = std::max(max_env, p.frostman_Z_envelope);
        trials.rows.push_back({as_int(i), o.r, static_cast<std::int64_t>(o.seed), o.nearness,
                               as_int(p.violations), as_int(p.pseudo_violations), p.C_r, p.empirical_C1,
                               p.empirical_C2, p.empirical_C3, p.empirical_C4, p.empirical_D1,
                               p.empirical_D2, p.frostman_A, p.frostman_Z, p.frostman_Z_envelope});
        d1.x.push_back(static_cast<double>(i));
        d1.y.push_back(p.empirical_D1);
        d2.x.push_back(static_cast<double>(i));
        d2.y.push_back(p.empirical_D2);
        trial_json.push_back({{"trial", i},
                              {"r", o.r},
                              {"seed", o.seed},
                              {"nearness", o.nearness},
                              {"violations", p.violations},
                              {"pseudo_violations", p.pseudo_violations},
                              {"C_r", p.C_r},
                              {"C1", p.empirical_C1},
                              {"C2", p.empirical_C2},
                              {"C3", p.empirical_C3},
                              {"C4", p.empirical_C4},
                              {"D1", p.empirical_D1},
                              {"D2", p.empirical_D2},
                              {"frostman_A", p.frostman_A},
                              {"frostman_Z", p.frostman_Z},
                              {"frostman_Z_envelope", p.frostman_Z_envelope}});
      }
      summary.rows.push_back({c.radii[ri], as_int(c.trials), as_int(violations), as_int(pseudo), c_r, min_c1,
                              max_c2, min_c3, min_c4, min_d1, max_d2, max_z, max_env});
      summary_json.push_back({{"r", c.radii[ri]},
                              {"trials", c.trials},
                              {"violations", violations},
                              {"pseudo_violations", pseudo},
                              {"C_r", c_r},
                              {"min_C1", min_c1},
                              {"max_C2", max_c2},
                              {"min_C3", min_c3},
                              {"min_C4", min_c4},
                              {"min_D1", min_d1},
                              {"max_D2", max_d2},
                              {"max_frostman_Z", max_z},
                              {"max_frostman_Z_envelope", max_env}});
    }
    out.structured["results"].push_back(
        {{"N", a.size()}, {"a", points_json(a)}, {"trials", trial_json}, {"summary", summary_json}});
    out.tables.push_back(std::move(summary));
    out.tables.push_back(std::move(trials));
    out.series.push_back(std::move(d1));
    out.series.push_back(std::move(d2));
  }
}

void run_shift(const ExperimentConfig& c, ReportBundle& out) {
  for (std::size_t n : schedule(c)) {
    ZeroSequence a = resolve_sequence(*c.a, n);
    BlaschkeProduct b(a);
    std::string sfx = suffix(a.size());
    Table roots_t{"shift_roots" + sfx,
                  {"shift_index", "w_re", "w_im", "root_index", "root_re", "root_im", "B_re", "B_im",
                   "residual"},
                  {}};
    Table summary{"shift_summary" + sfx, {"shift_index", "w_re", "w_im", "frostman_original", "frostman_shifted"},
                  {}};
    CriterionReport original = frostman_sum(a, c.grid);
    json shifts = json::array();
    for (std::size_t s = 0; s < c.shift_points.size(); ++s) {
      Complex w = c.shift_points[s];
      ZeroSequence roots = frostman_shift_zeros(b, DiskPoint(w));
      json values = json::array();
      for (std::size_t k = 0; k < roots.size(); ++k) {
        Complex v = b(roots[k]);
        values.push_back(complex_json(v));
        roots_t.rows.push_back({as_int(s), w.real(), w.imag(), as_int(k), roots[k].re(), roots[k].im(), v.real(),
                                v.imag(), std::abs(v - w)});
      }
      CriterionReport shifted = frostman_sum(roots, c.grid);
      summary.rows.push_back({as_int(s), w.real(), w.imag(), original.value, shifted.value});
      shifts.push_back({{"w", complex_json(w)},
                        {"roots", points_json(roots)},
                        {"B_at_roots", values},
                        {"frostman_shifted", criterion_json(shifted)}});
    }
    out.structured["results"].push_back(
        {{"N", a.size()}, {"a", points_json(a)}, {"frostman_original", criterion_json(original)}, {"shifts", shifts}});
    out.tables.push_back(std::move(summary));
    out.tables.push_back(std::move(roots_t));
  }
}

}  // namespace

ZeroSequence resolve_sequence(const SequenceInput& input, std::size_t n) {
  auto cut = [n](ZeroSequence s) {
    if (n == 0) return s;
    if (n > s.size()) {
      invalid("N=" + std::to_string(n) + " exceeds the " + std::to_string(s.size()) + " available points");
    }
    return s.prefix(n);
  };
  switch (input.source) {
    case SequenceInput::Source::file:
      return cut(read_sequence_file(input.file).sequence());
    case SequenceInput::Source::points:
      return cut(ZeroSequence::from_complex(input.points));
    case SequenceInput::Source::generator:
      break;
  }
  std::size_t count = n;
  if (count == 0) {
    if (!input.params.contains("N")) invalid("generator '" + input.generator + "' needs params.N or an N_schedule");
    count = input.params.at("N").get<std::size_t>();
  }
  if (input.generator == "frostman_example") return frostman_example(count);
  return radial_sequence(input.params.at("q").get<double>(), count, input.params.at("arg").get<double>());
}

TargetVector resolve_targets(const TargetRule& input, std::size_t n, RngSeed seed) {
  if (input.mode == "ones") return TargetVector(std::vector<Complex>(n, Complex(1.0, 0.0)));
  if (input.mode == "alternating") {
    std::vector<Complex> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = j % 2 == 0 ? 1.0 : -1.0;
    return TargetVector(std::move(v));
  }
  if (input.mode == "random") return random_targets(n, seed);
  if (input.values.size() < n) {
    invalid("explicit targets list has " + std::to_string(input.values.size()) + " entries, need " +
            std::to_string(n));
  }
  return TargetVector(std::vector<Complex>(input.values.begin(), input.values.begin() + static_cast<long>(n)));
}

std::size_t worker_count() {
  if (const char* env = std::getenv("BLASCHKE_LAB_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ReportBundle run(const ExperimentConfig& config) {
  validate(config);
  ReportBundle out;
  out.structured["kind"] = to_string(config.kind);
  out.structured["config"] = to_json(config);
  out.structured["results"] = json::array();
  switch (config.kind) {
    case Kind::criteria: run_criteria(config, out); break;
    case Kind::interpolate: run_interpolate(config, out); break;
    case Kind::union_: run_union(config, out); break;
    case Kind::nearby: run_nearby(config, out); break;
    case Kind::perturb: run_perturb(config, out); break;
    case Kind::shift: run_shift(config, out); break;
  }
  return out;
}

}  // namespace blaschke_lab::cli
