#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conelab/convex/checks.hpp"
#include "conelab/core/error.hpp"
#include "conelab/hilbert/hilbert_gap.hpp"
#include "conelab/kretschmer/analytic.hpp"
#include "conelab/kretschmer/discretize.hpp"
#include "conelab/kretschmer/witnesses.hpp"
#include "conelab/lp/simplex.hpp"
#include "conelab/pathology/pathology.hpp"
#include "conelab/report/report.hpp"
#include "conelab/socp/socp_gap.hpp"

namespace conelab::report {

struct ScenarioConfig {
  std::string scenario;
  std::map<std::string, std::string> params;  // raw values keyed by flag name without dashes
  std::optional<double> tol;
  std::uint64_t seed = 1;
  Format format = Format::json;
};

inline const std::map<std::string, std::set<std::string>>& scenario_params() {
  static const std::map<std::string, std::set<std::string>> table{
      {"sublinear-checks", {"alpha", "cells", "trunc"}},
      {"pathology", {}},
      {"soc", {"y"}},
      {"hilbert", {"trunc", "witness-m"}},
      {"kretschmer", {"alpha", "delta", "cells", "mode", "b-file"}},
      {"kretschmer-gap", {"alpha", "delta", "gamma", "cells", "mode"}},
      {"unbounded", {"alpha", "eta0", "eta1", "levels", "eps", "cells"}},
      {"discontinuity", {"alpha", "delta", "gamma", "cells"}},
  };
  return table;
}

/// Rejects unknown scenarios and parameters the scenario does not read.
inline void validate(const ScenarioConfig& cfg) {
  const auto& table = scenario_params();
  const auto it = table.find(cfg.scenario);
  if (it == table.end()) throw Error("usage", "scenario: unknown scenario '" + cfg.scenario + "'");
  for (const auto& [k, v] : cfg.params) {
    (void)v;
    if (!it->second.count(k)) throw Error("usage", k + ": not a parameter of scenario '" + cfg.scenario + "'");
  }
  if (cfg.tol && !(*cfg.tol >= 0)) throw Error("usage", "tol: must be >= 0");
}

namespace detail {

/// Typed access to raw parameters; each resolved value is echoed into the report.
class Params {
public:
  Params(const ScenarioConfig& cfg, Report& rep) : cfg_(cfg), rep_(rep) {}

  Rational rational(const std::string& name, const std::string& fallback) {
    const std::string raw = raw_or(name, fallback);
    try {
      Rational q = parse_rational(raw);
      rep_.params[name] = q;
      return q;
    } catch (const Error&) {
      throw Error("usage", name + ": not a number: '" + raw + "'");
    }
  }

  std::size_t nat(const std::string& name, std::size_t fallback) {
    const std::string raw = raw_or(name, std::to_string(fallback));
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(raw, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != raw.size() || raw.empty() || raw[0] == '-') throw Error("usage", name + ": not a natural number: '" + raw + "'");
    rep_.params[name] = static_cast<std::int64_t>(v);
    return static_cast<std::size_t>(v);
  }

  std::vector<Rational> list(const std::string& name, const std::string& fallback) {
    const std::string raw = raw_or(name, fallback);
    std::vector<Rational> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(parse_rational(item));
      } catch (const Error&) {
        throw Error("usage", name + ": not a number list: '" + raw + "'");
      }
    }
    if (out.empty()) throw Error("usage", name + ": empty list");
    rep_.params[name] = raw;
    return out;
  }

  std::string text(const std::string& name, const std::string& fallback) {
    const std::string raw = raw_or(name, fallback);
    rep_.params[name] = raw;
    return raw;
  }

  bool given(const std::string& name) const { return cfg_.params.count(name) > 0; }

  double tol(double fallback) {
    const double t = cfg_.tol.value_or(fallback);
    rep_.params["tol"] = t;
    return t;
  }

private:
  std::string raw_or(const std::string& name, const std::string& fallback) const {
    const auto it = cfg_.params.find(name);
    return it == cfg_.params.end() ? fallback : it->second;
  }

  const ScenarioConfig& cfg_;
  Report& rep_;
};

inline kretschmer::Mode parse_mode(const std::string& s) {
  if (s == "exact") return kretschmer::Mode::exact;
  if (s == "sampled") return kretschmer::Mode::sampled;
  throw Error("usage", "mode: expected 'exact' or 'sampled', got '" + s + "'");
}

inline std::string key(const std::string& prefix, std::size_t k, const std::string& field) {
  return prefix + std::to_string(k) + "." + field;
}

inline void run_sublinear(Params& p, Report& rep, std::uint64_t seed) {
  const Rational alpha = p.rational("alpha", "2");
  const std::size_t cells = p.nat("cells", 8);
  const std::size_t trunc = p.nat("trunc", 8);
  if (cells < 1 || trunc < 1) throw Error("usage", "cells/trunc: must be >= 1");
  const std::size_t samples = 200;
  rep.results["samples"] = static_cast<std::int64_t>(samples);
  const std::vector<Rational> scales{Rational(1, 2), Rational(2), Rational(3)};

  auto suite = [&](const std::string& name, const auto& f) {
    using V = typename std::decay_t<decltype(f)>::value_type;
    const auto h = convex::check_positive_homogeneity(f, samples, scales, V(0), seed);
    const auto s = convex::check_subadditivity(f, samples, V(0), seed + 1);
    rep.results[name + ".homogeneity_failures"] = static_cast<std::int64_t>(h.witnesses.size());
    rep.results[name + ".subadditivity_failures"] = static_cast<std::int64_t>(s.witnesses.size());
    rep.check(name + "-homogeneity", h.pass);
    rep.check(name + "-subadditivity", s.pass);
  };
  suite("soc", socp::oracle());
  suite("hilbert", hilbert::oracle(hilbert::HilbertModel::dyadic(trunc)));
  suite("kretschmer", kretschmer::oracle(alpha, cells));

  using namespace pathology;
  const auto g3 = oracle(PathologyKind::g3);
  const SparseSeq zero, x = -SparseSeq::basis(1);
  const auto lsc = convex::liminf_along(g3, zero, lsc_witness(zero), 64);
  const Rational lsc_gap = lsc.f_at_base.value() - lsc.estimate.value();
  const auto usc = convex::limsup_along(g3, x, usc_witness(x), 64);
  const Rational usc_gap = usc.estimate.value() - usc.f_at_base.value();
  rep.results["g3.lsc_gap"] = lsc_gap;
  rep.results["g3.usc_gap"] = usc_gap;
  rep.check("g3-lsc-gap-is-1", lsc.violated && lsc_gap == 1);
  rep.check("g3-usc-gap-is-abs-phi", usc.violated && usc_gap == abs(phi(x)));
}

inline void run_pathology(Params&, Report& rep, std::uint64_t seed) {
  using namespace pathology;
  const auto g3 = oracle(PathologyKind::g3);
  const SparseSeq zero, x = -SparseSeq::basis(1);

  const auto lsc0 = convex::liminf_along(g3, zero, lsc_witness(zero), 64);
  rep.results["lsc_at_0.liminf"] = lsc0.estimate;
  rep.results["lsc_at_0.value"] = lsc0.f_at_base;
  rep.check("lsc-violated-at-0", lsc0.violated && lsc0.estimate == ExtRational(Rational(-1)));

  const auto lsc1 = convex::liminf_along(g3, x, lsc_witness(x), 64);
  rep.results["lsc_at_minus_e1.liminf"] = lsc1.estimate;
  rep.results["lsc_at_minus_e1.value"] = lsc1.f_at_base;
  rep.check("lsc-violated-at-minus-e1", lsc1.violated && lsc1.estimate == ExtRational(Rational(-2)));

  const auto usc1 = convex::limsup_along(g3, x, usc_witness(x), 64);
  const auto usc1_inf = convex::liminf_along(g3, x, usc_witness(x), 64);
  rep.results["usc_at_minus_e1.limsup"] = usc1.estimate;
  rep.results["usc_at_minus_e1.value"] = usc1.f_at_base;
  rep.check("usc-violated-at-minus-e1", usc1.violated && usc1.estimate == ExtRational(Rational(0)) && !usc1_inf.violated);

  bool unbounded = true;
  for (std::size_t n = 1; n <= 100; ++n)
    unbounded = unbounded && phi(SparseSeq::basis(n)) == Rational(static_cast<unsigned long>(n));
  rep.check("phi-grows-on-unit-vectors", unbounded, "phi(e_n) = n for n <= 100");

  const std::vector<SparseSeq> candidates{SparseSeq::basis(1), -SparseSeq::basis(1),
                                          SparseSeq::basis(1) + SparseSeq::basis(3, 2), SparseSeq()};
  std::size_t rejected = 0;
  for (const auto& xs : candidates) {
    const auto r = convex::subdiff_zero_membership(g3, xs, 50, seed, refutation_points(xs));
    if (!r.accepted) ++rejected;
  }
  rep.results["subdiff_candidates"] = static_cast<std::int64_t>(candidates.size());
  rep.results["subdiff_rejected"] = static_cast<std::int64_t>(rejected);
  rep.check("g3-subdifferential-at-0-empty-on-candidates", rejected == candidates.size());
}

inline void run_soc(Params& p, Report& rep, double tol) {
  const auto ys = p.list("y", "5,3,0");
  if (ys.size() != 3) throw Error("usage", "y: expected three comma-separated numbers");
  const socp::SocPoint y{ys[0], ys[1], ys[2]};
  const auto v = socp::value(y);
  const auto bi = socp::biconjugate_value(y);
  const auto box = socp::default_box(y);
  const auto brute = socp::brute_value(y, box, 401);
  const auto est = convex::liminf_along(socp::oracle(), socp::to_vec(y), socp::approach_from_below(y), 20);
  rep.results["value"] = v;
  rep.results["biconjugate"] = bi;
  rep.results["brute_value"] = brute;
  rep.results["liminf_along_approach"] = est.estimate;
  rep.results["lsc_violated"] = est.violated;
  rep.analytic["value_closed_form"] = std::string("y2 if y3 = 0 and y2 >= 0; 0 if y3 < 0; +inf otherwise");

  bool brute_ok;
  std::string detail;
  if (!v.is_finite()) {
    brute_ok = brute.is_pos_inf();
  } else if (!brute.is_finite()) {
    brute_ok = false;
    detail = "no grid point is feasible; pick y2 on the grid";
  } else {
    brute_ok = brute >= v && Rational(brute.value() - v.value()).get_d() <= tol;
  }
  rep.check("brute-force-agrees", brute_ok, detail);
  rep.check("biconjugate-below-value", bi <= v);
  const bool expect_violation = sgn(y.y3) == 0 && sgn(y.y2) != 0;
  rep.check("lsc-failure-matches-closed-form", est.violated == expect_violation);
  rep.check("dual-feasible-set", socp::dual_feasible({0, 0, 1}) && !socp::dual_feasible({0, 1, 1}) &&
                                     !socp::dual_feasible({1, 0, 0}));
}

inline void run_hilbert(Params& p, Report& rep, std::uint64_t seed, double tol) {
  const std::size_t trunc = p.nat("trunc", 16);
  if (trunc < 1 || trunc > 30) throw Error("usage", "trunc: must lie in 1..30");
  const std::size_t wm = p.nat("witness-m", std::min<std::size_t>(16, trunc));
  if (wm > trunc) throw Error("usage", "witness-m: must not exceed trunc");
  const auto model = hilbert::HilbertModel::dyadic(trunc);
  const auto y = hilbert::sample_domain(model, 1, seed).front();

  const auto v = hilbert::value(model, y).value();
  const auto sol = lp::solve(hilbert::truncated_lp(model, y));
  const double diff = std::abs(sol.value.value().get_d() - v.to_double());
  const auto lambda = hilbert::recover_primal(model, y);
  bool same_point = sol.primal.has_value();
  for (std::size_t n = 1; same_point && n <= trunc; ++n) same_point = (*sol.primal)[n - 1] == lambda.get(n);
  const auto dual = hilbert::truncated_dual_optimum(model, y);

  rep.results["y"] = y.describe();
  rep.results["value"] = v.to_double();
  rep.results["value_exact"] = v.describe();
  rep.results["lp_value"] = sol.value.value().get_d();
  rep.results["dual_value"] = dual.dual_value.to_double();
  rep.results["dual_norm_lower_bound"] = hilbert::dual_norm_lower_bound(model);
  rep.check("lp-matches-closed-form", diff <= tol, "difference " + field_text(diff));
  rep.check("lp-primal-is-recovered-point", same_point);
  rep.check("truncated-strong-duality", dual.strong_duality);
  rep.check("dual-norm-bound-grows", hilbert::dual_norm_sq_lower_bound(model) >= Rational(static_cast<unsigned long>(trunc)) - Rational(1, 3));

  bool value_ok = true, dist_ok = true;
  for (const auto& w : hilbert::lsc_failure_witness(model, {}, wm)) {
    if (w.m == 0) continue;
    const double sh = std::sqrt(w.harmonic.get_d());
    rep.results[key("witness.m", w.m, "value")] = w.value;
    rep.results[key("witness.m", w.m, "distance")] = w.distance;
    value_ok = value_ok && w.value <= w.value_bound + tol && w.value <= -0.8 * sh;
    dist_ok = dist_ok && w.distance <= 1.3 / sh;
  }
  rep.check("witness-values-diverge", value_ok);
  rep.check("witness-distances-shrink", dist_ok);
}

inline void run_kretschmer(Params& p, Report& rep) {
  using namespace kretschmer;
  const Rational alpha = p.rational("alpha", "2");
  const Mode mode = parse_mode(p.text("mode", "exact"));
  GridQ b;
  std::optional<Rational> delta;
  if (p.given("b-file")) {
    const std::string path = p.text("b-file", "");
    std::ifstream in(path);
    if (!in) throw Error("usage", "b-file: cannot open '" + path + "'");
    b = read_csv(in);
  } else {
    delta = p.rational("delta", "1/2");
    b = indicator(p.nat("cells", 8), 0, *delta);
  }
  const std::size_t n = b.cells();
  const auto primal = solve_primal({alpha, b, mode});
  const auto exact = mode == Mode::exact ? primal : solve_primal({alpha, b, Mode::exact});
  const auto dual = solve_dual({alpha, b, Mode::exact});
  rep.results["cells"] = static_cast<std::int64_t>(n);
  rep.results["primal"] = primal.value;
  rep.results["dual"] = dual.value;
  rep.results["bracket_width"] = Rational(exact.value - dual.value);
  rep.results["reduced_rows"] = static_cast<std::int64_t>(primal.reduced_rows);
  rep.check("dual-below-exact-primal", dual.value <= exact.value);
  if (mode == Mode::sampled) rep.check("sampled-below-exact", primal.value <= exact.value);

  if (delta && sgn(alpha) > 0) {
    const auto a = analytic_values(alpha, OneSided{*delta});
    rep.analytic["valP"] = a.valP;
    rep.analytic["valD"] = a.valD;
    rep.analytic["primal_attained"] = a.primal_attained;
    rep.check("dual-equals-analytic", dual.value == a.valD);
    rep.check("exact-primal-above-analytic", exact.value >= a.valP);
    const Rational grid_formula = std::min(alpha, Rational(*delta + Rational(1) / Rational(2 * static_cast<unsigned long>(n))));
    rep.check("exact-primal-matches-grid-formula", exact.value == grid_formula, "min{alpha, delta + 1/(2n)}");
  }
}

inline void run_gap(Params& p, Report& rep) {
  using namespace kretschmer;
  const Rational alpha = p.rational("alpha", "2");
  const Rational delta = p.rational("delta", "0");
  const Rational gamma = p.rational("gamma", "0");
  const std::size_t cells = p.nat("cells", 8);
  const Mode mode = parse_mode(p.text("mode", "exact"));
  const auto a = analytic_values(alpha, TwoSided{delta, gamma});
  const GridQ b = indicator_two_sided(cells, delta, gamma);
  const auto primal = solve_primal({alpha, b, mode});
  const auto dual = solve_dual({alpha, b, mode});
  const Rational gap = primal.value - dual.value;
  rep.results["primal"] = primal.value;
  rep.results["dual"] = dual.value;
  rep.results["gap"] = gap;
  rep.analytic["valP"] = a.valP;
  rep.analytic["valD"] = a.valD;
  rep.analytic["gap"] = Rational(a.valP - a.valD);
  if (mode == Mode::exact) {
    rep.check("primal-equals-analytic", primal.value == a.valP);
    rep.check("dual-equals-analytic", dual.value == a.valD);
    rep.check("gap-equals-analytic", gap == a.valP - a.valD);
  } else {
    rep.check("sampled-below-exact", primal.value <= primal_value(alpha, b, Mode::exact));
    rep.check("dual-equals-analytic", dual.value == a.valD);
  }
}

inline void run_unbounded(Params& p, Report& rep, double tol) {
  using namespace kretschmer;
  const Rational alpha = p.rational("alpha", "2");
  const Rational eta0 = p.rational("eta0", "1/4");
  const Rational eta1 = p.rational("eta1", "1/2");
  const std::size_t levels = p.nat("levels", 4);
  const Rational eps = p.rational("eps", "1");
  if (levels < 1 || levels > 20) throw Error("usage", "levels: must lie in 1..20");
  const std::size_t grid = p.nat("cells", std::size_t{1} << (levels + 2));

  bool bound_ok = true, increasing = true;
  Rational prev;
  for (std::size_t k = 1; k <= levels; ++k) {
    const auto w = unboundedness_witness(alpha, eta0, eta1, k, eps, grid);
    rep.results[key("level", k, "discrete_value")] = w.discrete_value;
    rep.results[key("level", k, "analytic_bound")] = w.analytic_bound;
    bound_ok = bound_ok && w.discrete_value.get_d() >= w.analytic_bound - tol;
    if (k > 1) increasing = increasing && w.discrete_value > prev;
    prev = w.discrete_value;
    if (k == levels) {
      rep.results["norm"] = std::sqrt(w.y.norm_sq());
      rep.results["ess_sup"] = w.y.ess_sup();
    }
  }
  const auto part = split_measure(cells_of(grid, eta0, eta1), levels);
  const auto yt = build_ytilde(part, grid);
  bool norms_ok = true;
  for (std::size_t k = 0; k < levels; ++k) norms_ok = norms_ok && std::abs(yt.norm_sq[k] - yt.norm_sq_closed[k]) <= 1e-12;
  rep.analytic["bound"] = eta0.get_d() * (-1.0 + level_height(levels) * eps.get_d());
  rep.check("discrete-value-above-bound", bound_ok);
  rep.check("values-increase-with-level", increasing);
  rep.check("ytilde-norms-match-closed-form", norms_ok);
}

inline void run_discontinuity(Params& p, Report& rep) {
  using namespace kretschmer;
  const Rational alpha = p.rational("alpha", "2");
  const Rational delta = p.rational("delta", "1/4");
  const auto gammas = p.list("gamma", "3/4,15/16,63/64");
  const std::size_t grid = p.nat("cells", 64);
  const auto rows = discontinuity_scenario(alpha, delta, gammas, grid);
  const Rational half_cell = Rational(1) / Rational(2 * static_cast<unsigned long>(grid));
  const Rational base = rows.front().discrete_valP;
  rep.results["base.discrete_valP"] = base;
  rep.analytic["base.valP"] = rows.front().analytic_valP;
  bool all_alpha = true, shrinking = true;
  Rational prev_norm = 2;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    rep.results[key("gamma", i, "gamma")] = *r.gamma;
    rep.results[key("gamma", i, "norm")] = r.perturbation_norm;
    rep.results[key("gamma", i, "discrete_valP")] = r.discrete_valP;
    rep.analytic[key("gamma", i, "valP")] = r.analytic_valP;
    all_alpha = all_alpha && r.discrete_valP == alpha && r.analytic_valP == alpha;
    shrinking = shrinking && r.perturbation_norm_sq < prev_norm;
    prev_norm = r.perturbation_norm_sq;
  }
  const Rational jump = alpha - base;
  rep.results["certified_jump"] = jump;
  rep.check("perturbed-values-equal-alpha", all_alpha);
  rep.check("perturbation-norms-decrease", shrinking);
  rep.check("base-value-near-delta", base <= delta + half_cell);
  rep.check("jump-certified", jump >= alpha - delta - half_cell);
}

} // namespace detail

/// Runs one scenario. Usage errors name the offending field.
inline Report run(const ScenarioConfig& cfg) {
  validate(cfg);
  Report rep;
  rep.scenario = cfg.scenario;
  rep.params["seed"] = static_cast<std::int64_t>(cfg.seed);
  detail::Params p(cfg, rep);
  const std::string& s = cfg.scenario;
  if (s == "sublinear-checks") detail::run_sublinear(p, rep, cfg.seed);
  else if (s == "pathology") detail::run_pathology(p, rep, cfg.seed);
  else if (s == "soc") detail::run_soc(p, rep, p.tol(0.05));
  else if (s == "hilbert") detail::run_hilbert(p, rep, cfg.seed, p.tol(1e-12));
  else if (s == "kretschmer") detail::run_kretschmer(p, rep);
  else if (s == "kretschmer-gap") detail::run_gap(p, rep);
  else if (s == "unbounded") detail::run_unbounded(p, rep, p.tol(1e-6));
  else detail::run_discontinuity(p, rep);
  return rep;
}

} // namespace conelab::report
