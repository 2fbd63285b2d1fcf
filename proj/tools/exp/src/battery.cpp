#include "charbounds/exp/battery.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "charbounds/charsum.hpp"
#include "charbounds/dirichlet.hpp"
#include "charbounds/errors.hpp"
#include "charbounds/euler.hpp"
#include "charbounds/extremal.hpp"
#include "charbounds/halasz.hpp"
#include "charbounds/pretentious.hpp"
#include "charbounds/exp/baselines.hpp"
#include "charbounds/exp/corpus.hpp"
#include "measures.hpp"

namespace charbounds::exp {

namespace {

using ojson = nlohmann::ordered_json;
using cplx = std::complex<double>;

constexpr std::size_t kMaxFailureLines = 20;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

DirichletCharacter quadratic_mod(u64 q) {
  CharacterFilter f;
  f.order_equals = 2;
  f.primitive_only = true;
  const auto chars = enumerate_characters(build_group(q), f);
  if (chars.empty()) throw DomainError("no primitive quadratic character mod " + std::to_string(q));
  return chars.front();
}

nlohmann::json baselines_for(const ExperimentConfig& config) {
  return load_baselines(config.baseline.empty() ? default_baseline_path() : config.baseline);
}

void gauss(const ExperimentConfig& c, BatteryResult& r) {
  const u64 lo = c.q_min.value_or(1), hi = c.q_max.value_or(300);
  CharacterFilter f;
  f.primitive_only = true;
  u64 count = 0;
  double worst = 0.0;
  for (u64 q = lo; q <= hi; ++q) {
    if (q < 3 || !may_have_characters(q, f)) continue;
    double q_worst = 0.0;
    u64 n = 0;
    for (const auto& chi : enumerate_characters(build_group(q), f)) {
      const double err = std::abs(std::norm(gauss_sum(chi)) - static_cast<double>(q)) / static_cast<double>(q);
      q_worst = std::max(q_worst, err);
      r.check(err < 1e-6, "|tau|^2 != q for q=" + std::to_string(q) + " index=" + std::to_string(chi.index()));
      ++n;
    }
    count += n;
    worst = std::max(worst, q_worst);
    r.cases.push_back({{"q", q}, {"characters", n}, {"max_rel_error", q_worst}});
  }
  r.summary["characters"] = count;
  r.summary["max_rel_error"] = worst;
}

void lemma_max(const ExperimentConfig& c, BatteryResult& r) {
  const std::vector<int> gs = c.order ? std::vector<int>{*c.order} : std::vector<int>{3, 5, 7, 9};
  double worst = 0.0;
  for (const int g : gs)
    for (int k = 2; k <= 24; k += 2) {
      double gk_worst = 0.0;
      for (int j = 0; j < 97; ++j) {
        const auto v = lemma_max_average(g, k, j / 97.0);
        gk_worst = std::max(gk_worst, std::abs(v.brute - v.closed));
      }
      r.check(gk_worst < 1e-10, "g=" + std::to_string(g) + " k=" + std::to_string(k) + " defect " + fmt(gk_worst));
      worst = std::max(worst, gk_worst);
      r.cases.push_back({{"g", g}, {"k", k}, {"thetas", 97}, {"max_defect", gk_worst}});
    }
  const auto anchor = lemma_max_average(3, 2, 0.0);
  r.check(std::abs(anchor.closed - 0.75) < 1e-12 && std::abs(anchor.brute - 0.75) < 1e-12,
          "anchor g=3 k=2 theta=0 is not 3/4");
  r.summary["max_defect"] = worst;
  r.summary["anchor"] = anchor.closed;
}

void fn_integral(const ExperimentConfig&, BatteryResult& r) {
  const std::pair<double, double> ranges[] = {{1, 10}, {1, 1000}, {0.01, 1}, {0.01, 100}};
  double worst = 0.0, worst_quad = 0.0;
  for (int n = 3; n <= 60; ++n)
    for (const auto& [A, B] : ranges) {
      const auto v = fn_log_integral(n, A, B);
      const std::string at = "n=" + std::to_string(n) + " A=" + fmt(A) + " B=" + fmt(B);
      r.check(std::abs(v.defect) <= 4.0, at + " defect " + fmt(v.defect));
      r.check(v.quad_error < 1e-8, at + " quadrature error " + fmt(v.quad_error));
      worst = std::max(worst, std::abs(v.defect));
      worst_quad = std::max(worst_quad, v.quad_error);
      r.cases.push_back({{"n", n}, {"A", A}, {"B", B}, {"integral", v.integral}, {"main_term", v.main_term},
                         {"defect", v.defect}, {"quad_error", v.quad_error}});
    }
  r.summary["max_abs_defect"] = worst;
  r.summary["max_quad_error"] = worst_quad;
}

void grso_identity(const ExperimentConfig& c, BatteryResult& r) {
  const u64 primes[] = {13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  const u64 Ns[] = {1000, 100000};
  const double y_small = c.y.value_or(30.0);
  double worst = 0.0;
  u64 checks = 0;
  for (const u64 q : primes) {
    const auto group = build_group(q);
    for (const auto& chi : {character_from_index(group, 1), quadratic_mod(q)}) {
      double chi_worst = 0.0;
      for (u64 rr = 1; rr <= 12; ++rr)
        for (u64 b = 1; b <= rr; ++b) {
          if (std::gcd(b, rr) != 1) continue;
          for (const u64 N : Ns)
            for (const double y : {static_cast<double>(N), y_small}) {
              const auto rep = grso_identity_check(chi, static_cast<i64>(b), rr, N, y);
              const double scaled = rep.defect / static_cast<double>(rr);
              chi_worst = std::max(chi_worst, scaled);
              r.check(rep.defect <= 1e-8 * static_cast<double>(rr),
                      "q=" + std::to_string(q) + " index=" + std::to_string(chi.index()) + " b=" + std::to_string(b) +
                          " r=" + std::to_string(rr) + " N=" + std::to_string(N) + " y=" + fmt(y) + " |lhs-rhs|=" +
                          fmt(rep.defect));
              ++checks;
            }
        }
      worst = std::max(worst, chi_worst);
      r.cases.push_back({{"q", q}, {"index", chi.index()}, {"order", chi.order()}, {"max_defect_over_r", chi_worst}});
    }
  }
  r.summary["checks"] = checks;
  r.summary["max_defect_over_r"] = worst;
}

void mertens(const ExperimentConfig& c, BatteryResult& r) {
  const double cst = baseline_value(baselines_for(c), "mertens_average_c");
  const u64 lo = std::max<u64>(c.q_min.value_or(3), 3), hi = c.q_max.value_or(100);
  const double X = c.y.value_or(1e5);
  double worst = 0.0;
  for (u64 m = lo; m <= hi; ++m) {
    const auto all = mertens_constants_all(m, X);
    double total = 0.0, abs_total = 0.0, imag = 0.0;
    for (u64 a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      total += all[a].value;
      abs_total += std::abs(all[a].value);
      imag = std::max(imag, std::abs(all[a].imag_residual));
    }
    const double phi = static_cast<double>(euler_phi(m));
    const double expected = -kEulerGamma - std::log(phi / static_cast<double>(m));
    const double growth = abs_total / std::log(std::log(static_cast<double>(m)));
    const std::string at = "m=" + std::to_string(m);
    r.check(std::abs(total - expected) < 1e-9, at + " sum over residues " + fmt(total) + " != " + fmt(expected));
    r.check(imag < 1e-6, at + " imaginary residual " + fmt(imag));
    r.check(growth <= cst, at + " sum |C_m(a)| / log log m = " + fmt(growth) + " exceeds frozen " + fmt(cst));
    worst = std::max(worst, growth);
    r.cases.push_back({{"m", m}, {"sum", total}, {"abs_sum", abs_total}, {"growth", growth}, {"imag_residual", imag}});
  }
  r.summary["X"] = X;
  r.summary["max_growth"] = worst;
  r.summary["frozen_c"] = cst;
}

void halasz(const ExperimentConfig& c, BatteryResult& r) {
  const auto base = baselines_for(c);
  if (!base.contains("halasz_corpus") || !base["halasz_corpus"].is_object())
    throw BaselineError("missing entry 'halasz_corpus'");
  const auto& hb = base["halasz_corpus"];
  const double frozen = baseline_value(base, "halasz_corpus");
  HalaszCorpus corpus;
  corpus.seed = c.seed;
  if (c.grid) corpus.resolution = *c.grid;
  try {
    if (hb.at("count").get<int>() != corpus.count || hb.at("x").get<double>() != corpus.x ||
        hb.at("y").get<double>() != corpus.y || hb.at("T").get<std::vector<double>>() != corpus.Ts)
      throw BaselineError("halasz_corpus parameters (count, x, y, T) differ from the battery corpus");
    if (hb.at("max_ratio_by_T").size() != corpus.Ts.size())
      throw BaselineError("halasz_corpus.max_ratio_by_T has the wrong length");
  } catch (const nlohmann::json::exception& e) {
    throw BaselineError(std::string("halasz_corpus: ") + e.what());
  }
  const auto run = run_halasz_corpus(corpus);
  for (std::size_t i = 0; i < run.reports.size(); ++i) {
    const auto& h = run.reports[i];
    r.check(h.lhs >= 0.0 && h.rhs_main > 0.0 && std::isfinite(h.ratio), "non-finite report");
    r.cases.push_back({{"function", i / corpus.Ts.size()}, {"T", h.T}, {"lhs", h.lhs}, {"rhs_main", h.rhs_main},
                       {"rhs_tail", h.rhs_tail}, {"ratio", h.ratio}, {"min_distance", h.min_distance},
                       {"argmin_t", h.argmin_t}});
  }
  r.check(run.max_ratio_overall <= 1.2 * frozen, "corpus max ratio " + fmt(run.max_ratio_overall) +
                                                     " exceeds 1.2 x frozen baseline " + fmt(frozen));

  const double y = corpus.y;
  const auto minus_one = CMFunction::constant(static_cast<u64>(y), -1.0);
  const auto cx = max_F_distance_check(minus_one, y, 0.5, 1.0 / std::log(y), true, corpus.resolution);
  const double floor_value = 1.0 / boost::math::zeta(1.5) - 1e-3;
  r.check(cx.lhs >= floor_value, "counterexample max|F| = " + fmt(cx.lhs) + " below 1/zeta(3/2) - 1e-3");
  r.cases.push_back({{"counterexample", "f=-1, alpha=1/2, T=1/log y"}, {"lhs", cx.lhs}, {"rhs_main", cx.rhs_main},
                     {"ratio", cx.ratio}, {"floor", floor_value}});

  r.summary["seed"] = corpus.seed;
  r.summary["max_ratio"] = run.max_ratio_overall;
  r.summary["max_ratio_by_T"] = run.max_ratio;
  r.summary["frozen"] = frozen;
  r.summary["counterexample_lhs"] = cx.lhs;
  r.summary["counterexample_ratio"] = cx.ratio;
}

void mindist(const ExperimentConfig& c, BatteryResult& r) {
  const int g = c.order.value_or(3);
  const double y = c.y.value_or(1e4), alpha = c.alpha.value_or(0.5), res = c.grid.value_or(0.01);
  const u64 hi = c.q_max.value_or(1000);
  const auto psi = quadratic_mod(3);
  const auto params = BoundParams::make(g, 2, y, alpha, 3);
  const double rhs = mindist_rhs(params);
  const bool regime = 3.0 <= std::pow(std::log(y), 4.0 * alpha / 7.0);
  CharacterFilter f;
  f.order_equals = static_cast<u64>(g);
  f.primitive_only = true;
  double lowest = INFINITY;
  u64 count = 0;
  for (u64 q = c.q_min.value_or(1); q <= hi; ++q) {
    if (!may_have_characters(q, f)) continue;
    for (const auto& chi : enumerate_characters(build_group(q), f)) {
      const auto fx = CMFunction::from_primes(static_cast<u64>(y), [&](u64 p) {
        return chi(static_cast<i64>(p)) * std::conj(psi(static_cast<i64>(p)));
      });
      const auto m = min_twisted_distance(fx, y, params.T, res);
      const double at_zero = twisted_distance_sq(fx, y, 0.0);
      const std::string at = "q=" + std::to_string(q) + " index=" + std::to_string(chi.index());
      r.check(m.value <= at_zero + 1e-12, at + " minimum above the t=0 value");
      r.check(m.value <= m.grid_value + 1e-12, at + " refinement above grid value");
      r.check(m.value >= m.grid_value - m.grid_error_bound - 1e-12, at + " minimum below the grid error bound");
      r.check(m.value >= -1e-12, at + " negative distance");
      lowest = std::min(lowest, m.value - rhs);
      ++count;
      r.cases.push_back({{"q", q}, {"index", chi.index()}, {"lhs", m.value}, {"rhs_main", rhs},
                         {"defect", m.value - rhs}, {"argmin_t", m.argmin_t}});
    }
  }
  r.summary["g"] = g;
  r.summary["y"] = y;
  r.summary["alpha"] = alpha;
  r.summary["T"] = params.T;
  r.summary["rhs_main"] = rhs;
  r.summary["in_regime"] = regime;
  r.summary["characters"] = count;
  r.summary["min_defect"] = count ? lowest : 0.0;
}

void upper(const ExperimentConfig& c, BatteryResult& r) {
  const int g = c.order.value_or(3);
  const double y = c.y.value_or(1e3);
  const u64 hi = c.q_max.value_or(2000);
  const auto psi = quadratic_mod(3);
  const auto terms = upper2_rhs(g, 2, y);
  r.check(terms.coefficient >= terms.strengthened_coefficient - 1e-15,
          "u/tan u coefficient below the strengthened coefficient");
  if (g == 3) r.check(std::abs(terms.coefficient - 0.25) < 1e-12, "coefficient for g=3, k=2 is not 1/4");

  const auto prof = extremal_profile(psi, g, y);
  r.check(prof.matches > 0 && prof.chi.has_value(), "no character matched the prescribed small-prime values");
  r.check(std::abs(prof.defect) <= 1.5, "extremal defect " + fmt(prof.defect) + " exceeds 1.5");
  r.check(std::abs(prof.opt_coefficient - terms.coefficient) < 1e-12, "profile coefficient differs from upper2 coefficient");

  const auto g1 = CMFunction::from_character(psi, static_cast<u64>(y));
  CharacterFilter f;
  f.order_equals = static_cast<u64>(g);
  f.primitive_only = true;
  double lowest = INFINITY;
  u64 count = 0;
  for (u64 q = c.q_min.value_or(1); q <= hi; ++q) {
    if (!may_have_characters(q, f)) continue;
    for (const auto& chi : enumerate_characters(build_group(q), f)) {
      const double d = distance_sq(CMFunction::from_character(chi, static_cast<u64>(y)), g1, y).value;
      lowest = std::min(lowest, d - terms.main);
      ++count;
      r.cases.push_back({{"q", q}, {"index", chi.index()}, {"distance_sq", d}, {"main", terms.main},
                         {"defect", d - terms.main}});
    }
  }
  r.summary["g"] = g;
  r.summary["y"] = y;
  r.summary["coefficient"] = terms.coefficient;
  r.summary["strengthened_coefficient"] = terms.strengthened_coefficient;
  r.summary["main"] = terms.main;
  r.summary["extremal_q"] = prof.chi ? prof.chi->modulus() : 0;
  r.summary["extremal_index"] = prof.chi ? prof.chi->index() : 0;
  r.summary["extremal_matches"] = prof.matches;
  r.summary["extremal_distance_sq"] = prof.achieved;
  r.summary["extremal_defect"] = prof.defect;
  r.summary["characters"] = count;
  r.summary["min_defect"] = count ? lowest : 0.0;
}

void pvapp(const ExperimentConfig& c, BatteryResult& r) {
  const double bound = baseline_value(baselines_for(c), "pvapp_bound");
  const u64 lo = std::max<u64>(c.q_min.value_or(3), 3), hi = c.q_max.value_or(500);
  double worst = 0.0;
  for (u64 q = lo; q <= hi; ++q) {
    const auto e = detail::pvapp_max(q, q, 1000000, 1e6);
    r.check(e.value <= bound, "q=" + std::to_string(q) + " index=" + std::to_string(e.index) + " difference " +
                                  fmt(e.value) + " exceeds " + fmt(bound));
    worst = std::max(worst, e.value);
    r.cases.push_back({{"q", q}, {"max_difference", e.value}, {"at_index", e.index}});
  }
  r.summary["max_difference"] = worst;
  r.summary["bound"] = bound;
}

const std::map<std::string, std::function<void(const ExperimentConfig&, BatteryResult&)>>& registry() {
  static const std::map<std::string, std::function<void(const ExperimentConfig&, BatteryResult&)>> m = {
      {"gauss", gauss},   {"lemma-max", lemma_max}, {"fn-integral", fn_integral}, {"grso-identity", grso_identity},
      {"mertens", mertens}, {"halasz", halasz},     {"mindist", mindist},         {"upper", upper},
      {"pvapp", pvapp}};
  return m;
}

}  // namespace

void BatteryResult::fail(const std::string& why) {
  pass = false;
  ++failure_count;
  if (failures.size() < kMaxFailureLines) failures.push_back(why);
}

bool BatteryResult::check(bool ok, const std::string& why) {
  if (!ok) fail(why);
  return ok;
}

const std::vector<std::string>& battery_names() {
  static const std::vector<std::string> names = {"gauss",   "lemma-max", "fn-integral", "grso-identity", "mertens",
                                                 "halasz",  "mindist",   "upper",       "pvapp"};
  return names;
}

BatteryResult run_battery(const std::string& name, const ExperimentConfig& config) {
  config.validate();
  const auto& reg = registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw ConfigError("battery", "unknown battery '" + name + "'");
  BatteryResult r;
  r.name = name;
  try {
    it->second(config, r);
  } catch (const BaselineError& e) {
    r.fail(e.what());
  }
  r.summary["pass"] = r.pass;
  r.summary["failures"] = r.failure_count;
  return r;
}

}  // namespace charbounds::exp
