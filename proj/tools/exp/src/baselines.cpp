#include "charbounds/exp/baselines.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "charbounds/exp/corpus.hpp"
#include "measures.hpp"

namespace charbounds::exp {

namespace {

double round_sig(double x, int digits, bool up) {
  const double scale = std::pow(10.0, std::floor(std::log10(x)) - (digits - 1));
  const double v = (up ? std::ceil(x / scale) : std::floor(x / scale)) * scale;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json where(const detail::Extremum& e) {
  return {{"measured", e.value}, {"at_q", e.q}, {"at_index", e.index}};
}

}  // namespace

std::string default_baseline_path() { return CHARBOUNDS_DEFAULT_BASELINES; }

nlohmann::json load_baselines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BaselineError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw BaselineError("'" + path + "' is not valid JSON (" + e.what() + ")");
  }
}

double baseline_value(const nlohmann::json& baselines, const std::string& key) {
  if (!baselines.contains(key) || !baselines[key].is_object() || !baselines[key].contains("value"))
    throw BaselineError("missing entry '" + key + ".value'");
  const auto& v = baselines[key]["value"];
  if (!v.is_number()) throw BaselineError("'" + key + ".value' is not a number");
  const double d = v.get<double>();
  if (!(std::isfinite(d) && d > 0.0)) throw BaselineError("'" + key + ".value' must be finite and positive");
  return d;
}

nlohmann::ordered_json run_pilot(const ExperimentConfig& config, std::ostream* progress) {
  auto note = [&](const std::string& s) {
    if (progress) *progress << s << std::endl;
  };
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["_provenance"] = "charbounds pilot --seed " + std::to_string(config.seed) + " (" + build_id() +
                       "); each entry names its scan. Upper constants are rounded up and lower constants "
                       "rounded down to 4 significant digits.";

  note("polya");
  {
    const auto e = detail::polya_max_defect(50, 200);
    auto j = where(e);
    j["value"] = 5.0;
    j["scan"] = "primitive chi, 50 <= q <= 200, N = q^2, max over t of |partial sum - expansion|";
    doc["polya_C"] = j;
  }

  note("pvapp");
  {
    const auto e = detail::pvapp_max(3, 500, 1000000, 1e6);
    auto j = where(e);
    j["value"] = 0.05;
    j["scan"] = "non-principal chi mod q <= 500, |partial_sum_L1(N=1e6) - truncated_L1(X=1e6)|";
    doc["pvapp_bound"] = j;
  }

  note("k_chi");
  {
    const auto e = detail::k_chi_sup(100, 10000);
    auto j = where(e);
    j["value"] = round_sig(e.value, 4, true);
    j["scan"] = "chi mod q <= 100, primes p <= 1e4, max p |k_chi(p)|";
    doc["k_chi_C"] = j;
  }

  note("mertens");
  {
    const auto e = detail::mertens_growth(3, 100, 1e5);
    auto j = where(e);
    j["value"] = round_sig(e.value, 4, true);
    j["scan"] = "3 <= m <= 100, X = 1e5, max of sum_a |C_m(a)| / log log m";
    doc["mertens_average_c"] = j;
  }

  note("charsum_L1");
  {
    const auto e = detail::charsum_L1_min(10000, 1e5);
    auto j = where(e);
    j["value"] = round_sig(e.value, 4, false);
    j["q_max"] = 10000;
    j["X"] = 1e5;
    j["scan"] = "odd primitive quadratic chi, q <= 1e4, psi trivial, min (M + sqrt q) / (sqrt q |L_X(1, chi)|)";
    doc["charsum_L1_min_ratio"] = j;
  }

  note("halasz");
  {
    HalaszCorpus corpus;
    corpus.seed = config.seed;
    const auto run = run_halasz_corpus(corpus);
    nlohmann::ordered_json j;
    j["value"] = round_sig(run.max_ratio_overall, 4, true);
    j["seed"] = corpus.seed;
    j["count"] = corpus.count;
    j["x"] = corpus.x;
    j["y"] = corpus.y;
    j["T"] = corpus.Ts;
    j["resolution"] = corpus.resolution;
    nlohmann::ordered_json per_t = nlohmann::ordered_json::array();
    for (const double r : run.max_ratio) per_t.push_back(round_sig(r, 4, true));
    j["max_ratio_by_T"] = per_t;
    j["measured"] = run.max_ratio_overall;
    j["scan"] = "random unimodular f, halasz_bound_check at each T, max ratio";
    doc["halasz_corpus"] = j;
  }
  return doc;
}

}  // namespace charbounds::exp
