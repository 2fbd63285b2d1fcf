#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charbounds/dirichlet.hpp"
#include "charbounds/errors.hpp"
#include "charbounds/euler.hpp"
#include "charbounds/extremal.hpp"
#include "charbounds/halasz.hpp"
#include "charbounds/pretentious.hpp"
#include "charbounds/exp/baselines.hpp"
#include "charbounds/exp/battery.hpp"
#include "charbounds/exp/corpus.hpp"
#include "charbounds/exp/io.hpp"
#include "charbounds/exp/sweep.hpp"

namespace cb = charbounds;
namespace ex = charbounds::exp;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCapacity = 3 };

// Flag storage shared by the subcommands; presence is read back per subcommand.
struct Flags {
  std::uint64_t q_min = 0, q_max = 0;
  int order = 0;
  double y = 0, T = 0, alpha = 0, grid = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string out, format = "jsonl", baseline;
  bool timing = false;
  void add(CLI::App* app, const std::vector<std::string>& names) {
    for (const auto& n : names) {
      if (n == "q-min") app->add_option("--q-min", q_min, "smallest modulus");
      if (n == "q-max") app->add_option("--q-max", q_max, "largest modulus");
      if (n == "order") app->add_option("--order", order, "character order g");
      if (n == "y") app->add_option("--y", y, "prime cutoff y");
      if (n == "T") app->add_option("--T", T, "twist range T");
      if (n == "alpha") app->add_option("--alpha", alpha, "exponent alpha");
      if (n == "grid") app->add_option("--grid", grid, "twist grid resolution (units of 1/log y)");
      if (n == "seed") app->add_option("--seed", seed, "random seed");
      if (n == "threads") app->add_option("--threads", threads, "worker threads");
      if (n == "out") app->add_option("--out", out, "output path ('-' for stdout)");
      if (n == "format") app->add_option("--format", format, "jsonl or csv");
      if (n == "baseline") app->add_option("--baseline", baseline, "baseline file");
      if (n == "timing") app->add_flag("--timing", timing, "record per-character elapsed seconds");
    }
  }

  ex::ExperimentConfig config(const CLI::App* app) const {
    auto has = [app](const std::string& n) {
      const auto* o = app->get_option_no_throw("--" + n);
      return o != nullptr && o->count() > 0;
    };
    ex::ExperimentConfig c;
    c.command = app->get_name();
    if (has("q-min")) c.q_min = q_min;
    if (has("q-max")) c.q_max = q_max;
    if (has("order")) c.order = order;
    if (has("y")) c.y = y;
    if (has("T")) c.T = T;
    if (has("alpha")) c.alpha = alpha;
    if (has("grid")) c.grid = grid;
    c.seed = seed;
    c.threads = threads;
    c.out = out;
    c.format = ex::parse_format(format);
    c.baseline = baseline;
    c.timing = timing;
    return c;
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    path_ = path;
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    stream().flush();
    if (file_ && !*file_) throw std::runtime_error("write to '" + path_ + "' failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

cb::DirichletCharacter character(std::uint64_t q, std::uint64_t index) {
  return cb::character_from_index(cb::build_group(q), index);
}

ojson char_json(const cb::DirichletCharacter& chi) {
  return {{"q", chi.modulus()}, {"index", chi.index()}, {"order", chi.order()},
          {"parity", chi.parity()}, {"conductor", chi.conductor()}};
}

/// "p=num/den" or "p=0".
std::pair<std::uint64_t, cb::CharValue> parse_target(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos) throw ex::ConfigError("target", "expected p=num/den or p=0, got '" + s + "'");
  const std::uint64_t p = std::stoull(s.substr(0, eq));
  const std::string v = s.substr(eq + 1);
  if (v == "0") return {p, cb::CharValue::zero()};
  const auto slash = v.find('/');
  if (slash == std::string::npos) throw ex::ConfigError("target", "expected num/den in '" + s + "'");
  return {p, cb::CharValue::unit(cb::RootOfUnity(std::stoull(v.substr(0, slash)), std::stoull(v.substr(slash + 1))))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet character sum experiments"};
  app.require_subcommand(1);

  Flags f;
  std::string battery_name, in_path;
  std::uint64_t q = 0, index = 0, m = 1, psi_index = 0, modulus = 0;
  double x = 1e5;
  std::vector<std::string> targets;

  auto* sweep = app.add_subcommand("sweep", "M(chi) over primitive characters of a given order");
  f.add(sweep, {"q-min", "q-max", "order", "seed", "threads", "out", "format", "timing"});

  auto* battery = app.add_subcommand("battery", "run a bound-check battery");
  battery->add_option("name", battery_name, "battery name")->required()->check(CLI::IsMember(ex::battery_names()));
  f.add(battery, {"q-min", "q-max", "order", "y", "T", "alpha", "grid", "seed", "out", "baseline"});

  auto* distance = app.add_subcommand("distance", "pretentious distances of a character");
  distance->add_option("--q", q, "modulus of chi")->required();
  distance->add_option("--index", index, "index of chi")->required();
  distance->add_option("--m", m, "modulus of psi");
  distance->add_option("--psi-index", psi_index, "index of psi");
  f.add(distance, {"y", "T", "grid", "out"});

  auto* search = app.add_subcommand("search-prescribed", "characters with prescribed values at small primes");
  search->add_option("--target", targets, "p=num/den or p=0, repeatable");
  f.add(search, {"order", "y", "q-max", "out"});

  auto* mert = app.add_subcommand("mertens", "Mertens constants C_m(a) and prime sums in progressions");
  mert->add_option("--m", modulus, "modulus m")->required();
  mert->add_option("--x", x, "cutoff for the prime sums");
  f.add(mert, {"y", "out"});

  auto* hcheck = app.add_subcommand("halasz-check", "Halasz bound check for a seeded random f");
  hcheck->add_option("--x", x, "length x");
  f.add(hcheck, {"y", "T", "grid", "seed", "out"});

  auto* exp = app.add_subcommand("export", "convert a stored sweep between formats");
  exp->add_option("--in", in_path, "input file")->required();
  f.add(exp, {"format", "out"});

  auto* pilot = app.add_subcommand("pilot", "recompute the frozen constants in the baseline file");
  f.add(pilot, {"seed", "out"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*sweep) {
      const auto cfg = f.config(sweep);
      const auto records = ex::run_sweep(cfg);
      ex::export_records(cfg.out, cfg.format, ex::make_header(cfg, "sweep"), records);
      return kPass;
    }

    if (*battery) {
      auto cfg = f.config(battery);
      cfg.battery = battery_name;
      const auto result = ex::run_battery(battery_name, cfg);
      Output out(cfg.out);
      out.stream() << ex::make_header(cfg, "battery").dump() << '\n';
      for (const auto& c : result.cases) out.stream() << c.dump() << '\n';
      ojson summary = {{"battery", result.name}};
      summary.update(result.summary);
      out.stream() << summary.dump() << '\n';
      out.close();
      for (const auto& why : result.failures) std::cerr << "FAIL " << result.name << ": " << why << '\n';
      if (result.failure_count > result.failures.size())
        std::cerr << "... " << result.failure_count - result.failures.size() << " more\n";
      std::cerr << (result.pass ? "PASS " : "FAIL ") << result.name << '\n';
      return result.pass ? kPass : kFail;
    }

    if (*distance) {
      const auto cfg = f.config(distance);
      cfg.validate();
      const double y = cfg.y.value_or(1e4), T = cfg.T.value_or(1.0), res = cfg.grid.value_or(0.01);
      const auto yb = static_cast<std::uint64_t>(y);
      const auto chi = character(q, index);
      const auto psi = character(m, psi_index);
      const auto fx = cb::CMFunction::from_primes(
          yb, [&](std::uint64_t p) { return chi(static_cast<cb::i64>(p)) * std::conj(psi(static_cast<cb::i64>(p))); });
      const auto one = cb::CMFunction::constant(yb, 1.0);
      const auto mt = cb::min_twisted_distance(fx, y, T, res);
      ojson j = {{"chi", char_json(chi)},
                 {"psi", char_json(psi)},
                 {"y", y},
                 {"T", T},
                 {"distance_sq", cb::distance_sq(fx, one, y).value},
                 {"min_twisted", mt.value},
                 {"argmin_t", mt.argmin_t},
                 {"grid_error_bound", mt.grid_error_bound}};
      Output out(cfg.out);
      out.stream() << j.dump() << '\n';
      out.close();
      return kPass;
    }

    if (*search) {
      const auto cfg = f.config(search);
      cfg.validate();
      cb::PrescribedTargets t;
      t.g = cfg.order.value_or(3);
      t.y = cfg.y.value_or(7.0);
      for (const auto& s : targets) t.targets.insert(parse_target(s));
      const auto r = cb::search_prescribed(t, cfg.q_max.value_or(100000));
      Output out(cfg.out);
      for (const auto& chi : r.matches) out.stream() << char_json(chi).dump() << '\n';
      out.stream() << ojson{{"matches", r.matches.size()}, {"moduli_examined", r.moduli_examined},
                            {"vec_shape", r.vec_shape}}.dump()
                   << '\n';
      out.close();
      return kPass;
    }

    if (*mert) {
      const auto cfg = f.config(mert);
      cfg.validate();
      const double X = cfg.y.value_or(1e6);
      const auto consts = cb::mertens_constants_all(modulus, X);
      const auto ap = cb::mertens_ap_all(x, modulus);
      Output out(cfg.out);
      for (std::uint64_t a = 0; a < modulus; ++a) {
        if (std::isnan(consts[a].value)) continue;
        out.stream() << ojson{{"m", modulus}, {"a", a}, {"X", X}, {"C", consts[a].value},
                              {"imag_residual", consts[a].imag_residual}, {"x", x}, {"prime_sum", ap[a].value},
                              {"main_term", ap[a].main_term}, {"constant_estimate", ap[a].constant_estimate},
                              {"in_regime", ap[a].in_regime}}.dump()
                     << '\n';
      }
      out.close();
      return kPass;
    }

    if (*hcheck) {
      const auto cfg = f.config(hcheck);
      cfg.validate();
      const double y = cfg.y.value_or(x), T = cfg.T.value_or(1.0), res = cfg.grid.value_or(0.01);
      std::mt19937_64 rng(cfg.seed);
      const auto fn = ex::random_unimodular(static_cast<std::uint64_t>(std::max(x, y)), rng);
      const auto r = cb::halasz_bound_check(fn, x, y, T, res);
      Output out(cfg.out);
      out.stream() << ojson{{"seed", cfg.seed}, {"x", r.x}, {"y", r.y}, {"T", r.T}, {"lhs", r.lhs},
                            {"rhs_main", r.rhs_main}, {"rhs_tail", r.rhs_tail}, {"ratio", r.ratio},
                            {"min_distance", r.min_distance}, {"argmin_t", r.argmin_t}}.dump()
                   << '\n';
      out.close();
      return kPass;
    }

    if (*exp) {
      const auto cfg = f.config(exp);
      const auto file = ex::import_records(in_path);
      ojson header = file.header;
      ex::export_records(cfg.out, cfg.format, header, file.records);
      return kPass;
    }

    if (*pilot) {
      const auto cfg = f.config(pilot);
      const auto doc = ex::run_pilot(cfg, &std::cerr);
      Output out(cfg.out);
      out.stream() << doc.dump(2) << '\n';
      out.close();
      return kPass;
    }
  } catch (const ex::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const cb::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const cb::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
