#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trimodal/analytic.hpp"
#include "trimodal/basis.hpp"
#include "trimodal/dynamics.hpp"
#include "trimodal/entanglement.hpp"
#include "trimodal/error.hpp"
#include "trimodal/evolve.hpp"
#include "trimodal/io.hpp"
#include "trimodal/scan.hpp"
#include "trimodal/verify.hpp"

namespace {

using namespace trimodal;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBreach = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("TRIMODAL_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("TRIMODAL_SEED must be a non-negative integer, got '") + env + "'");
  }
}

// Writes to the named file, or stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct ModelOptions {
  int n = 2;
  std::string mode = "large_hopping";
  double r = 1.0;
  double delta = 0.0;
  double xi = 1.0;
};

void add_model_options(CLI::App* cmd, ModelOptions& m) {
  cmd->add_option("--N", m.n, "total local number of the manifold (2, 4, 6, ...)");
  cmd->add_option("--mode", m.mode, "full | large_hopping");
  cmd->add_option("--r", m.r, "coupling ratio g1/g2");
  cmd->add_option("--delta", m.delta, "detuning in units of hbar*g2");
  cmd->add_option("--xi", m.xi, "dimensionless hopping strength");
}

Generator build_generator(int n, GeneratorMode mode, double r, double delta, double xi) {
  const auto manifold = enumerate_manifold(n);
  if (mode == GeneratorMode::full) return build_full_generator(manifold, DressedParams(r, delta), xi);
  return build_large_xi_generator(manifold, xi);
}

std::vector<Complex> parse_args_list(const std::string& text) {
  std::vector<Complex> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

int run_basis(int n, const std::string& out_path) {
  Output out(out_path);
  write_basis_csv(out.stream(), *enumerate_manifold(n));
  return kExitOk;
}

int run_dynamics(const ModelOptions& m, const std::string& dump) {
  const auto gen = build_generator(m.n, parse_mode(m.mode), m.r, m.delta, m.xi);
  if (dump.empty()) {
    nlohmann::json doc = generator_sidecar(gen);
    doc["eigenfrequencies"] = eigenfrequencies(gen);
    doc["hermiticity_defect"] = hermiticity_defect(gen.matrix());
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }
  Output out(dump);
  write_matrix_csv(out.stream(), gen.matrix());
  std::string sidecar = dump;
  const auto dot = sidecar.find_last_of('.');
  const auto slash = sidecar.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) sidecar.resize(dot);
  Output meta(sidecar + ".json");
  meta.stream() << generator_sidecar(gen).dump(2) << '\n';
  return kExitOk;
}

struct EvolveOptions {
  ModelOptions model;
  std::string init;
  std::string times = "0:pi:4097";
  std::string times_in = "xi_t";
  std::string config;
  std::string out;
};

int run_evolve(const EvolveOptions& o, const CLI::App& cmd) {
  RunConfig cfg;
  if (!o.config.empty()) {
    cfg = read_run_config(o.config);
  } else {
    if (o.init.empty()) throw UsageError("evolve needs --init or --config");
    cfg.n_total = o.model.n;
    cfg.mode = parse_mode(o.model.mode);
    cfg.r = o.model.r;
    cfg.delta = o.model.delta;
    cfg.xi = o.model.xi;
    cfg.initial = parse_init_spec(o.init);
  }
  // Explicit flags override the config file.
  if (!o.config.empty()) {
    if (cmd.count("--N")) cfg.n_total = o.model.n;
    if (cmd.count("--mode")) cfg.mode = parse_mode(o.model.mode);
    if (cmd.count("--r")) cfg.r = o.model.r;
    if (cmd.count("--delta")) cfg.delta = o.model.delta;
    if (cmd.count("--xi")) cfg.xi = o.model.xi;
    if (cmd.count("--init")) cfg.initial = parse_init_spec(o.init);
  }
  if (o.config.empty() || cmd.count("--times")) {
    const auto range = parse_time_range(o.times);
    cfg.start = range.lo;
    cfg.stop = range.hi;
    cfg.samples = range.samples ? range.samples : 4097;
  }
  if (o.config.empty() || cmd.count("--times-in")) {
    if (o.times_in == "t") {
      cfg.unit = TimeUnit::t;
    } else if (o.times_in == "xi_t" || o.times_in == "xit") {
      cfg.unit = TimeUnit::xi_t;
    } else {
      throw UsageError("--times-in must be t or xi_t");
    }
  }

  const auto gen = build_generator(cfg.n_total, cfg.mode, cfg.r, cfg.delta, cfg.xi);
  const auto initial = product_state(gen.manifold_ptr(), cfg.initial);
  const auto times = uniform_grid(cfg.start, cfg.stop, cfg.samples);
  const auto traj = propagate(gen, initial, times, cfg.unit);

  std::vector<std::string> metadata = {"config " + emit_run_config(cfg).dump()};
  std::string columns = "basis";
  for (const auto& s : gen.manifold().states()) columns += " " + s.to_string();
  metadata.push_back(columns);

  const std::string path = !o.out.empty() ? o.out : cfg.trajectory_path.value_or("");
  Output out(path);
  write_trajectory_csv(out.stream(), traj, metadata);
  return kExitOk;
}

int run_entangle(const std::string& state_path, int restarts, std::optional<std::uint64_t> seed) {
  const auto state = read_state_file(state_path);
  OverlapOptions options(seed.value_or(default_seed()));
  options.restarts = restarts;
  std::cout << overlap_to_json(max_product_overlap(state, options)).dump(2) << '\n';
  return kExitOk;
}

struct ScanOptions {
  std::string family;
  std::string args;
  std::string objective;
  std::string window = "0:pi";
  std::size_t grid = 0;
  std::string source = "analytic";
  std::string out;
};

int run_scan(const ScanOptions& o) {
  const Family family = parse_family(o.family);
  auto args = o.args.empty() ? family_default_args(family) : parse_args_list(o.args);
  const auto window = parse_time_range(o.window);
  const auto objective = Objective::parse(o.objective);

  Source source;
  if (o.source == "analytic") {
    source = analytic_source(family, args);
  } else if (o.source == "numeric") {
    const auto gen = build_large_xi_generator(enumerate_manifold(family_manifold(family)), 1.0);
    source = numeric_source(gen, family_initial_state(family, args), family);
  } else {
    throw UsageError("--source must be analytic or numeric");
  }
  std::size_t grid = o.grid;
  if (grid == 0) {
    grid = window.samples ? window.samples
                          : static_cast<std::size_t>(std::ceil((window.hi - window.lo) / std::numbers::pi * 4096.0)) + 1;
  }
  const auto found = scan_extrema(objective, source, window.lo, window.hi, grid);

  Output out(o.out);
  auto& s = out.stream();
  s << "# family " << family_key(family) << ", objective " << objective.to_string() << '\n';
  s << "# xi_t,value,kind,refined_to,at_endpoint\n";
  for (const auto& e : found) {
    s << format_double(e.xi_t) << ',' << format_double(e.value) << ','
      << (e.kind == ExtremumKind::min ? "min" : "max") << ',' << format_double(e.refined_to) << ','
      << (e.at_endpoint ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int run_verify(const std::string& suite, std::optional<std::uint64_t> seed) {
  if (suite != "paper") throw UsageError("unknown suite '" + suite + "' (available: paper)");
  const auto report = run_acceptance_suite(seed.value_or(default_seed()));
  print_report(std::cout, report);
  return report.all_pass() ? kExitOk : kExitBreach;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-photon hopping between three cavities: bases, generators, evolution, entanglement, scans."};
  app.require_subcommand(1);

  int basis_n = 2;
  std::string basis_out;
  auto* basis = app.add_subcommand("basis", "list the basis of a manifold as CSV");
  basis->add_option("--N", basis_n, "total local number")->required();
  basis->add_option("--out", basis_out, "output file (default stdout)");

  ModelOptions dyn;
  std::string dump;
  auto* dynamics = app.add_subcommand("dynamics", "build a generator; dump it or print its spectrum");
  add_model_options(dynamics, dyn);
  dynamics->add_option("--dump", dump, "write the matrix CSV here plus a .json sidecar");

  EvolveOptions ev;
  auto* evolve = app.add_subcommand("evolve", "propagate a product initial state and write a trajectory CSV");
  add_model_options(evolve, ev.model);
  evolve->add_option("--init", ev.init, "initial state, e.g. \"g0|g0|0.6:g2+0.8:e0\"");
  evolve->add_option("--times", ev.times, "lo:hi[:n], pi allowed (default 0:pi:4097)");
  evolve->add_option("--times-in", ev.times_in, "xi_t (default) or t");
  evolve->add_option("--config", ev.config, "run configuration JSON");
  evolve->add_option("--out", ev.out, "output file (default stdout or the config's trajectory path)");

  std::string state_path;
  int restarts = 64;
  std::optional<std::uint64_t> ent_seed;
  auto* entangle = app.add_subcommand("entangle", "geometric entanglement of a state file");
  entangle->add_option("--state", state_path, "state JSON {N, amplitudes}")->required();
  entangle->add_option("--restarts", restarts, "random optimizer starts");
  entangle->add_option("--seed", ent_seed, "RNG seed (default TRIMODAL_SEED or 0)");

  ScanOptions sc;
  auto* scan = app.add_subcommand("scan", "locate extrema of an occupation sum over xi*t");
  scan->add_option("--family", sc.family, "eq9, A3, eq15, eq17, C5C6, D8, D9, D10, D11, E3")->required();
  scan->add_option("--args", sc.args, "comma-separated complex family parameters");
  scan->add_option("--objective", sc.objective, "e.g. \"|C|^2+|F|^2\"")->required();
  scan->add_option("--window", sc.window, "lo:hi[:grid] in xi*t (default 0:pi)");
  scan->add_option("--grid", sc.grid, "grid points (default 4096 per pi)");
  scan->add_option("--source", sc.source, "analytic (default) or numeric");
  scan->add_option("--out", sc.out, "output file (default stdout)");

  std::string suite = "paper";
  std::optional<std::uint64_t> verify_seed;
  auto* verify = app.add_subcommand("verify", "run the reproduction checks and print a pass/fail table");
  verify->add_option("--suite", suite, "check suite (paper)");
  verify->add_option("--seed", verify_seed, "RNG seed (default TRIMODAL_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*basis) return run_basis(basis_n, basis_out);
    if (*dynamics) return run_dynamics(dyn, dump);
    if (*evolve) return run_evolve(ev, *evolve);
    if (*entangle) return run_entangle(state_path, restarts, ent_seed);
    if (*scan) return run_scan(sc);
    if (*verify) return run_verify(suite, verify_seed);
  } catch (const NumericalContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBreach;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
