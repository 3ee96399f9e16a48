// Experiment driver for the delayed-consensus library: stability tables,
// rate sweeps, tracking simulations, control-effort curves and split-factor
// reports, all emitted as CSV for plotting.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dac/network_rate.hpp"
#include "dac/reference_signal.hpp"
#include "dac/simulator.hpp"
#include "dac/spectrum.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string graph_path;
  std::string out_dir = ".";
  double alpha = 1.0;
  double dt_max = 1e-3;
  double horizon = 5.0;      // ten sampling epochs at the default rate
  double sample_rate = 2.0;  // Hz
  std::vector<double> ks = {-0.5, 0.0, 0.5, 1.0, 1.5};
  std::vector<double> taus;  // empty = command default / auto grid
  std::uint64_t seed = 42;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.13e", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// unbounded -> "inf"; absent -> "n/a"
std::string token(const std::optional<double>& v, const char* absent = "inf") {
  return v ? fmt(*v) : absent;
}

std::ofstream open_out(const Options& opt, const std::string& name) {
  std::filesystem::create_directories(opt.out_dir);
  const auto path = std::filesystem::path(opt.out_dir) / name;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file " + path.string());
  return f;
}

dac::Graph load_graph(const Options& opt) {
  if (opt.graph_path.empty())
    throw std::invalid_argument("a graph file is required (--graph)");
  return dac::load_edge_list(opt.graph_path);
}

// Per-agent sampled-signal shape: a fixed five-agent set matching the
// bundled demo network, otherwise a deterministic spread.
void reference_shape(int n, std::vector<double>& amps,
                     std::vector<double>& biases) {
  if (n == 5) {
    amps = {1.1, 1.0, 0.9, 1.05, 0.96};
    biases = {-0.55, 1.0, 0.6, -0.9, -0.6};
    return;
  }
  amps.assign(n, 1.0);
  biases.resize(n);
  for (int i = 0; i < n; ++i) biases[i] = 0.5 * (i - 0.5 * (n - 1));
}

dac::ZohSampledReference make_reference(const Options& opt, int n) {
  std::vector<double> amps, biases;
  reference_shape(n, amps, biases);
  return dac::ZohSampledReference(amps, biases, opt.sample_rate, opt.horizon,
                                  opt.seed);
}

void cmd_admissible(const Options& opt) {
  const auto spec = dac::spectrum(load_graph(opt));
  auto out = open_out(opt, "admissible.csv");
  std::string table = "k,tau_bar\n";
  for (double k : opt.ks) {
    std::string row = fmt_short(k) + ",";
    if (k == 0.0) {
      row += "n/a";
    } else {
      dac::ConsensusParams p{opt.alpha, k, 0.0};
      row += token(dac::admissible_delay_network(spec, p));
    }
    table += row + "\n";
  }
  out << table;
  std::cout << table;
}

void cmd_rate_sweep(const Options& opt) {
  const auto spec = dac::spectrum(load_graph(opt));

  std::vector<double> taus = opt.taus;
  if (taus.empty()) {
    // auto grid: cover up to 1.1x the tightest finite stability bound,
    // or one lambda_N time constant if every k is delay-robust
    double limit = 1.0 / (opt.alpha * spec.lambda_max());
    for (double k : opt.ks) {
      if (k == 0.0) continue;
      dac::ConsensusParams p{opt.alpha, k, 0.0};
      if (auto bar = dac::admissible_delay_network(spec, p))
        limit = std::min(limit, 1.1 * *bar);
    }
    const int points = 200;
    for (int j = 0; j <= points; ++j) taus.push_back(j * limit / points);
  }

  auto out = open_out(opt, "rate_sweep.csv");
  out << "tau";
  for (double k : opt.ks) out << ",rho_k=" << fmt_short(k);
  out << "\n";
  for (double tau : taus) {
    out << fmt(tau);
    for (double k : opt.ks) {
      dac::ConsensusParams p{opt.alpha, k, tau};
      out << "," << fmt(dac::convergence_rate(spec, p));
    }
    out << "\n";
  }

  auto marks = open_out(opt, "rate_landmarks.csv");
  marks << "k,tau_bar,tau_hat,tau_star,rho_star,ultimate_bound\n";
  const double rho0 = opt.alpha * spec.lambda2();
  for (double k : opt.ks) {
    marks << fmt_short(k) << ",";
    if (k == 0.0) {
      marks << "n/a,n/a,n/a,n/a,n/a\n";
      continue;
    }
    dac::ConsensusParams p{opt.alpha, k, 0.0};
    marks << token(dac::admissible_delay_network(spec, p)) << ",";
    if (k > 0.0) {
      const auto optd = dac::optimal_network_delay(spec, opt.alpha, k);
      marks << fmt(dac::rate_increase_window(spec, opt.alpha, k)) << ","
            << fmt(optd.tau_star) << "," << fmt(optd.rho_star) << ","
            << fmt(dac::ultimate_rate_bound(k, rho0)) << "\n";
    } else {
      marks << "n/a,n/a,n/a,n/a\n";
    }
  }
}

void cmd_simulate(const Options& opt) {
  const auto g = load_graph(opt);
  const auto ref = make_reference(opt, g.size());
  const std::vector<double> taus = opt.taus.empty()
                                       ? std::vector<double>{0.1}
                                       : opt.taus;
  auto summary = open_out(opt, "tracking_summary.csv");
  summary << "k,tau,epoch_end_time,tracking_error\n";
  for (double k : opt.ks) {
    for (double tau : taus) {
      dac::ConsensusParams p{opt.alpha, k, tau};
      const auto traj = dac::simulate(g, p, ref, opt.horizon, opt.dt_max);
      const std::string name = "trajectory_k" + std::string(fmt_short(k)) +
                               "_tau" + fmt_short(tau) + ".csv";
      auto out = open_out(opt, name);
      dac::write_csv(traj, out);

      const auto err = dac::tracking_error(traj);
      const int epochs =
          static_cast<int>(std::floor(opt.horizon * opt.sample_rate));
      for (int m = 1; m <= epochs; ++m) {
        const double t_end = m / opt.sample_rate;
        // sample just before the next reference jump
        int idx = static_cast<int>(std::llround(t_end / traj.dt)) - 1;
        idx = std::min(std::max(idx, 0), static_cast<int>(err.size()) - 1);
        summary << fmt_short(k) << "," << fmt_short(tau) << ","
                << fmt(traj.times[traj.history_steps + idx]) << ","
                << fmt(err[idx]) << "\n";
      }
    }
  }
}

void cmd_control_effort(const Options& opt) {
  const auto g = load_graph(opt);
  const int n = g.size();
  const auto ref = make_reference(opt, n);
  std::vector<double> x0(n);
  for (int i = 0; i < n; ++i) x0[i] = ref.value(i, 0.0);

  const double tau = opt.taus.empty() ? 0.1 : opt.taus.front();
  auto out = open_out(opt, "control_effort.csv");
  out << "t";
  for (double k : opt.ks) out << ",max_effort_k=" << fmt_short(k);
  out << "\n";

  std::vector<dac::Trajectory> runs;
  for (double k : opt.ks) {
    dac::ConsensusParams p{opt.alpha, k, k == 0.0 ? 0.0 : tau};
    runs.push_back(dac::zero_input_simulate(g, p, x0, opt.horizon, opt.dt_max));
  }
  // running max |u|_inf per split factor, on the coarsest common grid
  std::size_t rows = 0;
  for (const auto& r : runs)
    rows = std::max(rows, r.times.size() - r.history_steps);
  std::vector<double> running(runs.size(), 0.0);
  for (std::size_t row = 0; row < rows; ++row) {
    double t = 0.0;
    for (std::size_t j = 0; j < runs.size(); ++j) {
      const auto& r = runs[j];
      const std::size_t idx =
          std::min(r.history_steps + row, r.times.size() - 1);
      t = std::max(t, r.times[idx]);
      for (double u : r.controls[idx])
        running[j] = std::max(running[j], std::abs(u));
    }
    out << fmt(t);
    for (double v : running) out << "," << fmt(v);
    out << "\n";
  }
}

void cmd_split_report(const Options& opt) {
  const auto spec = dac::spectrum(load_graph(opt));
  const auto rows = dac::split_factor_report(spec, opt.alpha, opt.ks);
  auto out = open_out(opt, "split_report.csv");
  std::string table =
      "k,tau_bar,tau_hat,tau_star,rho_star,ultimate_bound,effort_safe\n";
  for (const auto& r : rows) {
    std::string line = fmt_short(r.k) + ",";
    if (r.delay_inert) {
      line += "n/a,n/a,n/a,n/a,n/a";
    } else {
      line += token(r.tau_bar) + "," + token(r.tau_hat, "n/a") + "," +
              token(r.tau_star, "n/a") + "," + token(r.rho_star, "n/a") + "," +
              token(r.ultimate_bound, "n/a");
    }
    line += r.effort_safe ? ",yes" : ",no";
    table += line + "\n";
  }
  out << table;
  std::cout << table;
}

void apply_config(Options& opt, const CLI::App& app) {
  if (opt.config_path.empty()) return;
  std::ifstream f(opt.config_path);
  if (!f) throw std::invalid_argument("cannot read config " + opt.config_path);
  nlohmann::json j;
  f >> j;

  auto unset = [&](const char* flag) {
    const CLI::Option* o = app.get_option(flag);
    return o->count() == 0;
  };
  if (j.contains("graph") && unset("--graph")) opt.graph_path = j["graph"];
  if (j.contains("alpha") && unset("--alpha")) opt.alpha = j["alpha"];
  if (j.contains("k") && unset("--k"))
    opt.ks = j["k"].get<std::vector<double>>();
  if (j.contains("tau") && unset("--tau") && !j["tau"].is_string())
    opt.taus = j["tau"].get<std::vector<double>>();
  if (j.contains("horizon") && unset("--horizon")) opt.horizon = j["horizon"];
  if (j.contains("dt_max") && unset("--dt-max")) opt.dt_max = j["dt_max"];
  if (j.contains("seed") && unset("--seed")) opt.seed = j["seed"];
  if (j.contains("sample_rate")) opt.sample_rate = j["sample_rate"];
  if (j.contains("out") && unset("--out")) opt.out_dir = j["out"];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delay-accelerated average consensus experiments"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--config", opt.config_path, "JSON config file");
  app.add_option("--graph", opt.graph_path, "edge-list graph file");
  app.add_option("--alpha", opt.alpha, "feedback gain");
  app.add_option("--k", opt.ks, "split factors");
  app.add_option("--tau", opt.taus, "delays (or sweep grid)");
  app.add_option("--seed", opt.seed, "reference RNG seed");
  app.add_option("--out", opt.out_dir, "output directory");
  app.add_option("--horizon", opt.horizon, "simulation horizon, seconds");
  app.add_option("--dt-max", opt.dt_max, "max integration step");

  auto* admissible = app.add_subcommand("admissible", "stability bounds per k");
  auto* sweep = app.add_subcommand("rate-sweep", "rate vs delay curves");
  auto* simulate = app.add_subcommand("simulate", "tracking runs");
  auto* effort = app.add_subcommand("control-effort", "zero-input effort");
  auto* split = app.add_subcommand("split-report", "per-k landmark table");
  // let global flags appear after the subcommand name as well
  for (auto* sub : {admissible, sweep, simulate, effort, split})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    apply_config(opt, app);
    if (opt.ks.empty())
      throw std::invalid_argument("k list must not be empty");
    if (!(opt.alpha > 0.0))
      throw std::invalid_argument("alpha must be positive");
    if (admissible->parsed()) cmd_admissible(opt);
    if (sweep->parsed()) cmd_rate_sweep(opt);
    if (simulate->parsed()) cmd_simulate(opt);
    if (effort->parsed()) cmd_control_effort(opt);
    if (split->parsed()) cmd_split_report(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
