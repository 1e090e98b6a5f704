#include <CLI11.hpp>
#include <cmath>
#include <iostream>

#include "wyner/experiments.hpp"
#include "wyner/numerics.hpp"

namespace {

std::vector<double> parse_beta_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cellular interference experiments: 1-D grid with random user "
               "locations versus the fixed-intensity Wyner model"};
  app.require_subcommand(0, 1);

  std::string config_path, beta_csv, out_dir, custom_op;
  std::int64_t trials = -1;
  int workers = -1, cells = -1, users = -1, gain = -1, m_interf = -1, theta_points = -1;
  double snr_db = NAN, threshold_db = NAN, eps = NAN, theta_min = NAN, theta_max = NAN;
  std::uint64_t seed = 0;
  bool have_seed = false, plot = false, linear_topology = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (flags override file values)");
    cmd->add_option("--beta", beta_csv, "pathloss exponent(s), comma separated");
    cmd->add_option("--users", users, "users per cell K");
    cmd->add_option("--cells", cells, "number of cells N");
    cmd->add_option("--gain", gain, "spreading gain G");
    cmd->add_option("--snr-db", snr_db, "per-user SNR in dB (stored linear)");
    cmd->add_option("--threshold-db", threshold_db, "SIR threshold in dB (stored linear)");
    cmd->add_option("--eps", eps, "exclusion radius (units of cell half-width)");
    cmd->add_option("--interferers", m_interf, "OFDMA interferers per neighbor cell M");
    cmd->add_option("--trials", trials, "Monte Carlo trials / layout draws");
    cmd->add_option("--seed", seed, "master seed")->each([&](const std::string&) { have_seed = true; });
    cmd->add_option("--workers", workers, "worker threads (0 = hardware)");
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--theta-min", theta_min, "theta grid start (linear)");
    cmd->add_option("--theta-max", theta_max, "theta grid end (linear)");
    cmd->add_option("--theta-points", theta_points, "theta grid size");
    cmd->add_flag("--plot", plot, "emit an SVG plot per CSV");
    cmd->add_flag("--linear-topology", linear_topology, "disable wraparound cell indexing");
  };

  std::vector<std::pair<std::string, std::string>> subcommands = {
      {"fig3", "uplink TDMA outage: Monte Carlo vs closed-form lower bound"},
      {"fig4", "uplink CDMA outage: Monte Carlo vs Gaussian approximation"},
      {"fig5", "uplink SCP average throughput normalized by the model baseline"},
      {"fig6", "downlink TDMA outage under channel inversion, per user location"},
      {"fig7", "downlink CDMA outage under channel inversion, per user location"},
      {"fig8", "downlink SCP average throughput vs pathloss exponent"},
      {"fig9", "downlink MCP per-cell sum throughput lower bound vs model"},
      {"verify-theorems", "run the ordering/identity checks and report PASS/FAIL"},
      {"calibrate", "print interference-intensity calibration for given beta"},
      {"custom", "single named sweep, see --op"},
  };
  for (const auto& [name, desc] : subcommands) {
    auto* cmd = app.add_subcommand(name, desc);
    add_common(cmd);
    if (name == "custom") {
      cmd->add_option("--op", custom_op,
                      "one of uplink-tdma-outage, uplink-cdma-outage, dl-tdma-outage, "
                      "dl-cdma-outage, ofdma-outage");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.get_subcommands().empty()) {
    std::cerr << app.help() << "\n";
    return 2;
  }

  try {
    wyner::ExperimentSpec spec;
    if (!config_path.empty()) spec = wyner::load_config(config_path);
    spec.command = wyner::command_from_name(app.get_subcommands().front()->get_name());

    const auto betas = parse_beta_list(beta_csv);
    if (!betas.empty()) {
      spec.betas = betas;
      spec.config.pathloss_exp = betas.front();
    }
    if (users > 0) spec.config.users_per_cell = users;
    if (cells > 0) spec.config.n_cells = cells;
    if (gain > 0) spec.config.spreading_gain = gain;
    if (!std::isnan(snr_db)) spec.config.snr = std::pow(10.0, snr_db / 10.0);
    if (!std::isnan(threshold_db)) spec.config.sir_threshold = std::pow(10.0, threshold_db / 10.0);
    if (!std::isnan(eps)) spec.config.exclusion_radius = eps * spec.config.cell_half_width;
    if (m_interf > 0) spec.config.ofdma_interferers = m_interf;
    if (trials > 0) spec.trials = trials;
    if (have_seed) spec.config.seed = seed;
    if (workers >= 0) spec.workers = workers;
    if (!out_dir.empty()) spec.output_dir = out_dir;
    if (!std::isnan(theta_min)) spec.theta.min = theta_min;
    if (!std::isnan(theta_max)) spec.theta.max = theta_max;
    if (theta_points > 0) spec.theta.points = theta_points;
    if (plot) spec.emit_plot = true;
    if (linear_topology) spec.config.wraparound = false;
    if (!custom_op.empty()) spec.custom_op = custom_op;

    return wyner::run(spec);
  } catch (const wyner::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const wyner::NumericsError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
