#include "wyner/experiments.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "wyner/csv.hpp"
#include "wyner/downlink_mcp.hpp"
#include "wyner/downlink_scp.hpp"
#include "wyner/geometry.hpp"
#include "wyner/numerics.hpp"
#include "wyner/ofdma.hpp"
#include "wyner/uplink_mcp.hpp"
#include "wyner/uplink_scp.hpp"
#include "wyner/wyner_model.hpp"

namespace wyner {

using json = nlohmann::ordered_json;

Command command_from_name(const std::string& name) {
  static const std::map<std::string, Command> names = {
      {"fig3", Command::Fig3},       {"fig4", Command::Fig4},
      {"fig5", Command::Fig5},       {"fig6", Command::Fig6},
      {"fig7", Command::Fig7},       {"fig8", Command::Fig8},
      {"fig9", Command::Fig9},       {"verify-theorems", Command::VerifyTheorems},
      {"calibrate", Command::Calibrate}, {"custom", Command::Custom},
  };
  const auto it = names.find(name);
  if (it == names.end()) throw ConfigError("unknown command: " + name);
  return it->second;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Fig3: return "fig3";
    case Command::Fig4: return "fig4";
    case Command::Fig5: return "fig5";
    case Command::Fig6: return "fig6";
    case Command::Fig7: return "fig7";
    case Command::Fig8: return "fig8";
    case Command::Fig9: return "fig9";
    case Command::VerifyTheorems: return "verify-theorems";
    case Command::Calibrate: return "calibrate";
    case Command::Custom: return "custom";
  }
  return "?";
}

namespace {

[[noreturn]] void fail_parse(const nlohmann::json::parse_error& e, const std::string& text) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream msg;
  msg << "config parse error at line " << line << ", column " << col << ": " << e.what();
  throw ConfigError(msg.str());
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ConfigError("unknown config key '" + key + "' in " + where);
  }
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

void parse_network(const json& j, NetworkConfig& cfg) {
  reject_unknown(j,
                 {"n_cells", "users_per_cell", "cell_half_width", "pathloss_exp", "spreading_gain",
                  "snr", "snr_db", "sir_threshold", "threshold_db", "exclusion_radius",
                  "ofdma_interferers", "seed", "wraparound"},
                 "config");
  if (j.contains("n_cells")) cfg.n_cells = j["n_cells"].get<int>();
  if (j.contains("users_per_cell")) cfg.users_per_cell = j["users_per_cell"].get<int>();
  if (j.contains("cell_half_width")) cfg.cell_half_width = j["cell_half_width"].get<double>();
  if (j.contains("pathloss_exp")) cfg.pathloss_exp = j["pathloss_exp"].get<double>();
  if (j.contains("spreading_gain")) cfg.spreading_gain = j["spreading_gain"].get<int>();
  if (j.contains("snr") && j.contains("snr_db")) {
    throw ConfigError("give either snr or snr_db, not both");
  }
  if (j.contains("snr")) cfg.snr = j["snr"].get<double>();
  if (j.contains("snr_db")) cfg.snr = db_to_linear(j["snr_db"].get<double>());
  if (j.contains("sir_threshold") && j.contains("threshold_db")) {
    throw ConfigError("give either sir_threshold or threshold_db, not both");
  }
  if (j.contains("sir_threshold")) cfg.sir_threshold = j["sir_threshold"].get<double>();
  if (j.contains("threshold_db")) cfg.sir_threshold = db_to_linear(j["threshold_db"].get<double>());
  if (j.contains("exclusion_radius")) cfg.exclusion_radius = j["exclusion_radius"].get<double>();
  if (j.contains("ofdma_interferers")) cfg.ofdma_interferers = j["ofdma_interferers"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("wraparound")) cfg.wraparound = j["wraparound"].get<bool>();
}

}  // namespace

ExperimentSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_parse(e, text);
  }
  ExperimentSpec spec;
  reject_unknown(j,
                 {"command", "config", "betas", "output_dir", "trials", "workers", "emit_plot",
                  "theta", "custom_op"},
                 "top level");
  if (j.contains("command")) spec.command = command_from_name(j["command"].get<std::string>());
  if (j.contains("config")) parse_network(j["config"], spec.config);
  if (j.contains("betas")) spec.betas = j["betas"].get<std::vector<double>>();
  if (j.contains("output_dir")) spec.output_dir = j["output_dir"].get<std::string>();
  if (j.contains("trials")) spec.trials = j["trials"].get<std::int64_t>();
  if (j.contains("workers")) spec.workers = j["workers"].get<int>();
  if (j.contains("emit_plot")) spec.emit_plot = j["emit_plot"].get<bool>();
  if (j.contains("theta")) {
    reject_unknown(j["theta"], {"min", "max", "points"}, "theta");
    if (j["theta"].contains("min")) spec.theta.min = j["theta"]["min"].get<double>();
    if (j["theta"].contains("max")) spec.theta.max = j["theta"]["max"].get<double>();
    if (j["theta"].contains("points")) spec.theta.points = j["theta"]["points"].get<int>();
  }
  if (j.contains("custom_op")) spec.custom_op = j["custom_op"].get<std::string>();
  return spec;
}

namespace {

struct RunContext {
  const ExperimentSpec& spec;
  std::vector<std::filesystem::path> outputs;

  std::vector<double> grid(double def_lo, double def_hi) const {
    const double lo = spec.theta.min > 0 ? spec.theta.min : def_lo;
    const double hi = spec.theta.max > 0 ? spec.theta.max : def_hi;
    return log_grid(lo, hi, spec.theta.points);
  }

  void write(const std::string& name, const std::vector<CsvRow>& rows) {
    const auto path = spec.output_dir / name;
    write_csv(path, rows);
    outputs.push_back(path);
    if (spec.emit_plot) {
      auto svg = path;
      svg.replace_extension(".svg");
      plot_csv(path, svg);
    }
  }
};

void append_curve(std::vector<CsvRow>& rows, const OutageCurve& c, const std::string& series) {
  for (std::size_t i = 0; i < c.thresholds.size(); ++i) {
    CsvRow r;
    r.x = c.thresholds[i];
    r.value = c.values[i];
    const double half = 1.959963984540054 * (i < c.std_err.size() ? c.std_err[i] : 0.0);
    r.ci_low = c.values[i] - half;
    r.ci_high = c.values[i] + half;
    r.kind = to_string(c.kind);
    r.series = series;
    rows.push_back(std::move(r));
  }
}

void append_estimate(std::vector<CsvRow>& rows, double x, const Estimate& e, const std::string& kind,
                     const std::string& series, double scale = 1.0) {
  rows.push_back({x, e.mean * scale, e.ci95_low * scale, e.ci95_high * scale, kind, series});
}

std::string beta_tag(double beta) {
  std::ostringstream ss;
  ss << beta;
  return ss.str();
}

void run_fig3(RunContext& ctx) {
  const auto betas = ctx.spec.betas.empty() ? std::vector<double>{2, 3, 4, 5} : ctx.spec.betas;
  for (double beta : betas) {
    NetworkConfig cfg = ctx.spec.config;
    cfg.pathloss_exp = beta;
    const auto thetas = ctx.grid(1.0, 100.0 * std::pow(3.0, beta));
    std::vector<CsvRow> rows;
    append_curve(rows, tdma_outage_mc(cfg, ctx.spec.trials, thetas, ctx.spec.workers),
                 "beta=" + beta_tag(beta));
    append_curve(rows, tdma_outage_lower_bound(beta, thetas), "beta=" + beta_tag(beta));
    ctx.write("fig3_beta" + beta_tag(beta) + ".csv", rows);
  }
}

void run_fig4(RunContext& ctx) {
  const auto thetas = ctx.grid(1.0, 100.0);
  std::vector<CsvRow> rows;
  for (int k : {5, 10, 20, 50}) {
    NetworkConfig cfg = ctx.spec.config;
    cfg.users_per_cell = k;
    cfg.ofdma_interferers = 1;
    append_curve(rows, cdma_outage_mc(cfg, ctx.spec.trials, thetas, ctx.spec.workers),
                 "K=" + std::to_string(k));
    append_curve(rows, cdma_outage_gaussian(cfg, thetas), "K=" + std::to_string(k));
  }
  ctx.write("fig4.csv", rows);
}

void run_fig5(RunContext& ctx) {
  std::vector<CsvRow> rows;
  const Calibration cal = calibrate(ctx.spec.config.pathloss_exp);
  for (int k : {1, 2, 5, 10, 20, 50, 100}) {
    NetworkConfig cfg = ctx.spec.config;
    cfg.users_per_cell = k;
    cfg.spreading_gain = k;  // optimal-detector assumption ties G to K
    cfg.ofdma_interferers = 1;
    const double baseline = wyner_avg_throughput(cal.exact_alpha_sq_ul, k);
    append_estimate(rows, k, avg_throughput_tdma(cfg, ctx.spec.trials, ctx.spec.workers), "mc",
                    "tdma", 1.0 / baseline);
    append_estimate(rows, k, avg_throughput_cdma(cfg, ctx.spec.trials, ctx.spec.workers), "mc",
                    "cdma", 1.0 / baseline);
    rows.push_back({static_cast<double>(k), 1.0, 1.0, 1.0, "asymptotic", "wyner"});
  }
  ctx.write("fig5.csv", rows);
}

void run_fig6(RunContext& ctx) {
  const auto thetas = ctx.grid(1.0, 1e4);
  const NetworkConfig& cfg = ctx.spec.config;
  std::vector<CsvRow> rows;
  for (const auto& [label, off] :
       {std::pair<const char*, double>{"center", 0.0}, {"mid", 0.5}, {"edge", 1.0}}) {
    const UserPosition pos = UserPosition::at(off * cfg.cell_half_width, cfg.cell_half_width);
    append_curve(rows, pci_tdma_outage_mc(cfg, pos, ctx.spec.trials, thetas, ctx.spec.workers),
                 label);
    append_curve(rows, pci_tdma_outage_bound(cfg.pathloss_exp, pos, thetas, cfg.cell_half_width),
                 label);
  }
  ctx.write("fig6.csv", rows);
}

void run_fig7(RunContext& ctx) {
  const auto thetas = ctx.grid(1.0, 300.0);
  const NetworkConfig& cfg = ctx.spec.config;
  std::vector<CsvRow> rows;
  for (const auto& [label, off] : {std::pair<const char*, double>{"center", 0.0}, {"edge", 1.0}}) {
    const UserPosition pos = UserPosition::at(off * cfg.cell_half_width, cfg.cell_half_width);
    append_curve(rows, pci_cdma_outage_mc(cfg, pos, ctx.spec.trials, thetas, ctx.spec.workers),
                 label);
    append_curve(rows, pci_cdma_outage_gaussian(cfg, pos, thetas), label);
    const double sir = pci_asymptotic_sir(cfg, pos);
    OutageCurve step;
    step.thresholds = thetas;
    step.kind = CurveKind::Asymptotic;
    for (double th : thetas) step.values.push_back(th < sir ? 0.0 : 1.0);
    step.std_err.assign(thetas.size(), 0.0);
    append_curve(rows, step, label);
  }
  ctx.write("fig7.csv", rows);
}

void run_fig8(RunContext& ctx) {
  const auto betas =
      ctx.spec.betas.empty() ? std::vector<double>{2, 2.5, 3, 3.5, 4, 4.5, 5} : ctx.spec.betas;
  std::vector<CsvRow> rows;
  for (double beta : betas) {
    NetworkConfig cfg = ctx.spec.config;
    cfg.pathloss_exp = beta;
    cfg.users_per_cell = 100;
    cfg.spreading_gain = 100;  // G = K
    const Calibration cal = calibrate(beta);
    append_estimate(rows, beta, pci_avg_throughput(cfg, ctx.spec.trials, Scheme::Tdma, ctx.spec.workers),
                    "mc", "pci_tdma");
    append_estimate(rows, beta, pci_avg_throughput(cfg, ctx.spec.trials, Scheme::Cdma, ctx.spec.workers),
                    "mc", "pci_cdma");
    append_estimate(rows, beta, etp_avg_throughput(cfg, ctx.spec.trials, ctx.spec.workers), "mc",
                    "etp");
    const double wy_dl = wyner_avg_throughput(cal.alpha_sq_dl, cfg.users_per_cell);
    const double wy_ul = wyner_avg_throughput(cal.exact_alpha_sq_ul, cfg.users_per_cell);
    rows.push_back({beta, wy_dl, wy_dl, wy_dl, "asymptotic", "wyner_dl"});
    rows.push_back({beta, wy_ul, wy_ul, wy_ul, "asymptotic", "wyner_ul"});
  }
  ctx.write("fig8.csv", rows);
}

void run_fig9(RunContext& ctx) {
  const NetworkConfig& base = ctx.spec.config;
  const Calibration cal = calibrate(base.pathloss_exp);
  std::vector<CsvRow> rows;
  for (int sdb = 0; sdb <= 20; ++sdb) {
    const double s = db_to_linear(sdb);
    for (double eps : {0.01, 0.05, 0.1}) {
      NetworkConfig cfg = base;
      cfg.snr = s;
      cfg.exclusion_radius = eps * cfg.cell_half_width;
      const double v = sumthroughput_limit_cdma(cfg);
      std::ostringstream series;
      series << "limit eps=" << eps;
      rows.push_back({static_cast<double>(sdb), v, v, v, "asymptotic", series.str()});
    }
    const double cw = wyner_mcp_throughput(base.n_cells, std::sqrt(cal.alpha_sq_ul), s);
    rows.push_back({static_cast<double>(sdb), cw, cw, cw, "asymptotic", "wyner"});
    const double bench = std::log2(1.0 + s);
    rows.push_back({static_cast<double>(sdb), bench, bench, bench, "asymptotic", "no_interference"});
  }
  ctx.write("fig9.csv", rows);
}

void run_calibrate(RunContext& ctx) {
  const auto betas = ctx.spec.betas.empty()
                         ? std::vector<double>{ctx.spec.config.pathloss_exp}
                         : ctx.spec.betas;
  std::vector<CsvRow> rows;
  for (double beta : betas) {
    const Calibration c = calibrate(beta);
    std::cout << "beta=" << beta << ": alpha_sq_ul=" << c.alpha_sq_ul
              << " exact_E[U]=" << c.exact_alpha_sq_ul << " alpha_sq_dl=" << c.alpha_sq_dl
              << " gamma=" << c.gamma << " sigma_u_sq=" << c.sigma_u_sq
              << " exact_sigma_u_sq=" << c.exact_sigma_u_sq << "\n";
    rows.push_back({beta, c.alpha_sq_ul, c.alpha_sq_ul, c.alpha_sq_ul, "analytic", "alpha_sq_ul"});
    rows.push_back({beta, c.exact_alpha_sq_ul, c.exact_alpha_sq_ul, c.exact_alpha_sq_ul,
                    "analytic", "exact_alpha_sq_ul"});
    rows.push_back({beta, c.alpha_sq_dl, c.alpha_sq_dl, c.alpha_sq_dl, "analytic", "alpha_sq_dl"});
    rows.push_back({beta, c.gamma, c.gamma, c.gamma, "analytic", "gamma"});
    rows.push_back({beta, c.sigma_u_sq, c.sigma_u_sq, c.sigma_u_sq, "analytic", "sigma_u_sq"});
    rows.push_back({beta, c.exact_sigma_u_sq, c.exact_sigma_u_sq, c.exact_sigma_u_sq, "analytic",
                    "exact_sigma_u_sq"});
  }
  ctx.write("calibrate.csv", rows);
}

struct TheoremCheck {
  std::string name;
  double margin;  // in standard errors where stochastic, absolute otherwise
  bool pass;
};

// Verification battery used by the verify-theorems command; every quantity is
// derived through seeded substreams so the report is worker-count invariant.
std::vector<TheoremCheck> verify_theorems(const ExperimentSpec& spec) {
  std::vector<TheoremCheck> checks;
  const int workers = spec.workers;
  const auto sigma_margin = [](const Estimate& a, const Estimate& b) {
    return (a.mean - b.mean) / std::hypot(a.std_err, b.std_err);
  };

  // Uplink SCP ordering: TDMA >= CDMA >= fixed-intensity baseline.
  {
    NetworkConfig cfg = spec.config;
    cfg.users_per_cell = 50;
    cfg.spreading_gain = 50;
    const Estimate tdma = avg_throughput_tdma(cfg, spec.trials, workers);
    const Estimate cdma = avg_throughput_cdma(cfg, spec.trials, workers);
    const double wy = wyner_avg_throughput(calibrate(cfg.pathloss_exp).exact_alpha_sq_ul,
                                           cfg.users_per_cell);
    const double m1 = sigma_margin(tdma, cdma);
    const double m2 = (cdma.mean - wy) / cdma.std_err;
    checks.push_back({"theorem1/uplink_tdma_ge_cdma", m1, m1 >= -3.0});
    checks.push_back({"theorem1/uplink_cdma_ge_wyner", m2, m2 >= -3.0});
  }

  // Uplink MCP: joint-decoding CDMA >= TDMA plus the exact decomposition.
  {
    NetworkConfig cfg = spec.config;
    cfg.n_cells = 32;
    const std::int64_t draws = 200;
    double worst_margin = 1e300;
    for (int k : {2, 4, 8}) {
      cfg.users_per_cell = k;
      NetworkConfig tdma_cfg = cfg;
      tdma_cfg.seed = cfg.seed + 1;  // independent schedule draw
      const Estimate cd = mcp_throughput_mc(cfg, Scheme::Cdma, draws, workers);
      const Estimate td = mcp_throughput_mc(tdma_cfg, Scheme::Tdma, draws, workers);
      worst_margin = std::min(worst_margin, sigma_margin(cd, td));
    }
    checks.push_back({"theorem2/mcp_cdma_ge_tdma", worst_margin, worst_margin >= -3.0});

    cfg.users_per_cell = 4;
    Xoshiro256 rng = RandomPlan{cfg.seed, 1}.stream(0);
    const UserLayout layout = sample_layout(cfg, rng);
    const CovSpec cd = build_cov_cdma(layout, cfg);
    Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(cfg.n_cells, cfg.n_cells);
    for (int k = 0; k < cfg.users_per_cell; ++k) {
      avg += build_cov_tdma(layout, cfg, std::vector<int>(static_cast<std::size_t>(cfg.n_cells), k))
                 .matrix;
    }
    avg /= cfg.users_per_cell;
    const double err = (avg - cd.matrix).cwiseAbs().maxCoeff();
    checks.push_back({"theorem2/decomposition_identity", err, err <= 1e-12});
  }

  // Downlink SCP chains under channel inversion, and the equal-power bound.
  {
    NetworkConfig cfg = spec.config;
    cfg.users_per_cell = 100;
    cfg.spreading_gain = 100;
    const Calibration cal = calibrate(cfg.pathloss_exp);
    const Estimate tdma = pci_avg_throughput(cfg, spec.trials, Scheme::Tdma, workers);
    const Estimate cdma = pci_avg_throughput(cfg, spec.trials, Scheme::Cdma, workers);
    const Estimate etp = etp_avg_throughput(cfg, spec.trials, workers);
    const double wy_dl = wyner_avg_throughput(cal.alpha_sq_dl, cfg.users_per_cell);
    const double wy_ul = wyner_avg_throughput(cal.exact_alpha_sq_ul, cfg.users_per_cell);
    const double m1 = sigma_margin(tdma, cdma);
    const double m2 = (cdma.mean - wy_dl) / cdma.std_err;
    const double m3 = (etp.mean - wy_ul) / etp.std_err;
    checks.push_back({"theorem3/downlink_pci_tdma_ge_cdma", m1, m1 >= -3.0});
    checks.push_back({"theorem3/downlink_pci_cdma_ge_wyner", m2, m2 >= -3.0});
    checks.push_back({"theorem4/downlink_etp_ge_wyner", m3, m3 >= -3.0});
  }

  // Downlink MCP: per-draw CDMA bound >= schedule-averaged TDMA bound.
  {
    NetworkConfig cfg = spec.config;
    cfg.n_cells = 16;
    cfg.users_per_cell = 8;
    if (!(cfg.exclusion_radius > 0)) cfg.exclusion_radius = 0.01;
    const std::int64_t draws = 200;
    const RandomPlan plan{cfg.seed, draws};
    const auto gaps = run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
      const UserLayout layout = sample_layout(cfg, rng);
      const ChannelMatrix ch = build_channel(layout, cfg);
      const double kn = static_cast<double>(cfg.users_per_cell) * cfg.n_cells;
      const Eigen::MatrixXd gram = ch.h_t.transpose() * ch.h_t / kn;
      const double cd = minimax_diag_noise(gram, cfg.snr).value_bits / cfg.n_cells;
      double td = 0.0;
      for (int u = 0; u < cfg.users_per_cell; ++u) {
        Eigen::MatrixXd h(cfg.n_cells, cfg.n_cells);
        for (int cell = 0; cell < cfg.n_cells; ++cell) {
          h.row(cell) = ch.h_t.row(static_cast<Eigen::Index>(cell) * cfg.users_per_cell + u);
        }
        td += minimax_diag_noise(h.transpose() * h / cfg.n_cells, cfg.snr).value_bits /
              cfg.n_cells;
      }
      td /= cfg.users_per_cell;
      return cd - td;
    });
    double worst = 1e300;
    for (double g : gaps) worst = std::min(worst, g);
    checks.push_back({"theorem6/mcp_cdma_ge_tdma_per_draw", worst, worst >= -1e-9});
  }

  return checks;
}

void run_verify(RunContext& ctx, int& status) {
  const auto checks = verify_theorems(ctx.spec);
  std::vector<CsvRow> rows;
  double idx = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " margin=" << c.margin << "\n";
    rows.push_back({idx, c.margin, c.margin, c.margin, c.pass ? "pass" : "fail", c.name});
    idx += 1.0;
    if (!c.pass) status = 1;
  }
  ctx.write("theorems.csv", rows);
}

void run_custom(RunContext& ctx) {
  const NetworkConfig& cfg = ctx.spec.config;
  const std::string& op = ctx.spec.custom_op;
  std::vector<CsvRow> rows;
  if (op == "uplink-tdma-outage") {
    const auto thetas = ctx.grid(1.0, 100.0 * std::pow(3.0, cfg.pathloss_exp));
    append_curve(rows, tdma_outage_mc(cfg, ctx.spec.trials, thetas, ctx.spec.workers), op);
    append_curve(rows, tdma_outage_lower_bound(cfg.pathloss_exp, thetas), op);
  } else if (op == "uplink-cdma-outage") {
    const auto thetas = ctx.grid(1.0, 100.0);
    append_curve(rows, cdma_outage_mc(cfg, ctx.spec.trials, thetas, ctx.spec.workers), op);
    append_curve(rows, cdma_outage_gaussian(cfg, thetas), op);
  } else if (op == "dl-tdma-outage" || op == "dl-cdma-outage") {
    const auto thetas = ctx.grid(1.0, op[3] == 't' ? 1e4 : 300.0);
    for (const auto& [label, off] : {std::pair<const char*, double>{"center", 0.0}, {"edge", 1.0}}) {
      const UserPosition pos = UserPosition::at(off * cfg.cell_half_width, cfg.cell_half_width);
      if (op == "dl-tdma-outage") {
        append_curve(rows, pci_tdma_outage_mc(cfg, pos, ctx.spec.trials, thetas, ctx.spec.workers),
                     label);
        append_curve(rows, pci_tdma_outage_bound(cfg.pathloss_exp, pos, thetas, cfg.cell_half_width),
                     label);
      } else {
        append_curve(rows, pci_cdma_outage_mc(cfg, pos, ctx.spec.trials, thetas, ctx.spec.workers),
                     label);
        append_curve(rows, pci_cdma_outage_gaussian(cfg, pos, thetas), label);
      }
    }
  } else if (op == "ofdma-outage") {
    const auto thetas = ctx.grid(1.0, 100.0);
    const OfdmaScenario sc{cfg.ofdma_interferers, cfg};
    append_curve(rows, ofdma_outage_mc(sc, ctx.spec.trials, thetas, ctx.spec.workers), op);
    append_curve(rows, ofdma_outage_gaussian(sc, thetas), op);
  } else {
    throw ConfigError("unknown custom op: " + op +
                      " (expected uplink-tdma-outage, uplink-cdma-outage, dl-tdma-outage, "
                      "dl-cdma-outage, or ofdma-outage)");
  }
  ctx.write("custom_" + op + ".csv", rows);
}

void write_manifest(const RunContext& ctx, double wall_sec) {
  const auto& spec = ctx.spec;
  json m;
  m["command"] = command_name(spec.command);
  m["tool_version"] = kToolVersion;
  json cfg;
  cfg["n_cells"] = spec.config.n_cells;
  cfg["users_per_cell"] = spec.config.users_per_cell;
  cfg["cell_half_width"] = spec.config.cell_half_width;
  cfg["pathloss_exp"] = spec.config.pathloss_exp;
  cfg["spreading_gain"] = spec.config.spreading_gain;
  cfg["snr"] = spec.config.snr;
  cfg["sir_threshold"] = spec.config.sir_threshold;
  cfg["exclusion_radius"] = spec.config.exclusion_radius;
  cfg["ofdma_interferers"] = spec.config.ofdma_interferers;
  cfg["seed"] = spec.config.seed;
  cfg["wraparound"] = spec.config.wraparound;
  m["config"] = cfg;
  m["trials"] = spec.trials;
  m["workers"] = spec.workers;
  if (!spec.betas.empty()) m["betas"] = spec.betas;
  m["theta_grid"] = {{"min", spec.theta.min}, {"max", spec.theta.max}, {"points", spec.theta.points}};
  if (!spec.custom_op.empty()) m["custom_op"] = spec.custom_op;
  m["etp_sir_cap"] = kEtpSirCap;
  json outs = json::array();
  for (const auto& p : ctx.outputs) outs.push_back(p.filename().string());
  m["outputs"] = outs;
  m["wall_clock_sec"] = wall_sec;
  std::ofstream out(spec.output_dir / "run.json", std::ios::binary);
  out << m.dump(2) << "\n";
}

}  // namespace

int run(const ExperimentSpec& spec) {
  spec.config.validate();
  if (spec.trials < 1) throw ConfigError("trials must be positive");
  if (spec.theta.points < 2) throw ConfigError("theta grid needs at least 2 points");
  std::filesystem::create_directories(spec.output_dir);
  RunContext ctx{spec, {}};
  int status = 0;
  const auto t0 = std::chrono::steady_clock::now();
  switch (spec.command) {
    case Command::Fig3: run_fig3(ctx); break;
    case Command::Fig4: run_fig4(ctx); break;
    case Command::Fig5: run_fig5(ctx); break;
    case Command::Fig6: run_fig6(ctx); break;
    case Command::Fig7: run_fig7(ctx); break;
    case Command::Fig8: run_fig8(ctx); break;
    case Command::Fig9: run_fig9(ctx); break;
    case Command::VerifyTheorems: run_verify(ctx, status); break;
    case Command::Calibrate: run_calibrate(ctx); break;
    case Command::Custom: run_custom(ctx); break;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(ctx, wall);
  return status;
}

}  // namespace wyner
