#pragma once
#include <filesystem>
#include <string>
#include <vector>

#include "wyner/config.hpp"

namespace wyner {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Command {
  Fig3,
  Fig4,
  Fig5,
  Fig6,
  Fig7,
  Fig8,
  Fig9,
  VerifyTheorems,
  Calibrate,
  Custom,
};

Command command_from_name(const std::string& name);  // throws ConfigError
std::string command_name(Command c);

struct ThetaGrid {
  double min = 0.0;  // 0 = per-command default
  double max = 0.0;
  int points = 50;
};

struct ExperimentSpec {
  Command command = Command::Calibrate;
  NetworkConfig config;
  std::vector<double> betas;  // empty = per-command default
  std::filesystem::path output_dir = "out";
  std::int64_t trials = 100000;
  int workers = 0;  // 0 = hardware concurrency
  bool emit_plot = false;
  ThetaGrid theta;
  std::string custom_op;  // for Command::Custom
};

// Parses a strict JSON config file: unknown keys are rejected, snr/threshold
// may be given linear or in dB (not both). Throws ConfigError with
// line/column info on malformed input.
ExperimentSpec load_config(const std::filesystem::path& path);

// Runs the experiment, writing one or more CSVs plus run.json into
// spec.output_dir. Returns a process exit status: 0 success, 1 failed
// verification (verify-theorems only).
int run(const ExperimentSpec& spec);

// Renders a simple SVG line plot from a curve CSV (the plot is derived from
// the file contents only, never from in-memory state).
void plot_csv(const std::filesystem::path& csv_path, const std::filesystem::path& svg_path);

}  // namespace wyner
