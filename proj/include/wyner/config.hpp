#pragma once
#include <cstdint>
#include <stdexcept>

namespace wyner {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario parameters. All distances are ratios to the cell half-width, so
// the canonical half-width is 1 and results are invariant to rescaling it.
struct NetworkConfig {
  int n_cells = 64;                // N
  int users_per_cell = 50;         // K
  double cell_half_width = 1.0;    // R
  double pathloss_exp = 4.0;       // beta, >= 2
  int spreading_gain = 64;         // G
  double snr = 10.0;               // S = P/sigma^2, linear
  double sir_threshold = 1.0;      // theta, linear
  double exclusion_radius = 0.01;  // epsilon, in [0, R)
  int ofdma_interferers = 1;       // M, in [1, K]
  std::uint64_t seed = 1;
  bool wraparound = true;          // circular cell array (MCP limit surrogate)

  void validate() const {
    if (n_cells < 1) throw ConfigError("n_cells must be positive");
    if (users_per_cell < 1) throw ConfigError("users_per_cell must be positive");
    if (!(cell_half_width > 0)) throw ConfigError("cell_half_width must be positive");
    if (!(pathloss_exp >= 2.0)) throw ConfigError("pathloss_exp must be >= 2");
    if (spreading_gain < 1) throw ConfigError("spreading_gain must be positive");
    if (!(snr > 0)) throw ConfigError("snr must be positive");
    if (!(sir_threshold > 0)) throw ConfigError("sir_threshold must be positive");
    if (exclusion_radius < 0 || exclusion_radius >= cell_half_width)
      throw ConfigError("exclusion_radius must be in [0, cell_half_width)");
    if (ofdma_interferers < 1 || ofdma_interferers > users_per_cell)
      throw ConfigError("ofdma_interferers must be in [1, users_per_cell]");
  }
};

}  // namespace wyner
