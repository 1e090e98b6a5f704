#pragma once
#include "wyner/config.hpp"
#include "wyner/stats.hpp"
#include "wyner/wyner_model.hpp"

namespace wyner {

// Uplink OFDMA: a codeword sees M interfering users per neighboring cell,
// interpolating between intracell TDMA (M=1) and CDMA (M=K).
struct OfdmaScenario {
  int m_interferers = 1;
  NetworkConfig base;

  void validate() const {
    base.validate();
    if (m_interferers < 1 || m_interferers > base.users_per_cell) {
      throw ConfigError("ofdma: m_interferers must be in [1, users_per_cell]");
    }
  }
};

// Empirical P[sum_{k<=M} (U_k + V_k) > M/theta]. The M interferers per side
// are drawn without replacement from that cell's K users each trial.
OutageCurve ofdma_outage_mc(const OfdmaScenario& sc, std::int64_t trials,
                            const std::vector<double>& thetas, int workers = 1);

// Q-function form with the CDMA moments and K replaced by M.
OutageCurve ofdma_outage_gaussian(const OfdmaScenario& sc, const std::vector<double>& thetas,
                                  CalibrationMode mode = CalibrationMode::Exact);

}  // namespace wyner
