#pragma once
#include <vector>

#include "wyner/config.hpp"
#include "wyner/random.hpp"

namespace wyner {

// Sampled user positions for one network draw. Offsets are signed distances
// from the home BS, in [-R, -eps] u [eps, R]. Neighbor BSs sit at -2R and +2R,
// so for offset L: home distance |L|, left-BS distance 2R+L, right-BS 2R-L.
struct UserLayout {
  int n_cells = 0;
  int users_per_cell = 0;
  double half_width = 1.0;
  double exclusion_radius = 0.0;
  bool wraparound = true;
  std::vector<double> offsets;  // row-major [cell][user]

  double offset(int cell, int user) const {
    return offsets[static_cast<std::size_t>(cell) * static_cast<std::size_t>(users_per_cell) +
                   static_cast<std::size_t>(user)];
  }
  double home_dist(int cell, int user) const { return std::abs(offset(cell, user)); }
  double left_dist(int cell, int user) const { return 2.0 * half_width + offset(cell, user); }
  double right_dist(int cell, int user) const { return 2.0 * half_width - offset(cell, user); }
};

// One uniform offset on [-R, -eps] u [eps, R], by rejection.
double sample_offset(double half_width, double exclusion_radius, Xoshiro256& rng);

UserLayout sample_layout(const NetworkConfig& cfg, Xoshiro256& rng);

struct UplinkFactors {
  double u;  // (home / right-neighbor distance)^beta
  double v;  // (home / left-neighbor distance)^beta
};

UplinkFactors uplink_factors_at(double offset, double half_width, double beta);
UplinkFactors uplink_factors(const UserLayout& layout, int cell, int user, double beta);

// Downlink interference ratio of one adjacent-cell interferer as seen by a
// target user: (interferer home distance / target distance to that BS)^beta.
double downlink_factor_at(double interferer_offset, double target_cross_dist, double beta);
double downlink_factor(const UserLayout& layout, int target_cell, int target_user,
                       int interferer_cell, int interferer_user, double beta);

struct DownlinkGains {
  double home;   // (r0 / home distance)^(beta/2)
  double left;   // from the left neighbor BS
  double right;  // from the right neighbor BS
};

DownlinkGains downlink_gains_at(double offset, double half_width, double ref_dist, double beta);
DownlinkGains downlink_gains(const UserLayout& layout, int cell, int user, double ref_dist,
                             double beta);

}  // namespace wyner
