#include "wyner/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace wyner {

double sample_offset(double half_width, double exclusion_radius, Xoshiro256& rng) {
  // Rejection keeps the distribution uniform on the allowed set.
  for (;;) {
    const double l = rng.uniform(-half_width, half_width);
    if (std::abs(l) >= exclusion_radius) return l;
  }
}

UserLayout sample_layout(const NetworkConfig& cfg, Xoshiro256& rng) {
  cfg.validate();
  UserLayout layout;
  layout.n_cells = cfg.n_cells;
  layout.users_per_cell = cfg.users_per_cell;
  layout.half_width = cfg.cell_half_width;
  layout.exclusion_radius = cfg.exclusion_radius;
  layout.wraparound = cfg.wraparound;
  layout.offsets.resize(static_cast<std::size_t>(cfg.n_cells) *
                        static_cast<std::size_t>(cfg.users_per_cell));
  for (auto& l : layout.offsets) l = sample_offset(cfg.cell_half_width, cfg.exclusion_radius, rng);
  return layout;
}

UplinkFactors uplink_factors_at(double offset, double half_width, double beta) {
  const double home = std::abs(offset);
  const double d = 2.0 * half_width;
  return {std::pow(home / (d - offset), beta), std::pow(home / (d + offset), beta)};
}

UplinkFactors uplink_factors(const UserLayout& layout, int cell, int user, double beta) {
  return uplink_factors_at(layout.offset(cell, user), layout.half_width, beta);
}

double downlink_factor_at(double interferer_offset, double target_cross_dist, double beta) {
  return std::pow(std::abs(interferer_offset) / target_cross_dist, beta);
}

double downlink_factor(const UserLayout& layout, int target_cell, int target_user,
                       int interferer_cell, int interferer_user, double beta) {
  int delta = interferer_cell - target_cell;
  if (layout.wraparound) {
    if (delta == layout.n_cells - 1) delta = -1;
    if (delta == -(layout.n_cells - 1)) delta = 1;
  }
  if (delta != 1 && delta != -1) {
    throw std::domain_error("downlink_factor: interferer cell is not adjacent");
  }
  const double cross = delta == -1 ? layout.left_dist(target_cell, target_user)
                                   : layout.right_dist(target_cell, target_user);
  return downlink_factor_at(layout.offset(interferer_cell, interferer_user), cross, beta);
}

DownlinkGains downlink_gains_at(double offset, double half_width, double ref_dist, double beta) {
  const double half = 0.5 * beta;
  const double d = 2.0 * half_width;
  return {std::pow(ref_dist / std::abs(offset), half), std::pow(ref_dist / (d + offset), half),
          std::pow(ref_dist / (d - offset), half)};
}

DownlinkGains downlink_gains(const UserLayout& layout, int cell, int user, double ref_dist,
                             double beta) {
  return downlink_gains_at(layout.offset(cell, user), layout.half_width, ref_dist, beta);
}

}  // namespace wyner
