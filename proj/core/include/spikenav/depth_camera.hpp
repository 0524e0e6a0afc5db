#pragma once

#include <Eigen/Dense>
#include <optional>

#include "spikenav/world.hpp"

namespace spikenav {

struct MavState;  // sim.hpp

/// Forward-looking pinhole depth camera mounted mount_height above the MAV
/// origin. Pixel values are the Euclidean distance along the ray to the
/// nearest surface; rays with no hit inside [range_min, range_max] are NaN.
struct CameraIntrinsics {
  int width = 64;
  int height = 48;
  double hfov_deg = 74.0;
  double vfov_deg = 62.0;
  double range_min = 0.5;
  double range_max = 10.0;
  double mount_height = 0.14;
};

/// Distance along the ray to the entry point of an axis-aligned box, if the
/// ray hits it at positive distance. `direction` need not be unit length; the
/// return value is in units of `direction` lengths.
std::optional<double> ray_box_entry(const Eigen::Vector3d& origin,
                                    const Eigen::Vector3d& direction,
                                    const Eigen::Vector3d& box_min,
                                    const Eigen::Vector3d& box_max);

/// Nearest hit among walls, ground, and pillars; distance along the unit ray,
/// or nullopt if nothing is hit.
std::optional<double> cast_ray(const Eigen::Vector3d& origin,
                               const Eigen::Vector3d& unit_direction,
                               const World& world);

/// Direction (unit, world frame) of the camera ray through pixel center
/// (row, col) for a MAV heading `yaw`.
Eigen::Vector3d pixel_ray_direction(const CameraIntrinsics& camera, int row,
                                    int col, double yaw);

/// Renders the height x width depth image for the MAV pose. Deterministic.
Eigen::MatrixXd render_depth(const MavState& mav, const World& world,
                             const CameraIntrinsics& camera);

}  // namespace spikenav
