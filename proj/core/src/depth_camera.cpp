#include "spikenav/depth_camera.hpp"

#include <cmath>
#include <limits>

#include "spikenav/sim.hpp"

namespace spikenav {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Intersection with a vertical wall rectangle at `axis`=value, bounded in the
// other horizontal axis and in z in [0, z_top].
std::optional<double> ray_wall(const Eigen::Vector3d& origin,
                               const Eigen::Vector3d& dir, int axis,
                               double value, double other_half, double z_top) {
  if (dir[axis] == 0.0) return std::nullopt;
  const double t = (value - origin[axis]) / dir[axis];
  if (t <= 0.0) return std::nullopt;
  const Eigen::Vector3d hit = origin + t * dir;
  const int other = 1 - axis;
  if (std::abs(hit[other]) > other_half) return std::nullopt;
  if (hit.z() < 0.0 || hit.z() > z_top) return std::nullopt;
  return t;
}

std::optional<double> ray_ground(const Eigen::Vector3d& origin,
                                 const Eigen::Vector3d& dir, double half_x,
                                 double half_y) {
  if (dir.z() >= 0.0) return std::nullopt;
  const double t = -origin.z() / dir.z();
  if (t <= 0.0) return std::nullopt;
  const Eigen::Vector3d hit = origin + t * dir;
  if (std::abs(hit.x()) > half_x || std::abs(hit.y()) > half_y) {
    return std::nullopt;
  }
  return t;
}

}  // namespace

std::optional<double> ray_box_entry(const Eigen::Vector3d& origin,
                                    const Eigen::Vector3d& direction,
                                    const Eigen::Vector3d& box_min,
                                    const Eigen::Vector3d& box_max) {
  double t_near = -kInf;
  double t_far = kInf;
  for (int axis = 0; axis < 3; ++axis) {
    if (direction[axis] == 0.0) {
      if (origin[axis] < box_min[axis] || origin[axis] > box_max[axis]) {
        return std::nullopt;
      }
      continue;
    }
    const double inv = 1.0 / direction[axis];
    double t0 = (box_min[axis] - origin[axis]) * inv;
    double t1 = (box_max[axis] - origin[axis]) * inv;
    if (t0 > t1) std::swap(t0, t1);
    t_near = std::max(t_near, t0);
    t_far = std::min(t_far, t1);
    if (t_near > t_far) return std::nullopt;
  }
  if (t_far < 0.0) return std::nullopt;
  if (t_near <= 0.0) return std::nullopt;  // origin inside or on the surface
  return t_near;
}

std::optional<double> cast_ray(const Eigen::Vector3d& origin,
                               const Eigen::Vector3d& unit_direction,
                               const World& world) {
  double best = kInf;

  for (const auto& pillar : world.pillars) {
    const Eigen::Vector3d box_min(pillar.cx - pillar.half_x,
                                  pillar.cy - pillar.half_y, 0.0);
    const Eigen::Vector3d box_max(pillar.cx + pillar.half_x,
                                  pillar.cy + pillar.half_y, pillar.height);
    if (const auto t = ray_box_entry(origin, unit_direction, box_min, box_max)) {
      best = std::min(best, *t);
    }
  }

  const double z_top = world.extent_z;
  for (const double sign : {-1.0, 1.0}) {
    if (const auto t = ray_wall(origin, unit_direction, 0,
                                sign * world.half_x(), world.half_y(), z_top)) {
      best = std::min(best, *t);
    }
    if (const auto t = ray_wall(origin, unit_direction, 1,
                                sign * world.half_y(), world.half_x(), z_top)) {
      best = std::min(best, *t);
    }
  }
  if (const auto t =
          ray_ground(origin, unit_direction, world.half_x(), world.half_y())) {
    best = std::min(best, *t);
  }

  if (best == kInf) return std::nullopt;
  return best;
}

Eigen::Vector3d pixel_ray_direction(const CameraIntrinsics& camera, int row,
                                    int col, double yaw) {
  const double fx =
      (camera.width / 2.0) / std::tan(camera.hfov_deg * kPi / 360.0);
  const double fy =
      (camera.height / 2.0) / std::tan(camera.vfov_deg * kPi / 360.0);
  // Body frame: x forward, y left, z up. Pixel columns increase to the
  // right (-y), rows increase downward (-z).
  const double u = (col + 0.5) - camera.width / 2.0;
  const double v = (row + 0.5) - camera.height / 2.0;
  Eigen::Vector3d body(1.0, -u / fx, -v / fy);
  body.normalize();
  const double c = std::cos(yaw);
  const double s = std::sin(yaw);
  return {c * body.x() - s * body.y(), s * body.x() + c * body.y(), body.z()};
}

Eigen::MatrixXd render_depth(const MavState& mav, const World& world,
                             const CameraIntrinsics& camera) {
  const Eigen::Vector3d origin =
      mav.position + Eigen::Vector3d(0.0, 0.0, camera.mount_height);
  Eigen::MatrixXd depth(camera.height, camera.width);
  for (int row = 0; row < camera.height; ++row) {
    for (int col = 0; col < camera.width; ++col) {
      const Eigen::Vector3d dir = pixel_ray_direction(camera, row, col, mav.yaw);
      const auto hit = cast_ray(origin, dir, world);
      if (hit && *hit >= camera.range_min && *hit <= camera.range_max) {
        depth(row, col) = *hit;
      } else {
        depth(row, col) = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }
  return depth;
}

}  // namespace spikenav
