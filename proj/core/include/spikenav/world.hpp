#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spikenav {

/// Axis-aligned cuboid obstacle standing on the ground plane.
struct Pillar {
  double cx = 0.0;      // footprint center, m
  double cy = 0.0;
  double half_x = 0.25;  // footprint half-extents, m
  double half_y = 0.25;
  double height = 2.0;   // m, from the ground
};

/// Flight arena: a walled box centered on the origin in x/y with the ground
/// at z = 0, no ceiling (walls have height extent_z), plus cuboid pillars.
/// Flight altitude is clamped to [z_min, z_max]. Immutable after
/// construction; shareable across concurrent episodes.
struct World {
  double extent_x = 12.0;
  double extent_y = 12.0;
  double extent_z = 3.0;
  double z_min = 0.3;
  double z_max = 3.1;
  std::uint64_t seed = 0;
  std::vector<Pillar> pillars;

  double half_x() const { return extent_x / 2.0; }
  double half_y() const { return extent_y / 2.0; }
};

struct WorldSpec {
  double extent_x = 12.0;
  double extent_y = 12.0;
  double extent_z = 3.0;
  int pillar_count = 0;
  std::uint64_t seed = 0;
  double z_min = 0.3;
  double z_max = 3.1;
};

/// Seeded random pillar placement: 0.5 x 0.5 m footprints, heights drawn from
/// {1.5, 2.0, 2.5, 3.0} m, footprint-to-footprint gaps >= 1.5 m and wall
/// clearance >= 1.0 m. Identical spec -> identical world.
/// Throws std::runtime_error if placement fails after bounded retries.
World build_environment(const WorldSpec& spec);

/// Gap between two axis-aligned rectangular footprints in the xy plane
/// (zero if they overlap).
double footprint_gap(const Pillar& a, const Pillar& b);

std::string world_to_json(const World& world);
World world_from_json(const std::string& text);

}  // namespace spikenav
