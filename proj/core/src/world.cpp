#include "spikenav/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "spikenav/rng.hpp"

namespace spikenav {

namespace {

constexpr double kFootprintHalf = 0.25;
constexpr double kMinFootprintGap = 1.5;
constexpr double kWallClearance = 1.0;
constexpr int kPlacementAttempts = 20000;
constexpr double kPillarHeights[] = {1.5, 2.0, 2.5, 3.0};

}  // namespace

double footprint_gap(const Pillar& a, const Pillar& b) {
  const double gx = std::abs(a.cx - b.cx) - (a.half_x + b.half_x);
  const double gy = std::abs(a.cy - b.cy) - (a.half_y + b.half_y);
  return std::hypot(std::max(gx, 0.0), std::max(gy, 0.0));
}

World build_environment(const WorldSpec& spec) {
  if (spec.extent_x <= 0 || spec.extent_y <= 0 || spec.extent_z <= 0) {
    throw std::invalid_argument("build_environment: non-positive extent");
  }
  if (spec.pillar_count < 0) {
    throw std::invalid_argument("build_environment: negative pillar count");
  }

  World world;
  world.extent_x = spec.extent_x;
  world.extent_y = spec.extent_y;
  world.extent_z = spec.extent_z;
  world.z_min = spec.z_min;
  world.z_max = spec.z_max;
  world.seed = spec.seed;

  Rng rng(derive_seed(spec.seed, 0x776f726c64ULL));  // world stream

  const double margin = kWallClearance + kFootprintHalf;
  const double lo_x = -world.half_x() + margin;
  const double hi_x = world.half_x() - margin;
  const double lo_y = -world.half_y() + margin;
  const double hi_y = world.half_y() - margin;
  if (spec.pillar_count > 0 && (lo_x >= hi_x || lo_y >= hi_y)) {
    throw std::runtime_error("build_environment: world too small for pillars");
  }

  for (int i = 0; i < spec.pillar_count; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kPlacementAttempts && !placed; ++attempt) {
      Pillar candidate;
      candidate.cx = rng.uniform(lo_x, hi_x);
      candidate.cy = rng.uniform(lo_y, hi_y);
      candidate.half_x = kFootprintHalf;
      candidate.half_y = kFootprintHalf;
      const bool clear = std::all_of(
          world.pillars.begin(), world.pillars.end(), [&](const Pillar& p) {
            return footprint_gap(candidate, p) >= kMinFootprintGap;
          });
      if (!clear) continue;
      const std::size_t n_heights = std::size(kPillarHeights);
      candidate.height = std::min(
          kPillarHeights[rng.uniform_index(n_heights)], world.extent_z);
      world.pillars.push_back(candidate);
      placed = true;
    }
    if (!placed) {
      throw std::runtime_error(
          "build_environment: pillar placement failed after retries");
    }
  }
  return world;
}

std::string world_to_json(const World& world) {
  nlohmann::json j;
  j["version"] = 1;
  j["extent"] = {world.extent_x, world.extent_y, world.extent_z};
  j["z_min"] = world.z_min;
  j["z_max"] = world.z_max;
  j["seed"] = world.seed;
  auto& pillars = j["pillars"] = nlohmann::json::array();
  for (const auto& p : world.pillars) {
    pillars.push_back({{"cx", p.cx},
                       {"cy", p.cy},
                       {"half_x", p.half_x},
                       {"half_y", p.half_y},
                       {"height", p.height}});
  }
  return j.dump(2);
}

World world_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  World world;
  world.extent_x = j.at("extent").at(0).get<double>();
  world.extent_y = j.at("extent").at(1).get<double>();
  world.extent_z = j.at("extent").at(2).get<double>();
  world.z_min = j.at("z_min").get<double>();
  world.z_max = j.at("z_max").get<double>();
  world.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& p : j.at("pillars")) {
    Pillar pillar;
    pillar.cx = p.at("cx").get<double>();
    pillar.cy = p.at("cy").get<double>();
    pillar.half_x = p.at("half_x").get<double>();
    pillar.half_y = p.at("half_y").get<double>();
    pillar.height = p.at("height").get<double>();
    world.pillars.push_back(pillar);
  }
  return world;
}

}  // namespace spikenav
