#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spikenav/codec.hpp"
#include "spikenav/depth_camera.hpp"
#include "spikenav/world.hpp"

namespace spikenav {

/// MAV pose plus the velocity command currently being executed. Yaw is kept
/// in (-pi, pi].
struct MavState {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double yaw = 0.0;
  double v_xy = 0.0;   // commanded horizontal speed
  double v_yaw = 0.0;  // commanded yaw rate
  double v_z = 0.0;    // commanded vertical speed
};

enum class Outcome { goal, collision, timeout };

std::string outcome_name(Outcome outcome);
Outcome outcome_from_name(const std::string& name);

struct EpisodeOutcome {
  Outcome status = Outcome::timeout;
  int steps = 0;
  double path_length = 0.0;  // m
  double sim_time = 0.0;     // s
};

struct TrajectoryPoint {
  int step = 0;
  double t_sim = 0.0;
  double x = 0.0, y = 0.0, z = 0.0, yaw = 0.0;
  double v_xy_cmd = 0.0, v_yaw_cmd = 0.0, v_z_cmd = 0.0;
  double reward = 0.0;
  double d_goal = 0.0;
};

struct RewardConfig {
  double goal_reward = 30.0;
  double collision_reward = -30.0;
  double progress_gain = 15.0;      // per meter of approach
  double goal_threshold = 0.54;     // m
  double obstacle_threshold = 0.5;  // m
  // Progress reward is positive when moving toward the goal; flipping this
  // pays for moving away instead.
  bool progress_positive = true;
};

struct StepReward {
  double reward = 0.0;
  bool done = false;
  Outcome outcome = Outcome::timeout;
};

struct EpisodeConfig {
  int max_steps = 500;
  double control_dt = 0.2;        // s
  double takeoff_altitude = 1.0;  // m
  RewardConfig reward;
  CameraIntrinsics camera;
  CodecConfig codec;
};

struct StartPose {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;
};

/// Goal bearing in the MAV-local spherical frame: {distance, polar angle from
/// +z, azimuth relative to yaw wrapped to [-pi, pi]}. Azimuth is 0 by
/// convention when the goal is on the vertical axis.
std::array<double, 3> spherical_to_goal(const MavState& mav,
                                        const Eigen::Vector3d& goal);

/// First-order velocity kinematics over one control period: yaw integrates
/// first, translation follows the new heading, altitude is clamped to the
/// world's flight band. Commands are honored exactly (no inertia).
MavState step_kinematics(const MavState& mav, const SettingVelocity& cmd,
                         double dt, const World& world);

/// Shortest xy distance from a point to a rectangular footprint (zero
/// inside).
double point_to_footprint_distance(double x, double y, const Pillar& pillar);

/// Collision test: pillars taller than the current altitude plus all walls.
/// Returns {distance < obstacle_threshold, distance}.
std::pair<bool, double> check_collision(const MavState& mav, const World& world,
                                        double obstacle_threshold = 0.5);

/// Reward for the transition prev -> cur. Goal reach (+goal_reward) takes
/// precedence over collision (+collision_reward); otherwise the shaped
/// progress term.
StepReward compute_reward(const MavState& prev, const MavState& cur,
                          const World& world, const Eigen::Vector3d& goal,
                          const RewardConfig& config);

/// Assembles the policy-facing observation: spherical goal bearing, last
/// commanded velocities, pooled depth features.
Observation observe(const MavState& mav, const World& world,
                    const Eigen::Vector3d& goal, const CameraIntrinsics& camera,
                    const CodecConfig& codec);

using Policy =
    std::function<std::pair<Action, SettingVelocity>(const Observation&)>;

/// Runs one episode: teleport take-off to the configured altitude, then
/// observe -> act -> step -> reward until goal/collision/step budget. The
/// trajectory records the post-takeoff pose and every subsequent pose.
/// Throws std::invalid_argument if start or goal violate world clearance.
std::pair<EpisodeOutcome, std::vector<TrajectoryPoint>> run_episode(
    const World& world, const StartPose& start, const Eigen::Vector3d& goal,
    const Policy& policy, const EpisodeConfig& config);

/// Hand-coded proportional navigation policy (no learning): turns toward the
/// goal, slows while misaligned, climbs or descends toward the goal altitude.
/// Serves as a simulator sanity oracle and an evaluation-protocol stand-in.
std::pair<Action, SettingVelocity> scripted_policy(const Observation& obs,
                                                   const CodecConfig& codec);

/// Minimum clearance between a point and every pillar footprint.
double pillar_clearance(const World& world, double x, double y);

std::string trajectory_csv_header();
std::string trajectory_to_csv(const std::vector<TrajectoryPoint>& trajectory);
std::vector<TrajectoryPoint> trajectory_from_csv(const std::string& text);

}  // namespace spikenav
