#include "spikenav/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace spikenav {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double wrap_angle(double angle) {
  double wrapped = std::remainder(angle, 2.0 * kPi);
  if (wrapped <= -kPi) wrapped += 2.0 * kPi;
  return wrapped;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

std::string outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::goal:
      return "goal";
    case Outcome::collision:
      return "collision";
    case Outcome::timeout:
      return "timeout";
  }
  return "timeout";
}

Outcome outcome_from_name(const std::string& name) {
  if (name == "goal") return Outcome::goal;
  if (name == "collision") return Outcome::collision;
  if (name == "timeout") return Outcome::timeout;
  throw std::invalid_argument("unknown outcome: " + name);
}

std::array<double, 3> spherical_to_goal(const MavState& mav,
                                        const Eigen::Vector3d& goal) {
  const Eigen::Vector3d rel = goal - mav.position;
  const double r = rel.norm();
  if (r == 0.0) {
    throw std::invalid_argument("spherical_to_goal: MAV is at the goal");
  }
  const double theta = std::acos(std::clamp(rel.z() / r, -1.0, 1.0));
  double phi = 0.0;
  if (rel.x() != 0.0 || rel.y() != 0.0) {
    phi = wrap_angle(std::atan2(rel.y(), rel.x()) - mav.yaw);
  }
  return {r, theta, phi};
}

MavState step_kinematics(const MavState& mav, const SettingVelocity& cmd,
                         double dt, const World& world) {
  if (dt <= 0.0) throw std::invalid_argument("step_kinematics: dt must be > 0");
  MavState next = mav;
  next.yaw = wrap_angle(mav.yaw + cmd.v_yaw * dt);
  next.position.x() = mav.position.x() + cmd.v_xy * std::cos(next.yaw) * dt;
  next.position.y() = mav.position.y() + cmd.v_xy * std::sin(next.yaw) * dt;
  next.position.z() =
      std::clamp(mav.position.z() + cmd.v_z * dt, world.z_min, world.z_max);
  next.v_xy = cmd.v_xy;
  next.v_yaw = cmd.v_yaw;
  next.v_z = cmd.v_z;
  return next;
}

double point_to_footprint_distance(double x, double y, const Pillar& pillar) {
  const double dx = std::max(std::abs(x - pillar.cx) - pillar.half_x, 0.0);
  const double dy = std::max(std::abs(y - pillar.cy) - pillar.half_y, 0.0);
  return std::hypot(dx, dy);
}

std::pair<bool, double> check_collision(const MavState& mav, const World& world,
                                        double obstacle_threshold) {
  // Pillars lower than the current altitude are passed over, not hit.
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& pillar : world.pillars) {
    if (pillar.height <= mav.position.z()) continue;
    nearest = std::min(nearest, point_to_footprint_distance(
                                    mav.position.x(), mav.position.y(), pillar));
  }
  // Walls always count; distance is signed so an escaped MAV reads negative.
  nearest = std::min(nearest, world.half_x() - std::abs(mav.position.x()));
  nearest = std::min(nearest, world.half_y() - std::abs(mav.position.y()));
  return {nearest < obstacle_threshold, nearest};
}

StepReward compute_reward(const MavState& prev, const MavState& cur,
                          const World& world, const Eigen::Vector3d& goal,
                          const RewardConfig& config) {
  StepReward result;
  const double d_prev = (prev.position - goal).norm();
  const double d_cur = (cur.position - goal).norm();
  if (d_cur < config.goal_threshold) {
    return {config.goal_reward, true, Outcome::goal};
  }
  if (check_collision(cur, world, config.obstacle_threshold).first) {
    return {config.collision_reward, true, Outcome::collision};
  }
  const double progress = d_prev - d_cur;
  result.reward =
      config.progress_gain * (config.progress_positive ? progress : -progress);
  result.done = false;
  result.outcome = Outcome::timeout;
  return result;
}

Observation observe(const MavState& mav, const World& world,
                    const Eigen::Vector3d& goal, const CameraIntrinsics& camera,
                    const CodecConfig& codec) {
  Observation obs;
  const auto [r, theta, phi] = spherical_to_goal(mav, goal);
  obs.r = r;
  obs.theta = theta;
  obs.phi = phi;
  obs.v_xy = mav.v_xy;
  obs.v_yaw = mav.v_yaw;
  obs.v_z = mav.v_z;
  const Eigen::MatrixXd depth = render_depth(mav, world, camera);
  const Eigen::VectorXd features =
      pool_depth(depth, codec.pool_rows, codec.pool_cols, camera.range_min,
                 camera.range_max);
  if (features.size() != kDepthFeatures) {
    throw std::invalid_argument("observe: pooling grid must yield 12 features");
  }
  obs.depth_features = features;
  return obs;
}

double pillar_clearance(const World& world, double x, double y) {
  double clearance = std::numeric_limits<double>::infinity();
  for (const auto& pillar : world.pillars) {
    clearance = std::min(clearance, point_to_footprint_distance(x, y, pillar));
  }
  return clearance;
}

std::pair<EpisodeOutcome, std::vector<TrajectoryPoint>> run_episode(
    const World& world, const StartPose& start, const Eigen::Vector3d& goal,
    const Policy& policy, const EpisodeConfig& config) {
  const double margin = 1.0;
  if (std::abs(start.x) > world.half_x() - margin ||
      std::abs(start.y) > world.half_y() - margin ||
      std::abs(goal.x()) > world.half_x() - margin ||
      std::abs(goal.y()) > world.half_y() - margin) {
    throw std::invalid_argument("run_episode: start/goal too close to walls");
  }
  if (pillar_clearance(world, start.x, start.y) < margin ||
      pillar_clearance(world, goal.x(), goal.y()) < margin) {
    throw std::invalid_argument("run_episode: start/goal too close to pillars");
  }

  MavState mav;
  mav.position = {start.x, start.y, config.takeoff_altitude};  // take-off
  mav.yaw = wrap_angle(start.yaw);

  EpisodeOutcome outcome;
  std::vector<TrajectoryPoint> trajectory;
  auto record = [&](int step, double reward) {
    TrajectoryPoint point;
    point.step = step;
    point.t_sim = step * config.control_dt;
    point.x = mav.position.x();
    point.y = mav.position.y();
    point.z = mav.position.z();
    point.yaw = mav.yaw;
    point.v_xy_cmd = mav.v_xy;
    point.v_yaw_cmd = mav.v_yaw;
    point.v_z_cmd = mav.v_z;
    point.reward = reward;
    point.d_goal = (mav.position - goal).norm();
    trajectory.push_back(point);
  };
  record(0, 0.0);

  if ((mav.position - goal).norm() < config.reward.goal_threshold) {
    outcome.status = Outcome::goal;  // already there after take-off
    return {outcome, trajectory};
  }

  for (int step = 1; step <= config.max_steps; ++step) {
    const Observation obs =
        observe(mav, world, goal, config.camera, config.codec);
    const auto [action, cmd] = policy(obs);
    (void)action;
    const MavState next = step_kinematics(mav, cmd, config.control_dt, world);
    const StepReward reward =
        compute_reward(mav, next, world, goal, config.reward);
    outcome.path_length += (next.position - mav.position).norm();
    mav = next;
    record(step, reward.reward);
    outcome.steps = step;
    outcome.sim_time = step * config.control_dt;
    if (reward.done) {
      outcome.status = reward.outcome;
      return {outcome, trajectory};
    }
  }
  outcome.status = Outcome::timeout;
  return {outcome, trajectory};
}

std::pair<Action, SettingVelocity> scripted_policy(const Observation& obs,
                                                   const CodecConfig& codec) {
  // Turn toward the goal; hold forward speed back while badly misaligned.
  const double turn = std::clamp(obs.phi * 1.5, -1.0, 1.0);
  const double aligned = std::abs(obs.phi) < 0.5 ? 1.0 : 0.15;
  Action action;
  action[0] = clamp01(aligned - 0.5 * turn);
  action[1] = clamp01(aligned + 0.5 * turn);
  // Vertical error from the polar angle: above horizontal means climb.
  const double vertical = obs.r * std::cos(obs.theta);
  const double climb = std::clamp(vertical * 3.0, -1.0, 1.0);
  action[2] = clamp01(-climb);
  action[3] = clamp01(climb);
  return {action, map_velocity(action, codec)};
}

std::string trajectory_csv_header() {
  return "step,t_sim,x,y,z,yaw,v_xy_cmd,v_yaw_cmd,v_z_cmd,reward,d_goal";
}

std::string trajectory_to_csv(const std::vector<TrajectoryPoint>& trajectory) {
  std::string out = trajectory_csv_header() + "\n";
  char line[512];
  for (const auto& p : trajectory) {
    std::snprintf(line, sizeof(line),
                  "%d,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,"
                  "%.10g\n",
                  p.step, p.t_sim, p.x, p.y, p.z, p.yaw, p.v_xy_cmd,
                  p.v_yaw_cmd, p.v_z_cmd, p.reward, p.d_goal);
    out += line;
  }
  return out;
}

std::vector<TrajectoryPoint> trajectory_from_csv(const std::string& text) {
  std::vector<TrajectoryPoint> trajectory;
  std::istringstream stream(text);
  std::string line;
  if (!std::getline(stream, line)) {
    throw std::invalid_argument("trajectory_from_csv: empty input");
  }
  if (line != trajectory_csv_header()) {
    throw std::invalid_argument("trajectory_from_csv: unexpected header");
  }
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    TrajectoryPoint p;
    const int fields = std::sscanf(
        line.c_str(), "%d,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf", &p.step,
        &p.t_sim, &p.x, &p.y, &p.z, &p.yaw, &p.v_xy_cmd, &p.v_yaw_cmd,
        &p.v_z_cmd, &p.reward, &p.d_goal);
    if (fields != 11) {
      throw std::invalid_argument("trajectory_from_csv: malformed row");
    }
    trajectory.push_back(p);
  }
  return trajectory;
}

}  // namespace spikenav
