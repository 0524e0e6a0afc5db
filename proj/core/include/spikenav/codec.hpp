#pragma once

#include <Eigen/Dense>

#include "spikenav/rng.hpp"
#include "spikenav/spike_array.hpp"

namespace spikenav {

/// Decoded action, four channels in [0, 1]. Channels 0/1 drive forward speed
/// (sum) and yaw rate (difference); channels 2/3 drive vertical speed
/// (difference).
using Action = Eigen::Vector4d;

/// Normalized 21-channel state vector, every entry in [0, 1]. Ordering:
///   [0] r~   [1] theta~   [2] phi+   [3] phi-   [4] v_xy~
///   [5] v_yaw+   [6] v_yaw-   [7] v_z+   [8] v_z-   [9..20] depth features
/// Signed quantities occupy +/- channel pairs; at most one of each pair is
/// nonzero. This ordering is recorded in checkpoints.
using NormalizedState = Eigen::Matrix<double, 21, 1>;

inline constexpr int kStateChannels = 18;
inline constexpr int kNormalizedChannels = 21;
inline constexpr int kActionChannels = 4;
inline constexpr int kDepthFeatures = 12;

/// Raw observation handed to the policy: goal bearing in MAV-local spherical
/// coordinates, last commanded velocities, and pooled depth features.
struct Observation {
  double r = 0.0;      // distance to goal, m (> 0)
  double theta = 0.0;  // polar angle from +z, rad, [0, pi]
  double phi = 0.0;    // azimuth relative to current yaw, rad, [-pi, pi]
  double v_xy = 0.0;   // horizontal speed, m/s
  double v_yaw = 0.0;  // yaw rate, rad/s
  double v_z = 0.0;    // vertical speed, m/s
  Eigen::Matrix<double, kDepthFeatures, 1> depth_features;  // m, > 0

  Observation() { depth_features.setZero(); }
};

/// Velocity command sent to the vehicle.
struct SettingVelocity {
  double v_xy = 0.0;   // m/s, [v_xy_min, 0.5]
  double v_yaw = 0.0;  // rad/s, [-1.8, 1.8]
  double v_z = 0.0;    // m/s, [-0.18, 0.18]
};

/// Normalization and action-mapping constants. These are embedded in
/// checkpoints so a trained network is self-describing.
struct CodecConfig {
  double r_min = 0.3;      // r~ = min(r_min / r, 1)
  double v_xy_max = 0.5;   // v_xy~ = v_xy / v_xy_max
  double d_min = 0.5;      // d~ = min(d_min / d, 1)
  double v_yaw_max = 2.0;  // +/- pair scale for yaw rate
  double v_z_max = 0.2;    // +/- pair scale for vertical speed

  double alpha_xy = 0.225;  // v_xy = alpha_xy * (a0 + a1) + v_xy_min
  double alpha_yaw = 1.8;   // v_yaw = alpha_yaw * (a1 - a0)
  double alpha_z = 0.18;    // v_z = alpha_z * (a3 - a2)
  double v_xy_min = 0.05;   // exploration floor for forward speed

  int pool_rows = 3;  // depth pooling grid; rows * cols == kDepthFeatures
  int pool_cols = 4;
  double depth_range_min = 0.5;   // pixels outside [min, max] are invalid
  double depth_range_max = 10.0;  // all-invalid patches pool to this
};

/// Average-pools a depth image into a rows x cols feature grid (row-major
/// patch order). Pixels that are NaN or outside [valid_min, valid_max] are
/// excluded from the patch mean; a patch with no valid pixel yields
/// valid_max. Image dimensions must be divisible by the grid.
/// Throws std::invalid_argument on an empty or non-divisible image.
Eigen::VectorXd pool_depth(const Eigen::MatrixXd& depth_image, int rows,
                           int cols, double valid_min, double valid_max);

/// Maps an observation to the 21-channel normalized state. Distances enter as
/// saturating inverses (closer -> larger), angles and speeds as linear ratios,
/// signed quantities as +/- channel pairs.
/// Throws std::invalid_argument if r or any depth feature is <= 0.
NormalizedState normalize_state(const Observation& obs,
                                const CodecConfig& config);

/// Stochastic rate encoding: channel i spikes at step t iff
/// state[i] > u with u drawn fresh from U[0,1). A value of 1 always spikes,
/// a value of 0 never does. Draws channel-major (all steps of channel 0,
/// then channel 1, ...).
SpikeArray uniform_encode(const NormalizedState& state, int steps, Rng& rng);

/// Per-channel mean firing rate over time; each entry is a multiple of
/// 1/steps in [0, 1].
Eigen::VectorXd rate_decode(const SpikeArray& spikes);

/// Narrows a decoded rate vector to an Action; throws on channel mismatch.
Action to_action(const Eigen::VectorXd& rates);

/// Maps an action in [0,1]^4 to a velocity command. Forward speed uses the
/// channel sum plus the exploration floor; yaw and vertical rates use channel
/// differences so they are symmetric around zero.
SettingVelocity map_velocity(const Action& action, const CodecConfig& config);

}  // namespace spikenav
