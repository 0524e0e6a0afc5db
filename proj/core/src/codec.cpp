#include "spikenav/codec.hpp"

#include <cmath>
#include <stdexcept>

namespace spikenav {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Splits a signed value into a (positive, negative) channel pair scaled by
// `maximum`. Exactly one channel is nonzero unless the value is zero.
std::pair<double, double> polarity_pair(double value, double maximum) {
  const double magnitude = std::abs(value) / maximum;
  if (value >= 0.0) return {magnitude, 0.0};
  return {0.0, magnitude};
}

}  // namespace

Eigen::VectorXd pool_depth(const Eigen::MatrixXd& depth_image, int rows,
                           int cols, double valid_min, double valid_max) {
  const Eigen::Index h = depth_image.rows();
  const Eigen::Index w = depth_image.cols();
  if (h == 0 || w == 0) throw std::invalid_argument("pool_depth: empty image");
  if (rows < 1 || cols < 1 || h % rows != 0 || w % cols != 0) {
    throw std::invalid_argument(
        "pool_depth: image dimensions not divisible by pooling grid");
  }

  const Eigen::Index patch_h = h / rows;
  const Eigen::Index patch_w = w / cols;
  Eigen::VectorXd features(rows * cols);

  for (int pr = 0; pr < rows; ++pr) {
    for (int pc = 0; pc < cols; ++pc) {
      double sum = 0.0;
      int valid = 0;
      for (Eigen::Index i = pr * patch_h; i < (pr + 1) * patch_h; ++i) {
        for (Eigen::Index j = pc * patch_w; j < (pc + 1) * patch_w; ++j) {
          const double d = depth_image(i, j);
          if (std::isnan(d) || d < valid_min || d > valid_max) continue;
          sum += d;
          ++valid;
        }
      }
      features[pr * cols + pc] = valid > 0 ? sum / valid : valid_max;
    }
  }
  return features;
}

NormalizedState normalize_state(const Observation& obs,
                                const CodecConfig& config) {
  if (obs.r <= 0.0) {
    throw std::invalid_argument("normalize_state: r must be > 0");
  }
  if ((obs.depth_features.array() <= 0.0).any()) {
    throw std::invalid_argument("normalize_state: depth features must be > 0");
  }

  NormalizedState state;
  state[0] = std::min(config.r_min / obs.r, 1.0);
  state[1] = obs.theta / kPi;
  const auto [phi_pos, phi_neg] = polarity_pair(obs.phi / kPi, 1.0);
  state[2] = phi_pos;
  state[3] = phi_neg;
  state[4] = obs.v_xy / config.v_xy_max;
  const auto [yaw_pos, yaw_neg] = polarity_pair(obs.v_yaw, config.v_yaw_max);
  state[5] = yaw_pos;
  state[6] = yaw_neg;
  const auto [z_pos, z_neg] = polarity_pair(obs.v_z, config.v_z_max);
  state[7] = z_pos;
  state[8] = z_neg;
  for (int i = 0; i < kDepthFeatures; ++i) {
    state[9 + i] = std::min(config.d_min / obs.depth_features[i], 1.0);
  }
  return state;
}

SpikeArray uniform_encode(const NormalizedState& state, int steps, Rng& rng) {
  if (steps < 1) throw std::invalid_argument("uniform_encode: steps must be >= 1");
  SpikeArray spikes(kNormalizedChannels, steps);
  for (int i = 0; i < kNormalizedChannels; ++i) {
    for (int t = 0; t < steps; ++t) {
      spikes.data(i, t) = state[i] > rng.uniform() ? 1.0 : 0.0;
    }
  }
  return spikes;
}

Eigen::VectorXd rate_decode(const SpikeArray& spikes) {
  if (spikes.steps() < 1) {
    throw std::invalid_argument("rate_decode: empty spike array");
  }
  return spikes.data.rowwise().mean();
}

Action to_action(const Eigen::VectorXd& rates) {
  if (rates.size() != kActionChannels) {
    throw std::invalid_argument("to_action: expected 4 channels");
  }
  return Action(rates);
}

SettingVelocity map_velocity(const Action& action, const CodecConfig& config) {
  SettingVelocity cmd;
  cmd.v_xy = config.alpha_xy * (action[0] + action[1]) + config.v_xy_min;
  cmd.v_yaw = config.alpha_yaw * (action[1] - action[0]);
  cmd.v_z = config.alpha_z * (action[3] - action[2]);
  return cmd;
}

}  // namespace spikenav
