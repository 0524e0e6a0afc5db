#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace spikenav {

/// First/second-moment state for one group of parameter tensors, stored in
/// the order the tensors are registered (weights then biases per layer).
struct AdamState {
  std::vector<Eigen::MatrixXd> m;
  std::vector<Eigen::MatrixXd> v;
  std::int64_t step = 0;
};

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// In-place adaptive moment update of one tensor. `slot` selects the moment
/// buffers inside `state`; buffers are created lazily on first use.
void adam_update(Eigen::Ref<Eigen::MatrixXd> param, const Eigen::MatrixXd& grad,
                 AdamState& state, std::size_t slot, const AdamConfig& config);

/// Advances the shared step counter; call once per optimizer step after all
/// slots have been updated.
inline void adam_advance(AdamState& state) { ++state.step; }

}  // namespace spikenav
