#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spikenav/codec.hpp"
#include "spikenav/rng.hpp"

namespace spikenav {

struct DenseLayer {
  Eigen::MatrixXd weights;  // out x in
  Eigen::VectorXd biases;   // out
};

/// Analog MLP scoring (state, action) pairs: rectified hidden layers, linear
/// scalar output. Input is the 21-channel normalized state concatenated with
/// the 4-channel action.
struct CriticParams {
  std::vector<DenseLayer> layers;

  Eigen::Index input_size() const {
    return layers.empty() ? 0 : layers.front().weights.cols();
  }
};

struct CriticGrads {
  std::vector<Eigen::MatrixXd> d_weights;
  std::vector<Eigen::VectorXd> d_biases;

  bool all_finite() const;
};

/// Pre-activations recorded by critic_forward, consumed by critic_backward.
struct CriticTrace {
  Eigen::VectorXd input;
  std::vector<Eigen::VectorXd> pre_activations;  // per layer, before relu
};

/// Hidden layers initialized uniform +-1/sqrt(fan_in); the final layer
/// uniform +-3e-3 so initial Q values sit near zero.
/// layer_sizes = {input, hidden..., 1}.
CriticParams make_critic(const std::vector<int>& layer_sizes, Rng& rng);

/// Zero-valued gradient accumulator matching `params`.
CriticGrads make_critic_grads(const CriticParams& params);

double critic_forward(const Eigen::VectorXd& input, const CriticParams& params,
                      CriticTrace* trace = nullptr);

/// Convenience overload for the (state, action) pair.
double critic_forward(const NormalizedState& state, const Action& action,
                      const CriticParams& params, CriticTrace* trace = nullptr);

/// Reverse pass. Accumulates parameter gradients scaled by loss_grad (the
/// derivative of the loss w.r.t. the scalar output) into `accum` when
/// non-null, and returns the gradient w.r.t. the input vector. The rectifier
/// derivative at exactly zero is taken as zero.
Eigen::VectorXd critic_backward(const CriticTrace& trace,
                                const CriticParams& params, double loss_grad,
                                CriticGrads* accum = nullptr);

/// Gradient of the output w.r.t. the action channels (the tail of the input).
Action critic_action_gradient(const CriticTrace& trace,
                              const CriticParams& params);

Eigen::VectorXd concat_state_action(const NormalizedState& state,
                                    const Action& action);

}  // namespace spikenav
