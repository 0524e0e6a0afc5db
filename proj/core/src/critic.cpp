#include "spikenav/critic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spikenav {

bool CriticGrads::all_finite() const {
  for (const auto& w : d_weights) {
    if (!w.allFinite()) return false;
  }
  for (const auto& b : d_biases) {
    if (!b.allFinite()) return false;
  }
  return true;
}

CriticParams make_critic(const std::vector<int>& layer_sizes, Rng& rng) {
  if (layer_sizes.size() < 2 || layer_sizes.back() != 1) {
    throw std::invalid_argument("make_critic: sizes must end with 1 output");
  }
  CriticParams params;
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    const int in = layer_sizes[l];
    const int out = layer_sizes[l + 1];
    if (in < 1 || out < 1) {
      throw std::invalid_argument("make_critic: layer sizes must be positive");
    }
    const bool final_layer = (l + 2 == layer_sizes.size());
    const double bound =
        final_layer ? 3e-3 : 1.0 / std::sqrt(static_cast<double>(in));
    DenseLayer layer;
    layer.weights.resize(out, in);
    for (int i = 0; i < out; ++i) {
      for (int j = 0; j < in; ++j) {
        layer.weights(i, j) = rng.uniform(-bound, bound);
      }
    }
    layer.biases = Eigen::VectorXd::Zero(out);
    params.layers.push_back(std::move(layer));
  }
  return params;
}

CriticGrads make_critic_grads(const CriticParams& params) {
  CriticGrads grads;
  for (const auto& layer : params.layers) {
    grads.d_weights.push_back(
        Eigen::MatrixXd::Zero(layer.weights.rows(), layer.weights.cols()));
    grads.d_biases.push_back(Eigen::VectorXd::Zero(layer.biases.size()));
  }
  return grads;
}

double critic_forward(const Eigen::VectorXd& input, const CriticParams& params,
                      CriticTrace* trace) {
  if (params.layers.empty()) {
    throw std::invalid_argument("critic_forward: no layers");
  }
  if (input.size() != params.input_size()) {
    throw std::invalid_argument("critic_forward: input size mismatch");
  }
  if (trace) {
    trace->input = input;
    trace->pre_activations.clear();
  }
  Eigen::VectorXd activation = input;
  for (std::size_t l = 0; l < params.layers.size(); ++l) {
    Eigen::VectorXd pre =
        params.layers[l].weights * activation + params.layers[l].biases;
    if (trace) trace->pre_activations.push_back(pre);
    if (l + 1 == params.layers.size()) {
      activation = pre;  // linear output
    } else {
      activation = pre.cwiseMax(0.0);
    }
  }
  if (activation.size() != 1) {
    throw std::invalid_argument("critic_forward: output must be scalar");
  }
  return activation[0];
}

double critic_forward(const NormalizedState& state, const Action& action,
                      const CriticParams& params, CriticTrace* trace) {
  return critic_forward(concat_state_action(state, action), params, trace);
}

Eigen::VectorXd critic_backward(const CriticTrace& trace,
                                const CriticParams& params, double loss_grad,
                                CriticGrads* accum) {
  const std::size_t n = params.layers.size();
  if (trace.pre_activations.size() != n) {
    throw std::invalid_argument("critic_backward: trace/params mismatch");
  }

  Eigen::VectorXd d_pre = Eigen::VectorXd::Constant(1, loss_grad);
  for (std::size_t l = n; l-- > 0;) {
    const Eigen::VectorXd& below =
        l == 0 ? trace.input
               : trace.pre_activations[l - 1].cwiseMax(0.0).eval();
    if (accum) {
      accum->d_weights[l].noalias() += d_pre * below.transpose();
      accum->d_biases[l] += d_pre;
    }
    Eigen::VectorXd d_below = params.layers[l].weights.transpose() * d_pre;
    if (l == 0) return d_below;
    // relu': 1 on strictly positive pre-activations.
    d_pre = (d_below.array() *
             (trace.pre_activations[l - 1].array() > 0.0).cast<double>())
                .matrix();
  }
  return {};
}

Action critic_action_gradient(const CriticTrace& trace,
                              const CriticParams& params) {
  const Eigen::VectorXd d_input = critic_backward(trace, params, 1.0, nullptr);
  return Action(d_input.tail(kActionChannels));
}

Eigen::VectorXd concat_state_action(const NormalizedState& state,
                                    const Action& action) {
  Eigen::VectorXd input(kNormalizedChannels + kActionChannels);
  input.head(kNormalizedChannels) = state;
  input.tail(kActionChannels) = action;
  return input;
}

}  // namespace spikenav
