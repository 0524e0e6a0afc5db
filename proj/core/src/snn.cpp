#include "spikenav/snn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spikenav {

bool NetworkGrads::all_finite() const {
  for (const auto& w : d_weights) {
    if (!w.allFinite()) return false;
  }
  for (const auto& b : d_biases) {
    if (!b.allFinite()) return false;
  }
  return true;
}

void lif_layer_step(const LayerParams& layer, const Eigen::VectorXd& input_spikes,
                    Eigen::VectorXd& current, Eigen::VectorXd& voltage,
                    Eigen::VectorXd& spikes) {
  current = layer.decay_current * current + layer.weights * input_spikes +
            layer.biases;
  voltage = layer.decay_voltage *
                (voltage.array() * (1.0 - spikes.array())).matrix() +
            current;
  spikes = (voltage.array() >= layer.threshold).cast<double>();
}

std::pair<SpikeArray, ForwardTrace> san_forward(const SpikeArray& input,
                                                const ActorParams& params) {
  if (params.empty()) throw std::invalid_argument("san_forward: no layers");
  const Eigen::Index steps = input.steps();
  if (steps < 1) throw std::invalid_argument("san_forward: empty spike array");

  Eigen::Index below = input.channels();
  for (std::size_t l = 0; l < params.size(); ++l) {
    const auto& p = params[l];
    if (p.in_channels() != below || p.biases.size() != p.out_channels()) {
      throw std::invalid_argument("san_forward: layer " + std::to_string(l) +
                                  " shape mismatch");
    }
    below = p.out_channels();
  }

  const std::size_t n_layers = params.size();
  ForwardTrace trace;
  trace.input = input.data;
  trace.currents.resize(n_layers);
  trace.voltages.resize(n_layers);
  trace.spikes.resize(n_layers);

  std::vector<Eigen::VectorXd> current(n_layers), voltage(n_layers),
      spikes(n_layers);
  for (std::size_t l = 0; l < n_layers; ++l) {
    const Eigen::Index out = params[l].out_channels();
    current[l] = Eigen::VectorXd::Zero(out);
    voltage[l] = Eigen::VectorXd::Zero(out);
    spikes[l] = Eigen::VectorXd::Zero(out);
    trace.currents[l].resize(out, steps);
    trace.voltages[l].resize(out, steps);
    trace.spikes[l].resize(out, steps);
  }

  for (Eigen::Index t = 0; t < steps; ++t) {
    Eigen::VectorXd below_spikes = input.data.col(t);
    for (std::size_t l = 0; l < n_layers; ++l) {
      lif_layer_step(params[l], below_spikes, current[l], voltage[l], spikes[l]);
      trace.currents[l].col(t) = current[l];
      trace.voltages[l].col(t) = voltage[l];
      trace.spikes[l].col(t) = spikes[l];
      below_spikes = spikes[l];
    }
  }

  return {SpikeArray(trace.spikes.back()), std::move(trace)};
}

Eigen::ArrayXd surrogate_spike_derivative(const Eigen::ArrayXd& voltage,
                                          double threshold, double width) {
  if (width <= 0.0) {
    throw std::invalid_argument("surrogate_spike_derivative: width must be > 0");
  }
  return ((voltage - threshold).abs() < width / 2.0).cast<double>() / width;
}

NetworkGrads san_backward(const ForwardTrace& trace, const ActorParams& params,
                          const Eigen::VectorXd& loss_grad_action, int steps,
                          double surrogate_width) {
  const std::size_t n_layers = params.size();
  if (trace.layer_count() != static_cast<Eigen::Index>(n_layers)) {
    throw std::invalid_argument("san_backward: trace/params layer mismatch");
  }
  if (steps != trace.steps()) {
    throw std::invalid_argument("san_backward: step count mismatch");
  }
  if (loss_grad_action.size() != params.back().out_channels()) {
    throw std::invalid_argument("san_backward: seed has wrong channel count");
  }

  NetworkGrads grads;
  grads.d_weights.resize(n_layers);
  grads.d_biases.resize(n_layers);
  for (std::size_t l = 0; l < n_layers; ++l) {
    grads.d_weights[l] =
        Eigen::MatrixXd::Zero(params[l].out_channels(), params[l].in_channels());
    grads.d_biases[l] = Eigen::VectorXd::Zero(params[l].out_channels());
  }

  const Eigen::VectorXd output_seed =
      loss_grad_action / static_cast<double>(steps);

  // Gradients w.r.t. voltage/current at time t+1, per layer; empty until the
  // first (latest) step has been processed.
  std::vector<Eigen::VectorXd> d_voltage_next(n_layers), d_current_next(n_layers);
  std::vector<Eigen::VectorXd> d_current_now(n_layers);

  for (Eigen::Index t = steps - 1; t >= 0; --t) {
    const bool last_step = (t == steps - 1);
    for (std::size_t li = n_layers; li-- > 0;) {
      const auto& p = params[li];

      // d(loss)/d(spikes): spatial hop from the layer above (or the decoded
      // action for the top layer), plus the reset-gate path from t+1.
      Eigen::VectorXd d_spikes =
          (li == n_layers - 1)
              ? output_seed
              : Eigen::VectorXd(params[li + 1].weights.transpose() *
                                d_current_now[li + 1]);
      if (!last_step) {
        d_spikes.array() -= d_voltage_next[li].array() * p.decay_voltage *
                            trace.voltages[li].col(t).array();
      }

      // d(loss)/d(voltage): through the spike nonlinearity (surrogate), plus
      // the decayed, reset-gated voltage chain from t+1.
      Eigen::VectorXd d_voltage =
          (d_spikes.array() *
           surrogate_spike_derivative(trace.voltages[li].col(t).array(),
                                      p.threshold, surrogate_width))
              .matrix();
      if (!last_step) {
        d_voltage.array() += d_voltage_next[li].array() * p.decay_voltage *
                             (1.0 - trace.spikes[li].col(t).array());
      }

      // d(loss)/d(current): voltage integration plus the current chain.
      Eigen::VectorXd d_current = d_voltage;
      if (!last_step) d_current += p.decay_current * d_current_next[li];

      grads.d_weights[li].noalias() +=
          d_current * trace.spikes_below(li).col(t).transpose();
      grads.d_biases[li] += d_current;

      d_current_now[li] = std::move(d_current);
      d_voltage_next[li] = std::move(d_voltage);
    }
    for (std::size_t l = 0; l < n_layers; ++l) {
      d_current_next[l] = d_current_now[l];
    }
  }

  return grads;
}

ActorParams make_actor(const std::vector<int>& layer_sizes, Rng& rng) {
  if (layer_sizes.size() < 2) {
    throw std::invalid_argument("make_actor: need at least input and output");
  }
  ActorParams params;
  params.reserve(layer_sizes.size() - 1);
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    LayerParams layer;
    const int in = layer_sizes[l];
    const int out = layer_sizes[l + 1];
    if (in < 1 || out < 1) {
      throw std::invalid_argument("make_actor: layer sizes must be positive");
    }
    const double bound = 1.0 / std::sqrt(static_cast<double>(in));
    layer.weights.resize(out, in);
    for (int i = 0; i < out; ++i) {
      for (int j = 0; j < in; ++j) {
        layer.weights(i, j) = rng.uniform(-bound, bound);
      }
    }
    layer.biases = Eigen::VectorXd::Zero(out);
    params.push_back(std::move(layer));
  }
  return params;
}

}  // namespace spikenav
