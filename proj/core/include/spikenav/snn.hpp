#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "spikenav/rng.hpp"
#include "spikenav/spike_array.hpp"

namespace spikenav {

/// One fully connected layer of two-state LIF neurons. Each neuron keeps a
/// membrane current and a membrane voltage; both decay geometrically, the
/// voltage is reset (gated to zero) on the step after a spike.
struct LayerParams {
  Eigen::MatrixXd weights;  // out_channels x in_channels
  Eigen::VectorXd biases;   // out_channels
  double decay_current = 0.5;
  double decay_voltage = 0.75;
  double threshold = 0.5;

  Eigen::Index in_channels() const { return weights.cols(); }
  Eigen::Index out_channels() const { return weights.rows(); }
};

/// A spiking network is a stack of LIF layers; layer 0 consumes the encoded
/// input spikes.
using ActorParams = std::vector<LayerParams>;

/// Per-layer, per-step state recorded by san_forward. Row = neuron,
/// column = time step. spikes_below(0) is the network input.
struct ForwardTrace {
  Eigen::MatrixXd input;                  // in_channels x T
  std::vector<Eigen::MatrixXd> currents;  // layer -> out x T
  std::vector<Eigen::MatrixXd> voltages;
  std::vector<Eigen::MatrixXd> spikes;

  Eigen::Index steps() const { return input.cols(); }
  Eigen::Index layer_count() const {
    return static_cast<Eigen::Index>(currents.size());
  }
  const Eigen::MatrixXd& spikes_below(std::size_t layer) const {
    return layer == 0 ? input : spikes[layer - 1];
  }
};

struct NetworkGrads {
  std::vector<Eigen::MatrixXd> d_weights;
  std::vector<Eigen::VectorXd> d_biases;

  bool all_finite() const;
};

/// One step of the two-state LIF recurrence for a single layer:
///   C' = decay_current * C + W * input_spikes + b
///   U' = decay_voltage * U .* (1 - O) + C'
///   O' = 1 where U' >= threshold
/// Exposed separately so the decay/reset behaviour is testable from arbitrary
/// initial states.
void lif_layer_step(const LayerParams& layer,
                    const Eigen::VectorXd& input_spikes, Eigen::VectorXd& current,
                    Eigen::VectorXd& voltage, Eigen::VectorXd& spikes);

/// Runs the spiking network over all time steps. States start at zero for
/// every call; nothing carries across control steps. Returns the last layer's
/// spike train and the full state trace needed by san_backward.
/// Throws std::invalid_argument on inter-layer shape mismatch.
std::pair<SpikeArray, ForwardTrace> san_forward(const SpikeArray& input,
                                                const ActorParams& params);

/// Rectangular stand-in for the derivative of the spike nonlinearity:
/// (1/width) on |voltage - threshold| < width/2, zero elsewhere. Support has
/// measure `width` and the function integrates to 1.
Eigen::ArrayXd surrogate_spike_derivative(const Eigen::ArrayXd& voltage,
                                          double threshold, double width);

/// Default surrogate width used throughout training.
inline constexpr double kSurrogateWidth = 1.0;

/// Backpropagates a loss gradient on the decoded action through the unrolled
/// spiking network, in both the layer and time directions.
///
/// The decoded action is the per-channel mean spike rate, so the seed on the
/// output spikes is loss_grad_action / T at every step. Spatial hops go
/// through the next layer's weights and the surrogate derivative; temporal
/// hops carry the voltage chain through decay_voltage with the reset gate
/// (1 - O) and its exact derivative -U, and the current chain through
/// decay_current. Weight gradients accumulate the per-step outer product of
/// the current gradient with the spikes arriving from below.
///
/// Throws std::invalid_argument if `steps` disagrees with the trace.
NetworkGrads san_backward(const ForwardTrace& trace, const ActorParams& params,
                          const Eigen::VectorXd& loss_grad_action, int steps,
                          double surrogate_width = kSurrogateWidth);

/// Fresh network with uniform +-1/sqrt(fan_in) weights, zero biases, and the
/// standard decay/threshold constants. layer_sizes = {in, hidden..., out}.
ActorParams make_actor(const std::vector<int>& layer_sizes, Rng& rng);

}  // namespace spikenav
