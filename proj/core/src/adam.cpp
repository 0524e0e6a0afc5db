#include "spikenav/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace spikenav {

void adam_update(Eigen::Ref<Eigen::MatrixXd> param, const Eigen::MatrixXd& grad,
                 AdamState& state, std::size_t slot, const AdamConfig& config) {
  if (param.rows() != grad.rows() || param.cols() != grad.cols()) {
    throw std::invalid_argument("adam_update: param/grad shape mismatch");
  }
  if (state.m.size() <= slot) {
    state.m.resize(slot + 1);
    state.v.resize(slot + 1);
  }
  if (state.m[slot].size() == 0) {
    state.m[slot] = Eigen::MatrixXd::Zero(param.rows(), param.cols());
    state.v[slot] = Eigen::MatrixXd::Zero(param.rows(), param.cols());
  }

  // Bias correction uses the step being applied (state.step advances once per
  // optimizer step, after every slot).
  const double t = static_cast<double>(state.step + 1);
  const double c1 = 1.0 - std::pow(config.beta1, t);
  const double c2 = 1.0 - std::pow(config.beta2, t);

  Eigen::MatrixXd& m = state.m[slot];
  Eigen::MatrixXd& v = state.v[slot];
  m = config.beta1 * m + (1.0 - config.beta1) * grad;
  v = config.beta2 * v.array().matrix() +
      (1.0 - config.beta2) * grad.array().square().matrix();
  param.array() -= config.lr * (m.array() / c1) /
                   ((v.array() / c2).sqrt() + config.epsilon);
}

}  // namespace spikenav
