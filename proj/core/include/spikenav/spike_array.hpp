#pragma once

#include <Eigen/Dense>

namespace spikenav {

/// Binary spike tensor, channels x time steps. Entries are 0.0 or 1.0;
/// double storage so spike arrays feed linear algebra directly.
struct SpikeArray {
  Eigen::MatrixXd data;

  SpikeArray() = default;
  SpikeArray(Eigen::Index channels, Eigen::Index steps)
      : data(Eigen::MatrixXd::Zero(channels, steps)) {}
  explicit SpikeArray(Eigen::MatrixXd values) : data(std::move(values)) {}

  Eigen::Index channels() const { return data.rows(); }
  Eigen::Index steps() const { return data.cols(); }

  bool is_binary() const {
    return ((data.array() == 0.0) || (data.array() == 1.0)).all();
  }
};

}  // namespace spikenav
