#pragma once

#include <cstddef>
#include <vector>

#include "spikenav/codec.hpp"
#include "spikenav/rng.hpp"

namespace spikenav {

/// One step of experience. The stored action is the executed one
/// (post-noise, post-clip); the observations are raw, normalization happens
/// at sampling time.
struct Transition {
  Observation s;
  Action a = Action::Zero();
  double r = 0.0;
  Observation s_next;
  bool done = false;
};

/// Fixed-capacity FIFO ring. Once full, each push overwrites the oldest
/// transition.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void push(Transition transition);

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }

  /// Live transitions are addressed oldest-first: at(0) is the oldest.
  const Transition& at(std::size_t index) const;

  /// Uniform sample of live indices, with replacement.
  std::vector<std::size_t> sample_indices(std::size_t batch, Rng& rng) const;

 private:
  std::size_t capacity_;
  std::size_t size_ = 0;
  std::size_t cursor_ = 0;  // next write position
  std::vector<Transition> storage_;
};

}  // namespace spikenav
