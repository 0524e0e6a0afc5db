#include "spikenav/replay.hpp"

#include <stdexcept>

namespace spikenav {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) {
    throw std::invalid_argument("ReplayBuffer: capacity must be > 0");
  }
  storage_.reserve(capacity);
}

void ReplayBuffer::push(Transition transition) {
  if (size_ < capacity_) {
    storage_.push_back(std::move(transition));
    ++size_;
  } else {
    storage_[cursor_] = std::move(transition);
  }
  cursor_ = (cursor_ + 1) % capacity_;
}

const Transition& ReplayBuffer::at(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("ReplayBuffer::at");
  if (size_ < capacity_) return storage_[index];
  return storage_[(cursor_ + index) % capacity_];
}

std::vector<std::size_t> ReplayBuffer::sample_indices(std::size_t batch,
                                                      Rng& rng) const {
  if (size_ == 0) throw std::logic_error("ReplayBuffer: sampling empty buffer");
  std::vector<std::size_t> indices(batch);
  for (auto& index : indices) index = rng.uniform_index(size_);
  return indices;
}

}  // namespace spikenav
