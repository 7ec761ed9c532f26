// Copyright 2026 The HQPU Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hqpu/qcore/hilbert_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace hqpu::qcore {

HilbertSpace HilbertSpace::compose(std::vector<Subsystem> subsystems) {
  for (std::size_t i = 0; i < subsystems.size(); ++i) {
    const auto& s = subsystems[i];
    if (s.label.empty()) {
      throw std::invalid_argument("subsystem label must not be empty");
    }
    if (s.dim == 0) {
      throw std::invalid_argument("subsystem '" + s.label + "' has zero dimension");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (subsystems[j].label == s.label) {
        throw std::invalid_argument("duplicate subsystem label '" + s.label + "'");
      }
    }
  }

  HilbertSpace space;
  space.subsystems_ = std::move(subsystems);
  space.strides_.assign(space.subsystems_.size(), 1);
  std::size_t stride = 1;
  for (std::size_t i = space.subsystems_.size(); i-- > 0;) {
    space.strides_[i] = stride;
    stride *= space.subsystems_[i].dim;
  }
  space.total_dim_ = stride;
  return space;
}

bool HilbertSpace::contains(std::string_view label) const noexcept {
  return std::any_of(subsystems_.begin(), subsystems_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t HilbertSpace::slot(std::string_view label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) return i;
  }
  throw std::invalid_argument("unknown subsystem '" + std::string(label) + "'");
}

std::size_t HilbertSpace::index(std::span<const std::size_t> local) const {
  if (local.size() != subsystems_.size()) {
    throw std::invalid_argument("expected one local index per subsystem");
  }
  std::size_t flat = 0;
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (local[i] >= subsystems_[i].dim) {
      throw std::invalid_argument("local index out of range for '" + subsystems_[i].label + "'");
    }
    flat += local[i] * strides_[i];
  }
  return flat;
}

std::size_t HilbertSpace::index(
    std::initializer_list<std::pair<std::string_view, std::size_t>> levels) const {
  std::vector<std::size_t> local(subsystems_.size(), 0);
  for (const auto& [label, level] : levels) local[slot(label)] = level;
  return index(local);
}

std::vector<std::size_t> HilbertSpace::local_indices(std::size_t flat) const {
  if (flat >= total_dim_) throw std::invalid_argument("flat index out of range");
  std::vector<std::size_t> local(subsystems_.size());
  for (std::size_t i = 0; i < subsystems_.size(); ++i) local[i] = level(flat, i);
  return local;
}

}  // namespace hqpu::qcore
