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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hqpu::qcore {

struct Subsystem {
  std::string label;
  std::size_t dim = 0;

  bool operator==(const Subsystem&) const = default;
};

/// Ordered tensor product of labelled subsystems. The first subsystem is the
/// most significant factor of the flat basis index (row-major Kronecker
/// convention), so for QD (x) NV the flat index is qd * dim(NV) + nv.
class HilbertSpace {
 public:
  HilbertSpace() = default;

  /// Throws std::invalid_argument on a duplicate label, empty label or a zero
  /// dimension.
  static HilbertSpace compose(std::vector<Subsystem> subsystems);

  const std::vector<Subsystem>& subsystems() const noexcept { return subsystems_; }
  std::size_t size() const noexcept { return subsystems_.size(); }
  std::size_t total_dim() const noexcept { return total_dim_; }

  bool contains(std::string_view label) const noexcept;
  /// Position of `label` in the subsystem list; throws std::invalid_argument.
  std::size_t slot(std::string_view label) const;
  std::size_t dim(std::string_view label) const { return subsystems_[slot(label)].dim; }
  /// Product of the dimensions of all subsystems after `slot`.
  std::size_t stride(std::size_t slot) const { return strides_.at(slot); }

  /// Flat index of a product basis state given one local index per subsystem.
  std::size_t index(std::span<const std::size_t> local) const;
  std::size_t index(std::initializer_list<std::size_t> local) const {
    return index(std::span<const std::size_t>(local.begin(), local.size()));
  }
  /// Flat index where the named subsystems take the given local levels and all
  /// others sit in level 0.
  std::size_t index(std::initializer_list<std::pair<std::string_view, std::size_t>> levels) const;

  std::vector<std::size_t> local_indices(std::size_t flat) const;
  /// Local level of subsystem `slot` in flat basis state `flat`.
  std::size_t level(std::size_t flat, std::size_t slot) const {
    return (flat / strides_[slot]) % subsystems_[slot].dim;
  }

  bool operator==(const HilbertSpace& other) const { return subsystems_ == other.subsystems_; }

 private:
  std::vector<Subsystem> subsystems_;
  std::vector<std::size_t> strides_;
  std::size_t total_dim_ = 1;
};

inline HilbertSpace compose_space(std::vector<Subsystem> subsystems) {
  return HilbertSpace::compose(std::move(subsystems));
}

}  // namespace hqpu::qcore
