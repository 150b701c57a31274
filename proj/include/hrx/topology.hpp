// Copyright 2026 The hadamard-rx Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include "hrx/fwht.hpp"

namespace hrx {

/// Two modes combined by one beamsplitter. `lo` takes the "+" output of the
/// kernel and `hi` the "-" output.
struct ModePair {
    ModeIndex lo;
    ModeIndex hi;

    friend bool operator==(const ModePair&, const ModePair&) = default;
};

using Stage = std::vector<ModePair>;

/// Butterfly network shared by the optical and digital receivers.
///
/// Stage s pairs every k having bit s clear with k | 2^s, least significant
/// bit first. Immutable once built.
class HadamardPlan {
  public:
    const HadamardOrder& order() const noexcept { return order_; }
    std::size_t modes() const noexcept { return order_.modes(); }
    const std::vector<Stage>& stages() const noexcept { return stages_; }
    std::size_t pair_count() const noexcept;

    /// {"order": n, "stages": [[[lo, hi], ...], ...]}
    std::string to_json() const;

  private:
    friend HadamardPlan build_butterfly(const HadamardOrder& order);
    HadamardPlan(HadamardOrder order, std::vector<Stage> stages)
        : order_(order), stages_(std::move(stages)) {}

    HadamardOrder order_;
    std::vector<Stage> stages_;
};

/// Throws DomainError for n = 0 (the cap is enforced by HadamardOrder).
HadamardPlan build_butterfly(const HadamardOrder& order);

/// Beamsplitters needed for an order-n receiver: (2^n / 2) * log2(2^n).
std::uint64_t beamsplitter_count(unsigned n);

/// Network depth in beamsplitter (or logical beamsplitter) layers: log2(2^n).
unsigned depth(unsigned n);

}  // namespace hrx
