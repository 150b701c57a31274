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

namespace hrx {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPicosecondsPerSecond = 1e12;

/// depth * per_stage, accumulated on a picosecond grid so that decimal stage
/// delays (10 ps, 80 ns) give decimal latencies and exact ratios.
inline double scale_by_depth(unsigned depth, double per_stage_seconds) {
    return depth * (per_stage_seconds * kPicosecondsPerSecond) / kPicosecondsPerSecond;
}

}  // namespace hrx
