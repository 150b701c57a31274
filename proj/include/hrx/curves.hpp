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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hrx/csv.hpp"
#include "hrx/device.hpp"

namespace hrx {

struct CurveConfig {
    std::vector<std::string> devices = {"SiRA04DP", "SiA469DJ"};
    std::vector<double> power_v_gs = {3.3, 5.0};
    double v_ds_step = 0.01;
    GateDrive drive{};
    /// Delay sweep start; defaults to V_gp + 0.1 V of each device.
    std::optional<double> delay_from;
    double delay_to = 10.0;
    double delay_step = 0.05;
};

/// power_sweep over V_DS in [0, v_gs].
std::vector<CurvePoint> power_curve(const MosfetDatasheet& ds, double v_gs, double step);

struct DelayCurve {
    std::vector<DelayRow> rows;
    /// Sweep points at or below V_gp, where the device never turns on.
    std::size_t omitted = 0;
};

/// Throws DomainError when step <= 0 or to < from.
DelayCurve delay_curve(const MosfetDatasheet& ds, const GateDrive& drive, double from, double to,
                       double step);

struct EmittedFile {
    std::filesystem::path path;
    std::size_t rows = 0;
    std::size_t omitted = 0;
};

std::string power_curve_filename(const std::string& device, double v_gs);
std::string delay_curve_filename(const std::string& device);

/// One CSV per (device, V_GS). Throws IoError with the failing path.
std::vector<EmittedFile> emit_power_curves(const CurveConfig& config,
                                           const std::filesystem::path& out_dir);

/// One CSV per device.
std::vector<EmittedFile> emit_delay_curves(const CurveConfig& config,
                                           const std::filesystem::path& out_dir);

}  // namespace hrx
