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

#include "hrx/curves.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "hrx/datasheet_io.hpp"
#include "hrx/errors.hpp"
#include "hrx/report.hpp"

namespace hrx {

std::vector<CurvePoint> power_curve(const MosfetDatasheet& ds, double v_gs, double step) {
    return power_sweep(ds, v_gs, 0.0, v_gs, step);
}

DelayCurve delay_curve(const MosfetDatasheet& ds, const GateDrive& drive, double from, double to,
                       double step) {
    if (!std::isfinite(step) || step <= 0.0) {
        throw DomainError("delay sweep step must be > 0");
    }
    if (!std::isfinite(from) || !std::isfinite(to) || to < from) {
        throw DomainError("delay sweep range is empty");
    }
    DelayCurve curve;
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
        const double v_gs = std::min(from + static_cast<double>(i) * step, to);
        if (v_gs <= ds.v_gp) {
            ++curve.omitted;
            continue;
        }
        curve.rows.push_back({v_gs, turn_on_delay(ds, drive, v_gs), turn_off_delay(ds, drive, v_gs)});
    }
    return curve;
}

std::string power_curve_filename(const std::string& device, double v_gs) {
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v_gs);
    return "power_" + device + "_vgs" + std::string(buf.data(), ec == std::errc() ? end : buf.data()) +
           ".csv";
}

std::string delay_curve_filename(const std::string& device) { return "delay_" + device + ".csv"; }

std::vector<EmittedFile> emit_power_curves(const CurveConfig& config,
                                           const std::filesystem::path& out_dir) {
    std::vector<EmittedFile> files;
    for (const auto& name : config.devices) {
        const MosfetDatasheet ds = resolve_device(name);
        for (const double v_gs : config.power_v_gs) {
            const auto curve = power_curve(ds, v_gs, config.v_ds_step);
            std::ostringstream csv;
            write_power_curve_csv(csv, curve);
            const auto path = out_dir / power_curve_filename(ds.name, v_gs);
            write_text_file(path, csv.str());
            files.push_back({path, curve.size(), 0});
        }
    }
    return files;
}

std::vector<EmittedFile> emit_delay_curves(const CurveConfig& config,
                                           const std::filesystem::path& out_dir) {
    std::vector<EmittedFile> files;
    for (const auto& name : config.devices) {
        const MosfetDatasheet ds = resolve_device(name);
        const double from = config.delay_from.value_or(ds.v_gp + 0.1);
        const auto curve = delay_curve(ds, config.drive, from, config.delay_to, config.delay_step);
        std::ostringstream csv;
        write_delay_curve_csv(csv, curve.rows);
        const auto path = out_dir / delay_curve_filename(ds.name);
        write_text_file(path, csv.str());
        files.push_back({path, curve.rows.size(), curve.omitted});
    }
    return files;
}

}  // namespace hrx
