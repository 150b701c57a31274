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

#include <ostream>
#include <span>
#include <string>

#include "hrx/device.hpp"
#include "hrx/digital.hpp"
#include "hrx/optical.hpp"

namespace hrx {

/// Shortest round-trip scientific form ("8e-08", "1.5e+00"), independent of locale.
std::string format_number(double value);

/// stage,mode,re,im,energy
void write_optical_trace_csv(std::ostream& out, const OpticalTrace& trace);

/// stage,mode,symbol_bits
void write_digital_trace_csv(std::ostream& out, const DigitalTrace& trace);

/// v_ds_v,i_d_a,p_w,mode
void write_power_curve_csv(std::ostream& out, std::span<const CurvePoint> curve);

struct DelayRow {
    double v_gs;
    double t_on;
    double t_off;
};

/// v_gs_v,t_on_s,t_off_s
void write_delay_curve_csv(std::ostream& out, std::span<const DelayRow> rows);

}  // namespace hrx
