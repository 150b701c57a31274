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

#include "hrx/csv.hpp"

#include <array>
#include <charconv>
#include <complex>

namespace hrx {

std::string format_number(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::scientific);
    return std::string(buf.data(), ec == std::errc() ? end : buf.data());
}

void write_optical_trace_csv(std::ostream& out, const OpticalTrace& trace) {
    out << "stage,mode,re,im,energy\n";
    for (std::size_t s = 0; s < trace.stages.size(); ++s) {
        const auto amps = trace.stages[s].amplitudes();
        for (std::size_t k = 0; k < amps.size(); ++k) {
            out << s << ',' << k << ',' << format_number(amps[k].real()) << ','
                << format_number(amps[k].imag()) << ',' << format_number(std::norm(amps[k]))
                << '\n';
        }
    }
}

void write_digital_trace_csv(std::ostream& out, const DigitalTrace& trace) {
    out << "stage,mode,symbol_bits\n";
    for (std::size_t s = 0; s < trace.stages.size(); ++s) {
        const auto symbols = trace.stages[s].symbols();
        for (std::size_t k = 0; k < symbols.size(); ++k) {
            out << s << ',' << k << ',' << to_bits(symbols[k]) << '\n';
        }
    }
}

void write_power_curve_csv(std::ostream& out, std::span<const CurvePoint> curve) {
    out << "v_ds_v,i_d_a,p_w,mode\n";
    for (const auto& p : curve) {
        out << format_number(p.v_ds) << ',' << format_number(p.i_d) << ',' << format_number(p.p)
            << ',' << to_string(p.mode) << '\n';
    }
}

void write_delay_curve_csv(std::ostream& out, std::span<const DelayRow> rows) {
    out << "v_gs_v,t_on_s,t_off_s\n";
    for (const auto& r : rows) {
        out << format_number(r.v_gs) << ',' << format_number(r.t_on) << ','
            << format_number(r.t_off) << '\n';
    }
}

}  // namespace hrx
