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

#include "hrx/optical.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hrx/errors.hpp"
#include "hrx/units.hpp"

namespace hrx {

namespace {

using Kernel = std::array<std::complex<double>, 4>;  // row-major 2x2

constexpr double kSpecTolerance = 1e-12;

Kernel splitter_matrix(const BeamsplitterSpec& spec) {
    const double st = std::sqrt(spec.transmittance());
    const double sr = std::sqrt(spec.reflectance());
    const auto ephi = std::polar(1.0, spec.phase());
    return {st, ephi * sr, -std::conj(ephi) * sr, st};
}

Kernel network_kernel(const BeamsplitterSpec& spec, OpticalOptions options) {
    Kernel u = splitter_matrix(spec);
    if (!options.phase_correction) {
        return u;
    }
    const auto ephi = std::polar(1.0, spec.phase());
    const auto in_shift = std::conj(ephi);  // on the hi input
    const auto out_shift = -ephi;           // on the hi output
    return {u[0], u[1] * in_shift, out_shift * u[2], out_shift * u[3] * in_shift};
}

void require_finite(CoherentAmplitude a, const char* what) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw DomainError(std::string(what) + " amplitude is not finite");
    }
}

void apply_stage(const Stage& stage, const Kernel& u, std::vector<CoherentAmplitude>& amps) {
    for (const auto& [lo, hi] : stage) {
        const auto a1 = amps[lo];
        const auto a2 = amps[hi];
        amps[lo] = u[0] * a1 + u[1] * a2;
        amps[hi] = u[2] * a1 + u[3] * a2;
    }
}

void require_matching(const HadamardPlan& plan, const ModeVector& input) {
    if (input.size() != plan.modes()) {
        throw DomainError("mode vector has " + std::to_string(input.size()) +
                          " modes but the plan expects " + std::to_string(plan.modes()));
    }
}

}  // namespace

BeamsplitterSpec BeamsplitterSpec::make(double transmittance, double reflectance, double phase) {
    const auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
    if (!in_unit(transmittance) || !in_unit(reflectance)) {
        throw InvalidSpecError("transmittance and reflectance must lie in [0, 1]");
    }
    if (std::abs(transmittance + reflectance - 1.0) > kSpecTolerance) {
        throw InvalidSpecError("beamsplitter needs R + T = 1, got R + T = " +
                               std::to_string(transmittance + reflectance));
    }
    if (!std::isfinite(phase)) {
        throw InvalidSpecError("beamsplitter phase is not finite");
    }
    return BeamsplitterSpec(transmittance, reflectance, phase);
}

BeamsplitterSpec BeamsplitterSpec::hadamard() { return make(0.5, 0.5, 0.0); }

BeamsplitterSpec BeamsplitterSpec::quadrature() { return make(0.5, 0.5, std::numbers::pi / 2); }

std::pair<CoherentAmplitude, CoherentAmplitude> beamsplitter_apply(
    const BeamsplitterSpec& spec, CoherentAmplitude a1, CoherentAmplitude a2) {
    require_finite(a1, "first input");
    require_finite(a2, "second input");
    const Kernel u = splitter_matrix(spec);
    return {u[0] * a1 + u[1] * a2, u[2] * a1 + u[3] * a2};
}

ModeVector::ModeVector(std::vector<CoherentAmplitude> amplitudes) : amps_(std::move(amplitudes)) {
    if (!is_power_of_two(amps_.size())) {
        throw DomainError("mode vector length " + std::to_string(amps_.size()) +
                          " is not a power of two");
    }
    for (const auto& a : amps_) {
        require_finite(a, "mode");
    }
}

double ModeVector::energy() const noexcept {
    double total = 0.0;
    for (const auto& a : amps_) {
        total += std::norm(a);
    }
    return total;
}

ModeVector encode_optical(ModeIndex j, const HadamardOrder& order, CoherentAmplitude alpha) {
    require_finite(alpha, "alpha");
    const SignVector row = encode_codeword(j, order);
    std::vector<CoherentAmplitude> amps(row.size());
    for (std::size_t k = 0; k < amps.size(); ++k) {
        amps[k] = alpha * static_cast<double>(row[k]);
    }
    return ModeVector(std::move(amps));
}

ModeVector propagate_optical(const HadamardPlan& plan, const ModeVector& input,
                             const BeamsplitterSpec& spec, OpticalOptions options) {
    require_matching(plan, input);
    const Kernel u = network_kernel(spec, options);
    std::vector<CoherentAmplitude> amps(input.amplitudes().begin(), input.amplitudes().end());
    for (const auto& stage : plan.stages()) {
        apply_stage(stage, u, amps);
    }
    return ModeVector(std::move(amps));
}

OpticalTrace propagate_optical_trace(const HadamardPlan& plan, const ModeVector& input,
                                     const BeamsplitterSpec& spec, OpticalOptions options) {
    require_matching(plan, input);
    const Kernel u = network_kernel(spec, options);
    OpticalTrace trace;
    trace.stages.reserve(plan.stages().size() + 1);
    trace.stages.push_back(input);
    std::vector<CoherentAmplitude> amps(input.amplitudes().begin(), input.amplitudes().end());
    for (const auto& stage : plan.stages()) {
        apply_stage(stage, u, amps);
        trace.stages.emplace_back(amps);
    }
    return trace;
}

OpticalDecision decode_optical(const ModeVector& output) {
    const double total = output.energy();
    if (!(total > 0.0)) {
        throw NoSignalError("optical output carries no energy");
    }
    ModeIndex best = 0;
    double best_energy = std::norm(output[0]);
    for (std::size_t k = 1; k < output.size(); ++k) {
        const double e = std::norm(output[k]);
        if (e > best_energy) {
            best = k;
            best_energy = e;
        }
    }
    return {best, best_energy / total};
}

void ChipGeometry::validate() const {
    const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(bs_traversal_length_m)) {
        throw DomainError("beamsplitter traversal length must be > 0");
    }
    if (!positive(refractive_index)) {
        throw DomainError("refractive index must be > 0");
    }
    if (full_chip_length_m && !positive(*full_chip_length_m)) {
        throw DomainError("full chip length must be > 0");
    }
    if (stage_delay_s && !positive(*stage_delay_s)) {
        throw DomainError("per-stage optical delay must be > 0");
    }
}

double ChipGeometry::stage_delay() const {
    validate();
    if (stage_delay_s) {
        return *stage_delay_s;
    }
    return bs_traversal_length_m * refractive_index / kSpeedOfLight;
}

double optical_latency(const HadamardPlan& plan, const ChipGeometry& geometry) {
    geometry.validate();
    if (geometry.full_chip_length_m) {
        return *geometry.full_chip_length_m * geometry.refractive_index / kSpeedOfLight;
    }
    return scale_by_depth(depth(plan.order().value()), geometry.stage_delay());
}

}  // namespace hrx
