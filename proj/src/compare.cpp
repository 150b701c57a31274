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

#include "hrx/compare.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "hrx/csv.hpp"
#include "hrx/datasheet_io.hpp"
#include "hrx/digital.hpp"
#include "hrx/topology.hpp"
#include "hrx/units.hpp"

namespace hrx {

namespace {

constexpr double kDecodeEnergyTolerance = 1e-9;

void config_require(bool ok, const std::string& what) {
    if (!ok) {
        throw ConfigError(what);
    }
}

std::string convention_name(const CompareConfig& config) {
    std::string name = config.phase == PhaseConvention::Zero ? "phi=0" : "phi=pi/2";
    if (config.phase_correction) {
        name += "+phase-correction";
    }
    return name;
}

void verify_optical(const HadamardPlan& plan, const CompareConfig& config, ModeIndex j) {
    const auto spec = config.beamsplitter();
    const auto input = encode_optical(j, plan.order(), {1.0, 0.0});
    const auto output = propagate_optical(plan, input, spec, config.optical_options());
    const auto decision = decode_optical(output);
    if (decision.index != j || decision.energy_fraction < 1.0 - kDecodeEnergyTolerance) {
        std::ostringstream trace;
        write_optical_trace_csv(trace,
                                propagate_optical_trace(plan, input, spec, config.optical_options()));
        throw VerificationFailure("optical receiver decoded codeword " + std::to_string(j) +
                                      " as " + std::to_string(decision.index) +
                                      " with energy fraction " +
                                      format_number(decision.energy_fraction),
                                  "optical", j, trace.str());
    }
}

void verify_digital(const HadamardPlan& plan, ModeIndex j, bool invert) {
    const auto input = encode_digital(j, plan.order(), invert);
    const auto expected = invert ? Polarity::Negative : Polarity::Positive;
    std::string problem;
    try {
        const auto decision = decode_digital(propagate_digital(plan, input));
        if (decision.index != j || decision.polarity != expected) {
            problem = "decoded index " + std::to_string(decision.index) + " polarity " +
                      (decision.polarity == Polarity::Positive ? "+" : "-");
        }
    } catch (const DecodeFailure& e) {
        problem = e.what();
    }
    if (!problem.empty()) {
        std::ostringstream trace;
        write_digital_trace_csv(trace, propagate_digital_trace(plan, input));
        throw VerificationFailure("digital receiver failed on codeword " + std::to_string(j) +
                                      (invert ? " (inverted)" : "") + ": " + problem,
                                  "digital", j, trace.str());
    }
}

}  // namespace

void CompareConfig::validate() const {
    config_require(order >= 1 && order <= kDefaultMaxOrder,
                   "order must lie in [1, " + std::to_string(kDefaultMaxOrder) + "]");
    config_require(std::isfinite(v_gs) && v_gs > 0.0, "gate voltage must be > 0");
    config_require(std::isfinite(drive.r_gext) && drive.r_gext >= 0.0,
                   "external gate resistance must be >= 0");
    config_require(!link_propagation_s || (std::isfinite(*link_propagation_s) &&
                                           *link_propagation_s >= 0.0),
                   "link propagation time must be >= 0");
    try {
        geometry.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

BeamsplitterSpec CompareConfig::beamsplitter() const {
    return phase == PhaseConvention::Zero ? BeamsplitterSpec::hadamard()
                                          : BeamsplitterSpec::quadrature();
}

std::vector<ModeIndex> verification_codewords(const CompareConfig& config) {
    const HadamardOrder order(config.order);
    std::vector<ModeIndex> codewords;
    if (config.order <= config.exhaustive_limit) {
        codewords.resize(order.modes());
        for (ModeIndex j = 0; j < codewords.size(); ++j) {
            codewords[j] = j;
        }
        return codewords;
    }
    // raw engine output keeps the draw identical across standard libraries
    std::mt19937_64 rng(config.sample_seed);
    codewords.reserve(config.sampled_codewords);
    for (std::size_t i = 0; i < config.sampled_codewords; ++i) {
        codewords.push_back(rng() & (order.modes() - 1));
    }
    return codewords;
}

std::uint64_t verify_codewords(const CompareConfig& config) {
    const auto plan = build_butterfly(HadamardOrder(config.order));
    const auto codewords = verification_codewords(config);
    for (const ModeIndex j : codewords) {
        verify_optical(plan, config, j);
        verify_digital(plan, j, false);
        verify_digital(plan, j, true);
    }
    return codewords.size();
}

std::vector<PowerSample> operating_point_power(const MosfetDatasheet& ds, double v_gs) {
    std::vector<PowerSample> samples;
    const auto add = [&](const OperatingPoint& op) {
        const double i = drain_current(ds, op);
        samples.push_back({ds.name, std::string(to_string(classify_mode(ds, op))), op.v_gs, op.v_ds,
                           i, i * op.v_ds});
    };
    add({0.0, v_gs});
    if (v_gs > ds.v_th) {
        add({v_gs, 0.5 * (v_gs - ds.v_th)});
        add({v_gs, v_gs});
    }
    return samples;
}

double latency_ratio(double electronic_latency_s, double optical_latency_s) {
    return (electronic_latency_s * kPicosecondsPerSecond) /
           (optical_latency_s * kPicosecondsPerSecond);
}

ComparisonReport run_compare(const CompareConfig& config) {
    config.validate();
    const DelayPolicy policy = DelayPolicy::parse(config.policy);
    const MosfetDatasheet nmos = resolve_device(config.nmos);
    const MosfetDatasheet pmos = resolve_device(config.pmos);

    AndGateDelay gate;
    try {
        gate = and_gate_delay(nmos, pmos, config.drive, config.v_gs, policy);
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("gate drive unusable: ") + e.what());
    }

    ComparisonReport report;
    report.codewords_verified = verify_codewords(config);

    const auto plan = build_butterfly(HadamardOrder(config.order));
    report.order = config.order;
    report.depth = depth(config.order);
    report.beamsplitter_count = beamsplitter_count(config.order);
    report.transistor_count = 24 * report.beamsplitter_count;

    report.optical_convention = convention_name(config);
    report.optical_stage_delay_s = config.geometry.stage_delay();
    report.optical_latency_s = optical_latency(plan, config.geometry);
    report.optical_runtime_power_w = optical_power();
    report.optical_tuning_power_excluded = optical_tuning_power_excluded();

    report.v_gs = config.v_gs;
    report.r_gext = config.drive.r_gext;
    report.nmos_device = nmos.name;
    report.pmos_device = pmos.name;
    report.nmos_turn_on_s = gate.devices.nmos_on;
    report.nmos_turn_off_s = gate.devices.nmos_off;
    report.pmos_turn_on_s = gate.devices.pmos_on;
    report.pmos_turn_off_s = gate.devices.pmos_off;
    report.and_delay_s = gate.and_delay;
    report.delay_policy = gate.policy;
    report.electronic_latency_s = electronic_latency(plan, gate.and_delay);
    try {
        for (const auto* ds : {&nmos, &pmos}) {
            auto samples = operating_point_power(*ds, config.v_gs);
            report.electronic_power.insert(report.electronic_power.end(), samples.begin(),
                                           samples.end());
        }
    } catch (const CalibrationError& e) {
        throw ConfigError(e.what());
    }

    report.latency_ratio = latency_ratio(report.electronic_latency_s, report.optical_latency_s);
    report.link_propagation_s = config.link_propagation_s;
    return report;
}

}  // namespace hrx
