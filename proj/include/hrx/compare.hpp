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
#include <optional>
#include <string>
#include <vector>

#include "hrx/and_gate.hpp"
#include "hrx/device.hpp"
#include "hrx/errors.hpp"
#include "hrx/optical.hpp"

namespace hrx {

inline constexpr int kReportSchemaVersion = 1;

/// Beamsplitter phase convention of the optical network.
enum class PhaseConvention { Zero, Quadrature };

struct CompareConfig {
    unsigned order = 10;
    double v_gs = 3.3;
    GateDrive drive{};
    std::string nmos = "SiRA04DP";  // preset name or datasheet path
    std::string pmos = "SiA469DJ";
    PhaseConvention phase = PhaseConvention::Zero;
    bool phase_correction = false;
    ChipGeometry geometry{};
    std::string policy = "stage-worst-case";
    /// Informational only; fibre links are not modeled.
    std::optional<double> link_propagation_s;

    /// Codewords are all checked up to this order, sampled above it.
    unsigned exhaustive_limit = 10;
    std::size_t sampled_codewords = 64;
    std::uint64_t sample_seed = 0x5eed'c0de'0000'0001ULL;

    /// Throws ConfigError on an invalid order, gate voltage, resistance or geometry.
    void validate() const;

    BeamsplitterSpec beamsplitter() const;
    OpticalOptions optical_options() const { return {phase_correction}; }
};

struct PowerSample {
    std::string device;
    std::string mode;
    double v_gs = 0.0;
    double v_ds = 0.0;
    double i_d = 0.0;
    double p = 0.0;

    friend bool operator==(const PowerSample&, const PowerSample&) = default;
};

struct ComparisonReport {
    int schema_version = kReportSchemaVersion;
    unsigned order = 0;
    unsigned depth = 0;
    std::uint64_t beamsplitter_count = 0;
    /// 6 transistors per AND (NAND + NOT), 4 ANDs per logical beamsplitter.
    std::uint64_t transistor_count = 0;
    std::uint64_t codewords_verified = 0;

    std::string optical_convention;
    double optical_stage_delay_s = 0.0;
    double optical_latency_s = 0.0;
    double optical_runtime_power_w = 0.0;
    bool optical_tuning_power_excluded = true;

    double v_gs = 0.0;
    double r_gext = 0.0;
    std::string nmos_device;
    std::string pmos_device;
    double nmos_turn_on_s = 0.0;
    double nmos_turn_off_s = 0.0;
    double pmos_turn_on_s = 0.0;
    double pmos_turn_off_s = 0.0;
    double and_delay_s = 0.0;
    std::string delay_policy;
    double electronic_latency_s = 0.0;
    std::vector<PowerSample> electronic_power;

    double latency_ratio = 0.0;
    std::optional<double> link_propagation_s;

    friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

/// A codeword the receiver failed to decode, with the offending trace as CSV.
class VerificationFailure : public DecodeFailure {
  public:
    VerificationFailure(const std::string& what, std::string substrate, ModeIndex codeword,
                        std::string trace_csv)
        : DecodeFailure(what),
          substrate_(std::move(substrate)),
          codeword_(codeword),
          trace_csv_(std::move(trace_csv)) {}

    const std::string& substrate() const noexcept { return substrate_; }
    ModeIndex codeword() const noexcept { return codeword_; }
    const std::string& trace_csv() const noexcept { return trace_csv_; }

  private:
    std::string substrate_;
    ModeIndex codeword_;
    std::string trace_csv_;
};

/// Codewords decoded before a report: every j up to the exhaustive limit,
/// otherwise `sampled_codewords` deterministic draws.
std::vector<ModeIndex> verification_codewords(const CompareConfig& config);

/// Decodes every verification codeword optically and digitally (plain and
/// inverted). Returns the count; throws VerificationFailure on the first miss.
std::uint64_t verify_codewords(const CompareConfig& config);

/// Power at a cutoff, a mid-triode (V_DS = (V_GS - V_th) / 2) and a
/// saturation (V_DS = V_GS) point for one device.
std::vector<PowerSample> operating_point_power(const MosfetDatasheet& ds, double v_gs);

/// Verifies decoding, then assembles latency, power and count figures.
/// Throws ConfigError, IoError (datasheet files) or VerificationFailure.
ComparisonReport run_compare(const CompareConfig& config);

/// electronic / optical latency, both taken on a picosecond grid.
double latency_ratio(double electronic_latency_s, double optical_latency_s);

}  // namespace hrx
