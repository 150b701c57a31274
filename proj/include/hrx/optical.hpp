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

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hrx/fwht.hpp"
#include "hrx/topology.hpp"

namespace hrx {

/// alpha of a coherent state |alpha>, in sqrt(photons). Photon statistics are
/// not modeled; a mode is fully described by this amplitude.
using CoherentAmplitude = std::complex<double>;

/// Lossless two-port beamsplitter
///
///   | b1 |   |  sqrt(T)              e^{i phi} sqrt(R) | | a1 |
///   | b2 | = | -e^{-i phi} sqrt(R)   sqrt(T)           | | a2 |
class BeamsplitterSpec {
  public:
    /// Throws InvalidSpecError unless T, R lie in [0, 1] with |R + T - 1| <= 1e-12.
    static BeamsplitterSpec make(double transmittance, double reflectance, double phase);

    /// 50:50, phi = 0. The network default: its kernel is the real Hadamard
    /// butterfly up to the sign of the `hi` output.
    static BeamsplitterSpec hadamard();

    /// 50:50, phi = pi/2. Concentrates energy only with phase correction.
    static BeamsplitterSpec quadrature();

    double transmittance() const noexcept { return t_; }
    double reflectance() const noexcept { return r_; }
    double phase() const noexcept { return phi_; }

  private:
    BeamsplitterSpec(double t, double r, double phi) : t_(t), r_(r), phi_(phi) {}
    double t_;
    double r_;
    double phi_;
};

struct OpticalOptions {
    /// Surround each beamsplitter with phase shifters (e^{-i phi} on the `hi`
    /// input, -e^{i phi} on the `hi` output) so a 50:50 splitter of any phase
    /// acts as the real kernel (1/sqrt2)[[1, 1], [1, -1]].
    bool phase_correction = false;
};

std::pair<CoherentAmplitude, CoherentAmplitude> beamsplitter_apply(
    const BeamsplitterSpec& spec, CoherentAmplitude a1, CoherentAmplitude a2);

/// Amplitudes across 2^n optical modes.
class ModeVector {
  public:
    /// Throws DomainError for non power-of-two length or non-finite entries.
    explicit ModeVector(std::vector<CoherentAmplitude> amplitudes);

    std::span<const CoherentAmplitude> amplitudes() const noexcept { return amps_; }
    std::size_t size() const noexcept { return amps_.size(); }
    const CoherentAmplitude& operator[](std::size_t k) const { return amps_[k]; }

    /// Sum of |alpha_k|^2 (mean photon number).
    double energy() const noexcept;

  private:
    std::vector<CoherentAmplitude> amps_;
};

/// BPSK codeword j: mode k carries alpha * (-1)^(j . k).
ModeVector encode_optical(ModeIndex j, const HadamardOrder& order, CoherentAmplitude alpha);

/// Mode vectors before the first stage (index 0) and after each stage.
struct OpticalTrace {
    std::vector<ModeVector> stages;

    const ModeVector& output() const { return stages.back(); }
};

/// Throws DomainError when the input length differs from the plan's mode count.
ModeVector propagate_optical(const HadamardPlan& plan, const ModeVector& input,
                             const BeamsplitterSpec& spec, OpticalOptions options = {});

OpticalTrace propagate_optical_trace(const HadamardPlan& plan, const ModeVector& input,
                                     const BeamsplitterSpec& spec, OpticalOptions options = {});

struct OpticalDecision {
    ModeIndex index;
    double energy_fraction;
};

/// Brightest mode (lowest index on ties) and its share of the total energy.
/// Throws NoSignalError for an all-zero vector.
OpticalDecision decode_optical(const ModeVector& output);

/// Light path through the chip.
struct ChipGeometry {
    double bs_traversal_length_m = 2e-3;
    double refractive_index = 1.0;
    /// Whole-chip path length; when set, latency is this path alone.
    std::optional<double> full_chip_length_m;
    /// Per-stage delay taken as given instead of derived from length.
    std::optional<double> stage_delay_s;

    /// Throws DomainError unless every length, the index and the stage delay are > 0.
    void validate() const;

    /// Time to cross one beamsplitter layer.
    double stage_delay() const;
};

double optical_latency(const HadamardPlan& plan, const ChipGeometry& geometry);

/// Passive beamsplitters draw nothing while decoding.
constexpr double optical_power() noexcept { return 0.0; }

/// Tunable splitters draw power only while being tuned; that step is not
/// part of the runtime figure above.
constexpr bool optical_tuning_power_excluded() noexcept { return true; }

}  // namespace hrx
