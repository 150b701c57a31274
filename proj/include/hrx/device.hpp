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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hrx {

enum class ChannelType { Nmos, Pmos };

std::string_view to_string(ChannelType channel) noexcept;

/// Transconductance coefficient fitted at one gate voltage.
struct KProfile {
    double v_gs;
    double k;
};

/// Datasheet constants of a discrete MOSFET. PMOS values are entered as
/// positive magnitudes and run through the same equations as NMOS.
struct MosfetDatasheet {
    std::string name;
    ChannelType channel = ChannelType::Nmos;
    double r_g = 0.0;           // internal gate resistance, ohm
    double c_iss_at_0v = 0.0;   // input capacitance at V_DS = 0, F
    double c_iss_at_vds = 0.0;  // input capacitance at operating V_DS, F
    double v_th = 0.0;          // threshold, V
    double v_gp = 0.0;          // gate plateau, V
    std::optional<double> k;    // mu_n C_ox w / l, A/V^2
    double lambda = 0.0;        // channel-length modulation, 1/V
    double v_off = 0.0;         // lower V_DS bound of the dissipation integral, V
    std::vector<KProfile> k_profiles;

    /// Throws DomainError on any out-of-range constant.
    void validate() const;

    /// k for a gate voltage: a profile fitted at v_gs, else `k`, else the
    /// profile with the nearest gate voltage. Throws CalibrationError when
    /// none of those exist.
    double k_at(double v_gs) const;
};

struct OperatingPoint {
    double v_gs = 0.0;
    double v_ds = 0.0;

    /// Throws DomainError for negative or non-finite voltages.
    void validate() const;
};

struct GateDrive {
    double r_gext = 10.0;  // external gate resistor, ohm
};

enum class Mode { Cutoff, Triode, Saturation };

std::string_view to_string(Mode mode) noexcept;

// Closed-form device equations with no mode checks. overdrive = V_GS - V_th.
namespace mosfet_eq {

double triode_current(double k, double overdrive, double v_ds);
double saturation_current(double k, double overdrive, double v_ds, double lambda);
/// Integral of triode_current over V_DS from v_off to v_ds.
double triode_dissipation(double k, double overdrive, double v_ds, double v_off);
double turn_on_delay(double r_total, double c_iss_at_vds, double v_gs, double v_gp);
double turn_off_delay(double r_total, double c_iss_at_0v, double v_gs, double v_gp);

}  // namespace mosfet_eq

/// V_GS <= V_th is Cutoff; otherwise Triode below V_DS = V_GS - V_th and
/// Saturation from there up.
Mode classify_mode(const MosfetDatasheet& ds, const OperatingPoint& op);

/// Throw ModeError outside their region.
double i_d_triode(const MosfetDatasheet& ds, const OperatingPoint& op);
double i_d_saturation(const MosfetDatasheet& ds, const OperatingPoint& op);

/// Drain current for whichever region `op` falls in (0 in cutoff).
double drain_current(const MosfetDatasheet& ds, const OperatingPoint& op);

/// I_D * V_DS.
double power(const MosfetDatasheet& ds, const OperatingPoint& op);

/// Triode dissipation between v_off and v_ds at fixed v_gs. Requires
/// 0 <= v_off <= v_ds <= v_gs - v_th; throws DomainError otherwise.
double dissipation_integral(const MosfetDatasheet& ds, double v_gs, double v_ds, double v_off);

/// (R_g + R_gext) C_iss(V_DS) ln(V_GS / (V_GS - V_gp)).
/// Throws NoTurnOnError when v_gs <= v_gp.
double turn_on_delay(const MosfetDatasheet& ds, const GateDrive& drive, double v_gs);

/// (R_g + R_gext) C_iss(0 V) ln(V_GS / V_gp). Throws DomainError when
/// v_gs < v_gp, where the expression turns negative.
double turn_off_delay(const MosfetDatasheet& ds, const GateDrive& drive, double v_gs);

/// k that makes the current model reproduce `reference_current` at `op`.
/// `ds.k` is ignored. Throws CalibrationError for a non-positive reference,
/// a cutoff operating point, or a vanishing model denominator.
double calibrate_k(const MosfetDatasheet& ds, double reference_current, const OperatingPoint& op);

struct CurvePoint {
    double v_ds;
    double i_d;
    double p;
    Mode mode;
};

/// power() sampled at v_ds = from, from + step, ... up to `to` inclusive.
/// Throws DomainError when step <= 0 or to < from.
std::vector<CurvePoint> power_sweep(const MosfetDatasheet& ds, double v_gs, double from, double to,
                                    double step);

}  // namespace hrx
