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

#include "hrx/device.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hrx/errors.hpp"

namespace hrx {

namespace {

constexpr double kProfileMatch = 1e-9;  // V

bool finite(double v) { return std::isfinite(v); }

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw DomainError(what);
    }
}

}  // namespace

std::string_view to_string(ChannelType channel) noexcept {
    return channel == ChannelType::Nmos ? "NMOS" : "PMOS";
}

std::string_view to_string(Mode mode) noexcept {
    switch (mode) {
        case Mode::Cutoff:
            return "cutoff";
        case Mode::Triode:
            return "triode";
        case Mode::Saturation:
            return "saturation";
    }
    return "unknown";
}

void MosfetDatasheet::validate() const {
    const std::string who = name.empty() ? std::string("datasheet") : name;
    require(finite(r_g) && r_g >= 0.0, who + ": r_g must be >= 0");
    require(finite(c_iss_at_0v) && c_iss_at_0v > 0.0, who + ": C_iss at 0 V must be > 0");
    require(finite(c_iss_at_vds) && c_iss_at_vds > 0.0, who + ": C_iss at V_DS must be > 0");
    require(finite(v_th) && v_th > 0.0, who + ": V_th must be > 0");
    require(finite(v_gp) && v_gp > 0.0, who + ": V_gp must be > 0");
    require(!k || (finite(*k) && *k > 0.0), who + ": k must be > 0");
    require(finite(lambda) && lambda >= 0.0, who + ": lambda must be >= 0");
    require(finite(v_off) && v_off >= 0.0, who + ": V_off must be >= 0");
    for (const auto& p : k_profiles) {
        require(finite(p.v_gs) && p.v_gs > 0.0 && finite(p.k) && p.k > 0.0,
                who + ": k profiles need V_GS > 0 and k > 0");
    }
}

double MosfetDatasheet::k_at(double v_gs) const {
    const KProfile* nearest = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : k_profiles) {
        const double d = std::abs(p.v_gs - v_gs);
        if (d <= kProfileMatch) {
            return p.k;
        }
        if (d < best) {
            best = d;
            nearest = &p;
        }
    }
    if (k) {
        return *k;
    }
    if (nearest) {
        return nearest->k;
    }
    throw CalibrationError(name + ": no transconductance coefficient k available");
}

void OperatingPoint::validate() const {
    require(finite(v_gs) && v_gs >= 0.0, "V_GS must be >= 0 (magnitude convention)");
    require(finite(v_ds) && v_ds >= 0.0, "V_DS must be >= 0 (magnitude convention)");
}

namespace mosfet_eq {

double triode_current(double k, double overdrive, double v_ds) {
    return k * (overdrive * v_ds - 0.5 * v_ds * v_ds);
}

double saturation_current(double k, double overdrive, double v_ds, double lambda) {
    return 0.5 * k * overdrive * overdrive * (1.0 + lambda * v_ds);
}

double triode_dissipation(double k, double overdrive, double v_ds, double v_off) {
    const double sq = v_ds * v_ds - v_off * v_off;
    const double cu = v_ds * v_ds * v_ds - v_off * v_off * v_off;
    return 0.5 * k * (overdrive * sq - cu / 3.0);
}

double turn_on_delay(double r_total, double c_iss_at_vds, double v_gs, double v_gp) {
    return r_total * c_iss_at_vds * std::log(v_gs / (v_gs - v_gp));
}

double turn_off_delay(double r_total, double c_iss_at_0v, double v_gs, double v_gp) {
    return r_total * c_iss_at_0v * std::log(v_gs / v_gp);
}

}  // namespace mosfet_eq

Mode classify_mode(const MosfetDatasheet& ds, const OperatingPoint& op) {
    op.validate();
    if (op.v_gs <= ds.v_th) {
        return Mode::Cutoff;
    }
    return op.v_ds < op.v_gs - ds.v_th ? Mode::Triode : Mode::Saturation;
}

double i_d_triode(const MosfetDatasheet& ds, const OperatingPoint& op) {
    if (const Mode m = classify_mode(ds, op); m != Mode::Triode) {
        throw ModeError("triode current requested at a " + std::string(to_string(m)) +
                        " operating point");
    }
    return mosfet_eq::triode_current(ds.k_at(op.v_gs), op.v_gs - ds.v_th, op.v_ds);
}

double i_d_saturation(const MosfetDatasheet& ds, const OperatingPoint& op) {
    if (const Mode m = classify_mode(ds, op); m != Mode::Saturation) {
        throw ModeError("saturation current requested at a " + std::string(to_string(m)) +
                        " operating point");
    }
    return mosfet_eq::saturation_current(ds.k_at(op.v_gs), op.v_gs - ds.v_th, op.v_ds, ds.lambda);
}

double drain_current(const MosfetDatasheet& ds, const OperatingPoint& op) {
    switch (classify_mode(ds, op)) {
        case Mode::Cutoff:
            return 0.0;
        case Mode::Triode:
            return i_d_triode(ds, op);
        case Mode::Saturation:
            return i_d_saturation(ds, op);
    }
    return 0.0;
}

double power(const MosfetDatasheet& ds, const OperatingPoint& op) {
    return drain_current(ds, op) * op.v_ds;
}

double dissipation_integral(const MosfetDatasheet& ds, double v_gs, double v_ds, double v_off) {
    require(finite(v_gs) && finite(v_ds) && finite(v_off), "dissipation bounds must be finite");
    const double overdrive = v_gs - ds.v_th;
    require(overdrive > 0.0, "dissipation integral needs V_GS > V_th");
    require(v_off >= 0.0 && v_off <= v_ds,
            "dissipation integral needs 0 <= V_off <= V_DS, got V_off = " + std::to_string(v_off) +
                ", V_DS = " + std::to_string(v_ds));
    require(v_ds <= overdrive, "dissipation integral is limited to the triode range V_DS <= " +
                                   std::to_string(overdrive) + " V");
    return mosfet_eq::triode_dissipation(ds.k_at(v_gs), overdrive, v_ds, v_off);
}

namespace {

double total_gate_resistance(const MosfetDatasheet& ds, const GateDrive& drive) {
    require(finite(drive.r_gext) && drive.r_gext >= 0.0, "external gate resistance must be >= 0");
    return ds.r_g + drive.r_gext;
}

}  // namespace

double turn_on_delay(const MosfetDatasheet& ds, const GateDrive& drive, double v_gs) {
    const double r = total_gate_resistance(ds, drive);
    if (!finite(v_gs) || v_gs <= ds.v_gp) {
        throw NoTurnOnError(ds.name + ": gate drive " + std::to_string(v_gs) +
                            " V never passes the plateau at " + std::to_string(ds.v_gp) + " V");
    }
    return mosfet_eq::turn_on_delay(r, ds.c_iss_at_vds, v_gs, ds.v_gp);
}

double turn_off_delay(const MosfetDatasheet& ds, const GateDrive& drive, double v_gs) {
    const double r = total_gate_resistance(ds, drive);
    require(finite(v_gs) && v_gs > 0.0, "turn-off delay needs V_GS > 0");
    require(v_gs >= ds.v_gp, ds.name + ": turn-off delay needs V_GS >= V_gp (" +
                                 std::to_string(ds.v_gp) + " V)");
    return mosfet_eq::turn_off_delay(r, ds.c_iss_at_0v, v_gs, ds.v_gp);
}

double calibrate_k(const MosfetDatasheet& ds, double reference_current, const OperatingPoint& op) {
    if (!finite(reference_current) || reference_current <= 0.0) {
        throw CalibrationError("reference current must be > 0");
    }
    const double overdrive = op.v_gs - ds.v_th;
    double per_unit_k = 0.0;
    switch (classify_mode(ds, op)) {
        case Mode::Cutoff:
            throw CalibrationError("cannot calibrate k at a cutoff operating point");
        case Mode::Triode:
            per_unit_k = mosfet_eq::triode_current(1.0, overdrive, op.v_ds);
            break;
        case Mode::Saturation:
            per_unit_k = mosfet_eq::saturation_current(1.0, overdrive, op.v_ds, ds.lambda);
            break;
    }
    if (!(per_unit_k > 0.0)) {
        throw CalibrationError("current model vanishes at the calibration point");
    }
    return reference_current / per_unit_k;
}

std::vector<CurvePoint> power_sweep(const MosfetDatasheet& ds, double v_gs, double from, double to,
                                    double step) {
    require(finite(step) && step > 0.0, "sweep step must be > 0");
    require(finite(from) && finite(to) && to >= from, "sweep range is empty");
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<CurvePoint> curve;
    curve.reserve(count + 1);
    const auto sample = [&](double v_ds) {
        const OperatingPoint op{v_gs, v_ds};
        const double i = drain_current(ds, op);
        curve.push_back({v_ds, i, i * v_ds, classify_mode(ds, op)});
    };
    for (std::size_t i = 0; i < count; ++i) {
        sample(std::min(from + static_cast<double>(i) * step, to));
    }
    if (curve.back().v_ds < to) {
        sample(to);
    }
    return curve;
}

}  // namespace hrx
