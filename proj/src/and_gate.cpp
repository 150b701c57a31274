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

#include "hrx/and_gate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hrx/csv.hpp"
#include "hrx/errors.hpp"

namespace hrx {

const std::array<InputCase, 3>& and_gate_input_cases() {
    // NAND: PMOS1 || PMOS2 pull up, NMOS1 - NMOS2 pull down. The devices not
    // switching on in a case are the ones switching off.
    static const std::array<InputCase, 3> cases{{
        {"both-low",
         {.pmos_on = true, .nmos_off = true},
         {.nmos_on = true, .pmos_off = true}},
        {"one-high",
         {.nmos_on = true, .pmos_on = true, .nmos_off = true, .pmos_off = true},
         {.nmos_on = true, .pmos_off = true}},
        {"both-high",
         {.nmos_on = true, .pmos_off = true},
         {.pmos_on = true, .nmos_off = true}},
    }};
    return cases;
}

double stage_delay(const StageSwitching& stage, const DeviceDelays& d) noexcept {
    double worst = 0.0;
    if (stage.nmos_on) worst = std::max(worst, d.nmos_on);
    if (stage.pmos_on) worst = std::max(worst, d.pmos_on);
    if (stage.nmos_off) worst = std::max(worst, d.nmos_off);
    if (stage.pmos_off) worst = std::max(worst, d.pmos_off);
    return worst;
}

DelayPolicy DelayPolicy::fixed(double seconds) {
    if (!std::isfinite(seconds) || !(seconds > 0.0)) {
        throw ConfigError("fixed AND delay must be > 0 seconds");
    }
    return DelayPolicy(Kind::Fixed, seconds);
}

DelayPolicy DelayPolicy::parse(std::string_view text) {
    if (text == "stage-worst-case") {
        return stage_worst_case();
    }
    if (text == "critical-case") {
        return critical_case();
    }
    constexpr std::string_view prefix = "fixed:";
    if (text.starts_with(prefix)) {
        const std::string_view number = text.substr(prefix.size());
        double seconds = 0.0;
        const auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), seconds);
        if (ec != std::errc() || end != number.data() + number.size()) {
            throw ConfigError("cannot parse fixed delay '" + std::string(number) + "'");
        }
        return fixed(seconds);
    }
    throw ConfigError("unknown delay policy '" + std::string(text) + "'");
}

std::string DelayPolicy::name() const {
    switch (kind_) {
        case Kind::StageWorstCase:
            return "stage-worst-case";
        case Kind::CriticalCase:
            return "critical-case";
        case Kind::Fixed:
            return "fixed:" + format_number(fixed_);
    }
    return "unknown";
}

double DelayPolicy::aggregate(const DeviceDelays& delays) const {
    const auto& cases = and_gate_input_cases();
    switch (kind_) {
        case Kind::StageWorstCase: {
            double nand = 0.0;
            double inverter = 0.0;
            for (const auto& c : cases) {
                nand = std::max(nand, stage_delay(c.nand, delays));
                inverter = std::max(inverter, stage_delay(c.inverter, delays));
            }
            return nand + inverter;
        }
        case Kind::CriticalCase: {
            double worst = 0.0;
            for (const auto& c : cases) {
                worst = std::max(worst, stage_delay(c.nand, delays) + stage_delay(c.inverter, delays));
            }
            return worst;
        }
        case Kind::Fixed:
            return fixed_;
    }
    return 0.0;
}

AndGateDelay and_gate_delay(const MosfetDatasheet& nmos, const MosfetDatasheet& pmos,
                            const GateDrive& drive, double v_gs, const DelayPolicy& policy) {
    DeviceDelays d;
    d.nmos_on = turn_on_delay(nmos, drive, v_gs);
    d.nmos_off = turn_off_delay(nmos, drive, v_gs);
    d.pmos_on = turn_on_delay(pmos, drive, v_gs);
    d.pmos_off = turn_off_delay(pmos, drive, v_gs);
    return {d, policy.aggregate(d), policy.name()};
}

}  // namespace hrx
