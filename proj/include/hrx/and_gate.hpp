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

#include <array>
#include <string>
#include <string_view>

#include "hrx/device.hpp"

namespace hrx {

/// Switching delays of the two device types at one gate drive.
struct DeviceDelays {
    double nmos_on = 0.0;
    double nmos_off = 0.0;
    double pmos_on = 0.0;
    double pmos_off = 0.0;
};

/// Which device types turn on and which turn off in one CMOS stage.
struct StageSwitching {
    bool nmos_on = false;
    bool pmos_on = false;
    bool nmos_off = false;
    bool pmos_off = false;
};

/// One input case of the AND gate, built as a NAND stage driving a NOT stage.
struct InputCase {
    std::string_view name;
    StageSwitching nand;
    StageSwitching inverter;
};

/// Both inputs low, one high and one low, both high.
const std::array<InputCase, 3>& and_gate_input_cases();

/// Slowest turn-on among the devices switching on and slowest turn-off among
/// those switching off, whichever is larger.
double stage_delay(const StageSwitching& stage, const DeviceDelays& delays) noexcept;

/// Rule combining device delays into one AND-gate delay.
///
///   stage-worst-case  worst case of each stage over the input cases, summed
///                     over the NAND and NOT stages (default)
///   critical-case     NAND + NOT delay of the single slowest input case
///   fixed:<seconds>   a given delay, device delays reported but unused
class DelayPolicy {
  public:
    enum class Kind { StageWorstCase, CriticalCase, Fixed };

    static DelayPolicy stage_worst_case() { return DelayPolicy(Kind::StageWorstCase, 0.0); }
    static DelayPolicy critical_case() { return DelayPolicy(Kind::CriticalCase, 0.0); }
    /// Throws ConfigError unless seconds > 0.
    static DelayPolicy fixed(double seconds);
    /// Accepts the names above; throws ConfigError for anything else.
    static DelayPolicy parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    double fixed_delay() const noexcept { return fixed_; }
    std::string name() const;

    double aggregate(const DeviceDelays& delays) const;

  private:
    DelayPolicy(Kind kind, double fixed) : kind_(kind), fixed_(fixed) {}
    Kind kind_;
    double fixed_;
};

struct AndGateDelay {
    DeviceDelays devices;
    double and_delay = 0.0;
    std::string policy;
};

/// Evaluates both device delays at v_gs (NoTurnOnError if either device never
/// turns on) and aggregates them with `policy`.
AndGateDelay and_gate_delay(const MosfetDatasheet& nmos, const MosfetDatasheet& pmos,
                            const GateDrive& drive, double v_gs, const DelayPolicy& policy);

}  // namespace hrx
