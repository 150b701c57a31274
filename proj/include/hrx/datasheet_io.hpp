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

#include "hrx/device.hpp"

namespace hrx {

/// Drain current a device is known to reach in saturation at one gate voltage.
struct SaturationReference {
    double v_gs;
    double current;
};

/// Fits one k profile per reference at V_DS = V_GS (saturation for every
/// bundled device). Returns a copy of `ds` with those profiles attached.
MosfetDatasheet with_calibrated_profiles(MosfetDatasheet ds,
                                         const std::vector<SaturationReference>& references);

/// NMOS SiRA04DP, k fitted to 35 A at 3.3 V and 235 A at 5 V.
MosfetDatasheet preset_sira04dp();

/// PMOS SiA469DJ (magnitudes), k fitted to 15 A at 3.3 V and 90 A at 5 V.
MosfetDatasheet preset_sia469dj();

std::vector<std::string> preset_names();

/// Matches a preset name, or the aliases "nmos" / "pmos".
std::optional<MosfetDatasheet> find_preset(std::string_view name);

/// Reads the datasheet JSON object:
///   name, polarity ("NMOS" | "PMOS"), r_g_ohm, c_iss_0v_pf, c_iss_vds_pf,
///   v_th_v, v_gp_v, k_a_per_v2 (optional), lambda_per_v (optional, 0),
///   v_off_v (optional, 0), k_profiles (optional, [{v_gs_v, k_a_per_v2}]).
/// Throws ConfigError on malformed or out-of-range content.
MosfetDatasheet parse_datasheet_json(std::string_view text);

std::string datasheet_to_json(const MosfetDatasheet& ds);

/// Preset name, else path to a datasheet JSON file. Throws IoError when the
/// file cannot be read and ConfigError when it is neither.
MosfetDatasheet resolve_device(const std::string& name_or_path);

}  // namespace hrx
