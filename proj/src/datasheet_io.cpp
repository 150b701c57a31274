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

#include "hrx/datasheet_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hrx/errors.hpp"

namespace hrx {

namespace {

constexpr double kPicofarad = 1e-12;

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

double required_number(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw ConfigError(std::string("datasheet is missing '") + key + "'");
    }
    if (!doc[key].is_number()) {
        throw ConfigError(std::string("datasheet field '") + key + "' must be a number");
    }
    return doc[key].get<double>();
}

std::optional<double> optional_number(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || doc[key].is_null()) {
        return std::nullopt;
    }
    return required_number(doc, key);
}

}  // namespace

MosfetDatasheet with_calibrated_profiles(MosfetDatasheet ds,
                                         const std::vector<SaturationReference>& references) {
    for (const auto& ref : references) {
        const double k = calibrate_k(ds, ref.current, {ref.v_gs, ref.v_gs});
        ds.k_profiles.push_back({ref.v_gs, k});
    }
    return ds;
}

MosfetDatasheet preset_sira04dp() {
    MosfetDatasheet ds;
    ds.name = "SiRA04DP";
    ds.channel = ChannelType::Nmos;
    ds.r_g = 1.0;
    ds.c_iss_at_0v = 4000 * kPicofarad;
    ds.c_iss_at_vds = 3600 * kPicofarad;
    ds.v_th = 1.7;
    ds.v_gp = 2.6;
    return with_calibrated_profiles(std::move(ds), {{3.3, 35.0}, {5.0, 235.0}});
}

MosfetDatasheet preset_sia469dj() {
    MosfetDatasheet ds;
    ds.name = "SiA469DJ";
    ds.channel = ChannelType::Pmos;
    ds.r_g = 9.0;
    ds.c_iss_at_0v = 1500 * kPicofarad;
    ds.c_iss_at_vds = 1020 * kPicofarad;
    ds.v_th = 3.0;
    ds.v_gp = 2.1;
    return with_calibrated_profiles(std::move(ds), {{3.3, 15.0}, {5.0, 90.0}});
}

std::vector<std::string> preset_names() { return {"SiRA04DP", "SiA469DJ"}; }

std::optional<MosfetDatasheet> find_preset(std::string_view name) {
    const std::string key = lower(name);
    if (key == "sira04dp" || key == "nmos") {
        return preset_sira04dp();
    }
    if (key == "sia469dj" || key == "pmos") {
        return preset_sia469dj();
    }
    return std::nullopt;
}

MosfetDatasheet parse_datasheet_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("datasheet is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("datasheet must be a JSON object");
    }

    MosfetDatasheet ds;
    if (!doc.contains("name") || !doc["name"].is_string()) {
        throw ConfigError("datasheet needs a string 'name'");
    }
    ds.name = doc["name"].get<std::string>();
    if (!doc.contains("polarity") || !doc["polarity"].is_string()) {
        throw ConfigError("datasheet needs a string 'polarity'");
    }
    const std::string polarity = lower(doc["polarity"].get<std::string>());
    if (polarity == "nmos") {
        ds.channel = ChannelType::Nmos;
    } else if (polarity == "pmos") {
        ds.channel = ChannelType::Pmos;
    } else {
        throw ConfigError("polarity must be NMOS or PMOS, got '" + polarity + "'");
    }
    ds.r_g = required_number(doc, "r_g_ohm");
    ds.c_iss_at_0v = required_number(doc, "c_iss_0v_pf") * kPicofarad;
    ds.c_iss_at_vds = required_number(doc, "c_iss_vds_pf") * kPicofarad;
    ds.v_th = required_number(doc, "v_th_v");
    ds.v_gp = required_number(doc, "v_gp_v");
    ds.k = optional_number(doc, "k_a_per_v2");
    ds.lambda = optional_number(doc, "lambda_per_v").value_or(0.0);
    ds.v_off = optional_number(doc, "v_off_v").value_or(0.0);
    if (doc.contains("k_profiles")) {
        if (!doc["k_profiles"].is_array()) {
            throw ConfigError("'k_profiles' must be an array");
        }
        for (const auto& p : doc["k_profiles"]) {
            ds.k_profiles.push_back({required_number(p, "v_gs_v"), required_number(p, "k_a_per_v2")});
        }
    }
    try {
        ds.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return ds;
}

std::string datasheet_to_json(const MosfetDatasheet& ds) {
    nlohmann::ordered_json doc;
    doc["name"] = ds.name;
    doc["polarity"] = std::string(to_string(ds.channel));
    doc["r_g_ohm"] = ds.r_g;
    doc["c_iss_0v_pf"] = ds.c_iss_at_0v / kPicofarad;
    doc["c_iss_vds_pf"] = ds.c_iss_at_vds / kPicofarad;
    doc["v_th_v"] = ds.v_th;
    doc["v_gp_v"] = ds.v_gp;
    if (ds.k) {
        doc["k_a_per_v2"] = *ds.k;
    }
    doc["lambda_per_v"] = ds.lambda;
    doc["v_off_v"] = ds.v_off;
    if (!ds.k_profiles.empty()) {
        auto profiles = nlohmann::ordered_json::array();
        for (const auto& p : ds.k_profiles) {
            profiles.push_back({{"v_gs_v", p.v_gs}, {"k_a_per_v2", p.k}});
        }
        doc["k_profiles"] = std::move(profiles);
    }
    return doc.dump(2);
}

MosfetDatasheet resolve_device(const std::string& name_or_path) {
    if (auto preset = find_preset(name_or_path)) {
        return *preset;
    }
    std::error_code ec;
    if (!std::filesystem::is_regular_file(name_or_path, ec)) {
        throw ConfigError("'" + name_or_path + "' is neither a device preset nor a datasheet file");
    }
    std::ifstream in(name_or_path);
    if (!in) {
        throw IoError("cannot open datasheet file '" + name_or_path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading datasheet file '" + name_or_path + "'");
    }
    return parse_datasheet_json(text.str());
}

}  // namespace hrx
