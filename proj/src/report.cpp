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

#include "hrx/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hrx/csv.hpp"

namespace hrx {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
T field(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw ConfigError(std::string("report is missing '") + key + "'");
    }
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError(std::string("report field '") + key + "' has the wrong type");
    }
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") {
        return ReportFormat::Json;
    }
    if (name == "text") {
        return ReportFormat::Text;
    }
    throw ConfigError("unknown report format '" + std::string(name) + "'");
}

std::string report_to_json(const ComparisonReport& r) {
    ordered_json doc;
    doc["schema_version"] = r.schema_version;
    doc["order"] = r.order;
    doc["depth"] = r.depth;
    doc["beamsplitter_count"] = r.beamsplitter_count;
    doc["transistor_count"] = r.transistor_count;
    doc["codewords_verified"] = r.codewords_verified;
    doc["optical"] = {
        {"convention", r.optical_convention},
        {"stage_delay_s", r.optical_stage_delay_s},
        {"latency_s", r.optical_latency_s},
        {"runtime_power_w", r.optical_runtime_power_w},
        {"tuning_power_excluded", r.optical_tuning_power_excluded},
    };
    auto power = ordered_json::array();
    for (const auto& s : r.electronic_power) {
        power.push_back({{"device", s.device},
                         {"mode", s.mode},
                         {"v_gs_v", s.v_gs},
                         {"v_ds_v", s.v_ds},
                         {"i_d_a", s.i_d},
                         {"p_w", s.p}});
    }
    doc["electronic"] = {
        {"v_gs_v", r.v_gs},
        {"r_gext_ohm", r.r_gext},
        {"nmos_device", r.nmos_device},
        {"pmos_device", r.pmos_device},
        {"nmos_turn_on_s", r.nmos_turn_on_s},
        {"nmos_turn_off_s", r.nmos_turn_off_s},
        {"pmos_turn_on_s", r.pmos_turn_on_s},
        {"pmos_turn_off_s", r.pmos_turn_off_s},
        {"and_delay_s", r.and_delay_s},
        {"delay_policy", r.delay_policy},
        {"latency_s", r.electronic_latency_s},
        {"power", std::move(power)},
    };
    doc["latency_ratio"] = r.latency_ratio;
    doc["link_propagation_s"] =
        r.link_propagation_s ? ordered_json(*r.link_propagation_s) : ordered_json(nullptr);
    return doc.dump(2) + "\n";
}

ComparisonReport report_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("report is not valid JSON: ") + e.what());
    }
    ComparisonReport r;
    r.schema_version = field<int>(doc, "schema_version");
    if (r.schema_version != kReportSchemaVersion) {
        throw ConfigError("unsupported report schema_version " + std::to_string(r.schema_version));
    }
    r.order = field<unsigned>(doc, "order");
    r.depth = field<unsigned>(doc, "depth");
    r.beamsplitter_count = field<std::uint64_t>(doc, "beamsplitter_count");
    r.transistor_count = field<std::uint64_t>(doc, "transistor_count");
    r.codewords_verified = field<std::uint64_t>(doc, "codewords_verified");

    const auto optical = field<nlohmann::json>(doc, "optical");
    r.optical_convention = field<std::string>(optical, "convention");
    r.optical_stage_delay_s = field<double>(optical, "stage_delay_s");
    r.optical_latency_s = field<double>(optical, "latency_s");
    r.optical_runtime_power_w = field<double>(optical, "runtime_power_w");
    r.optical_tuning_power_excluded = field<bool>(optical, "tuning_power_excluded");

    const auto electronic = field<nlohmann::json>(doc, "electronic");
    r.v_gs = field<double>(electronic, "v_gs_v");
    r.r_gext = field<double>(electronic, "r_gext_ohm");
    r.nmos_device = field<std::string>(electronic, "nmos_device");
    r.pmos_device = field<std::string>(electronic, "pmos_device");
    r.nmos_turn_on_s = field<double>(electronic, "nmos_turn_on_s");
    r.nmos_turn_off_s = field<double>(electronic, "nmos_turn_off_s");
    r.pmos_turn_on_s = field<double>(electronic, "pmos_turn_on_s");
    r.pmos_turn_off_s = field<double>(electronic, "pmos_turn_off_s");
    r.and_delay_s = field<double>(electronic, "and_delay_s");
    r.delay_policy = field<std::string>(electronic, "delay_policy");
    r.electronic_latency_s = field<double>(electronic, "latency_s");
    for (const auto& s : field<nlohmann::json>(electronic, "power")) {
        r.electronic_power.push_back({field<std::string>(s, "device"), field<std::string>(s, "mode"),
                                      field<double>(s, "v_gs_v"), field<double>(s, "v_ds_v"),
                                      field<double>(s, "i_d_a"), field<double>(s, "p_w")});
    }

    r.latency_ratio = field<double>(doc, "latency_ratio");
    if (doc.contains("link_propagation_s") && !doc["link_propagation_s"].is_null()) {
        r.link_propagation_s = field<double>(doc, "link_propagation_s");
    }
    return r;
}

std::string report_to_text(const ComparisonReport& r) {
    std::ostringstream out;
    const auto row = [&](std::string_view label, const std::string& value) {
        out << "  " << label;
        for (std::size_t pad = label.size(); pad < 30; ++pad) {
            out << ' ';
        }
        out << value << '\n';
    };
    const auto num = [](double v) { return format_number(v); };

    out << "Hadamard receiver comparison (schema " << r.schema_version << ")\n";
    row("order n", std::to_string(r.order));
    row("depth", std::to_string(r.depth));
    row("beamsplitters", std::to_string(r.beamsplitter_count));
    row("transistors", std::to_string(r.transistor_count));
    row("codewords verified", std::to_string(r.codewords_verified));
    out << "optical\n";
    row("convention", r.optical_convention);
    row("stage delay [s]", num(r.optical_stage_delay_s));
    row("latency [s]", num(r.optical_latency_s));
    row("runtime power [W]", num(r.optical_runtime_power_w));
    row("tuning power excluded", r.optical_tuning_power_excluded ? "yes" : "no");
    out << "electronic\n";
    row("V_GS [V]", num(r.v_gs));
    row("R_gext [ohm]", num(r.r_gext));
    row(r.nmos_device + " t_on / t_off [s]", num(r.nmos_turn_on_s) + " / " + num(r.nmos_turn_off_s));
    row(r.pmos_device + " t_on / t_off [s]", num(r.pmos_turn_on_s) + " / " + num(r.pmos_turn_off_s));
    row("AND delay [s]", num(r.and_delay_s) + " (" + r.delay_policy + ")");
    row("latency [s]", num(r.electronic_latency_s));
    for (const auto& s : r.electronic_power) {
        row(s.device + " " + s.mode + " power [W]",
            num(s.p) + " at V_GS=" + num(s.v_gs) + " V_DS=" + num(s.v_ds));
    }
    out << "comparison\n";
    row("latency ratio (elec/opt)", num(r.latency_ratio));
    if (r.link_propagation_s) {
        row("link propagation [s]", num(*r.link_propagation_s));
    }
    return out.str();
}

std::string render_report(const ComparisonReport& report, ReportFormat format) {
    return format == ReportFormat::Json ? report_to_json(report) : report_to_text(report);
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory '" + path.parent_path().string() +
                          "': " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

void emit_report(const ComparisonReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
    write_text_file(path, render_report(report, format));
}

}  // namespace hrx
