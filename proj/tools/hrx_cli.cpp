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

// Command-line front end: receiver simulation, device curves, plan dumps and
// the optical vs. electronic comparison report.
//
// Exit codes: 0 success, 1 decode failure, 2 configuration error, 3 I/O error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hrx/compare.hpp"
#include "hrx/csv.hpp"
#include "hrx/curves.hpp"
#include "hrx/datasheet_io.hpp"
#include "hrx/digital.hpp"
#include "hrx/errors.hpp"
#include "hrx/optical.hpp"
#include "hrx/report.hpp"
#include "hrx/topology.hpp"

namespace {

namespace fs = std::filesystem;

enum ExitCode : int { kOk = 0, kDecodeFailure = 1, kConfigError = 2, kIoError = 3 };

hrx::PhaseConvention parse_phi(const std::string& text) {
    if (text == "0") {
        return hrx::PhaseConvention::Zero;
    }
    if (text == "pi2") {
        return hrx::PhaseConvention::Quadrature;
    }
    throw hrx::ConfigError("--phi must be 0 or pi2, got '" + text + "'");
}

// Writes to <out>/<name> when an output directory was given, else stdout.
void deliver(const std::string& out_dir, const std::string& name, const std::string& content) {
    if (out_dir.empty()) {
        std::cout << content;
        return;
    }
    const fs::path path = fs::path(out_dir) / name;
    hrx::write_text_file(path, content);
    std::cerr << "wrote " << path.string() << '\n';
}

struct OpticalArgs {
    unsigned order = 3;
    hrx::ModeIndex codeword = 0;
    double alpha_re = 1.0;
    double alpha_im = 0.0;
    std::string phi = "0";
    bool phase_correction = false;
    std::string out;
};

int run_simulate_optical(const OpticalArgs& a) {
    const auto plan = hrx::build_butterfly(hrx::HadamardOrder(a.order));
    const auto spec = parse_phi(a.phi) == hrx::PhaseConvention::Zero
                          ? hrx::BeamsplitterSpec::hadamard()
                          : hrx::BeamsplitterSpec::quadrature();
    const auto input = hrx::encode_optical(a.codeword, plan.order(), {a.alpha_re, a.alpha_im});
    const auto trace = hrx::propagate_optical_trace(plan, input, spec, {a.phase_correction});
    std::ostringstream csv;
    hrx::write_optical_trace_csv(csv, trace);
    deliver(a.out, "optical_trace.csv", csv.str());
    const auto decision = hrx::decode_optical(trace.output());
    std::cerr << "decoded mode " << decision.index << " energy fraction "
              << hrx::format_number(decision.energy_fraction) << '\n';
    return kOk;
}

struct DigitalArgs {
    unsigned order = 3;
    hrx::ModeIndex codeword = 0;
    bool invert = false;
    std::string out;
};

int run_simulate_digital(const DigitalArgs& a) {
    const auto plan = hrx::build_butterfly(hrx::HadamardOrder(a.order));
    const auto input = hrx::encode_digital(a.codeword, plan.order(), a.invert);
    const auto trace = hrx::propagate_digital_trace(plan, input);
    std::ostringstream csv;
    hrx::write_digital_trace_csv(csv, trace);
    deliver(a.out, "digital_trace.csv", csv.str());
    const auto decision = hrx::decode_digital(trace.output());
    std::cerr << "decoded line " << decision.index << " polarity "
              << (decision.polarity == hrx::Polarity::Positive ? '+' : '-') << '\n';
    return kOk;
}

struct CurveArgs {
    std::vector<std::string> devices;
    std::vector<double> v_gs;
    double step = 0.01;
    double r_gext = 10.0;
    std::optional<double> from;
    double to = 10.0;
    double delay_step = 0.05;
    std::string out;
};

hrx::CurveConfig curve_config(const CurveArgs& a) {
    hrx::CurveConfig config;
    if (!a.devices.empty()) {
        config.devices = a.devices;
    }
    if (!a.v_gs.empty()) {
        config.power_v_gs = a.v_gs;
    }
    config.v_ds_step = a.step;
    config.drive.r_gext = a.r_gext;
    config.delay_from = a.from;
    config.delay_to = a.to;
    config.delay_step = a.delay_step;
    return config;
}

int run_power_curve(const CurveArgs& a) {
    const auto config = curve_config(a);
    if (!a.out.empty()) {
        for (const auto& f : hrx::emit_power_curves(config, a.out)) {
            std::cerr << "wrote " << f.path.string() << " (" << f.rows << " rows)\n";
        }
        return kOk;
    }
    for (const auto& name : config.devices) {
        const auto ds = hrx::resolve_device(name);
        for (const double v_gs : config.power_v_gs) {
            std::cout << "# " << ds.name << " V_GS=" << hrx::format_number(v_gs) << '\n';
            hrx::write_power_curve_csv(std::cout, hrx::power_curve(ds, v_gs, config.v_ds_step));
        }
    }
    return kOk;
}

int run_delay_curve(const CurveArgs& a) {
    const auto config = curve_config(a);
    if (!a.out.empty()) {
        for (const auto& f : hrx::emit_delay_curves(config, a.out)) {
            std::cerr << "wrote " << f.path.string() << " (" << f.rows << " rows, " << f.omitted
                      << " omitted at or below V_gp)\n";
        }
        return kOk;
    }
    for (const auto& name : config.devices) {
        const auto ds = hrx::resolve_device(name);
        const auto curve = hrx::delay_curve(ds, config.drive, config.delay_from.value_or(ds.v_gp + 0.1),
                                            config.delay_to, config.delay_step);
        std::cout << "# " << ds.name << '\n';
        hrx::write_delay_curve_csv(std::cout, curve.rows);
        if (curve.omitted > 0) {
            std::cerr << "warning: " << curve.omitted << " rows at or below V_gp omitted for "
                      << ds.name << '\n';
        }
    }
    return kOk;
}

struct CompareArgs {
    hrx::CompareConfig config;
    std::string phi = "0";
    std::optional<double> bs_length;
    std::optional<double> index;
    std::optional<double> chip_length;
    std::optional<double> stage_delay;
    std::string format = "json";
    std::string out;
};

int run_compare(CompareArgs a) {
    a.config.phase = parse_phi(a.phi);
    if (a.bs_length) a.config.geometry.bs_traversal_length_m = *a.bs_length;
    if (a.index) a.config.geometry.refractive_index = *a.index;
    a.config.geometry.full_chip_length_m = a.chip_length;
    a.config.geometry.stage_delay_s = a.stage_delay;
    const auto format = hrx::parse_report_format(a.format);
    try {
        const auto report = hrx::run_compare(a.config);
        deliver(a.out, format == hrx::ReportFormat::Json ? "report.json" : "report.txt",
                hrx::render_report(report, format));
    } catch (const hrx::VerificationFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (a.out.empty()) {
            std::cerr << e.trace_csv();
        } else {
            const fs::path path = fs::path(a.out) / ("failed_" + e.substrate() + "_codeword_" +
                                                     std::to_string(e.codeword()) + ".csv");
            hrx::write_text_file(path, e.trace_csv());
            std::cerr << "trace written to " << path.string() << '\n';
        }
        return kDecodeFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optical vs. electronic Hadamard receiver: simulation and latency/power model"};
    app.require_subcommand(1);
    int rc = kOk;

    auto* simulate = app.add_subcommand("simulate", "Propagate a codeword through one receiver");
    simulate->require_subcommand(1);

    OpticalArgs optical;
    auto* sim_opt = simulate->add_subcommand("optical", "Beamsplitter network, per-stage amplitudes as CSV");
    sim_opt->add_option("-n,--order", optical.order, "Hadamard order n")->capture_default_str();
    sim_opt->add_option("-j,--codeword", optical.codeword, "Codeword index")->capture_default_str();
    sim_opt->add_option("--alpha-re", optical.alpha_re, "Re(alpha)")->capture_default_str();
    sim_opt->add_option("--alpha-im", optical.alpha_im, "Im(alpha)")->capture_default_str();
    sim_opt->add_option("--phi", optical.phi, "Beamsplitter phase: 0 or pi2")->capture_default_str();
    sim_opt->add_flag("--phase-correction", optical.phase_correction,
                      "Add phase shifters around each beamsplitter");
    sim_opt->add_option("--out", optical.out, "Output directory (default stdout)");
    sim_opt->callback([&] { rc = run_simulate_optical(optical); });

    DigitalArgs digital;
    auto* sim_dig = simulate->add_subcommand("digital", "AND-gate network, per-stage symbols as CSV");
    sim_dig->add_option("-n,--order", digital.order, "Hadamard order n")->capture_default_str();
    sim_dig->add_option("-j,--codeword", digital.codeword, "Codeword index")->capture_default_str();
    sim_dig->add_flag("--invert", digital.invert, "Send the antipodal codeword");
    sim_dig->add_option("--out", digital.out, "Output directory (default stdout)");
    sim_dig->callback([&] { rc = run_simulate_digital(digital); });

    auto* device = app.add_subcommand("device", "MOSFET device curves");
    device->require_subcommand(1);

    CurveArgs power_args;
    auto* power = device->add_subcommand("power-curve", "Power vs. V_DS (CSV per device and V_GS)");
    power->add_option("--device", power_args.devices, "Preset name or datasheet JSON (repeatable)");
    power->add_option("--vgs", power_args.v_gs, "Gate voltage(s), default 3.3 and 5");
    power->add_option("--step", power_args.step, "V_DS step [V]")->capture_default_str();
    power->add_option("--out", power_args.out, "Output directory (default stdout)");
    power->callback([&] { rc = run_power_curve(power_args); });

    CurveArgs delay_args;
    auto* delay = device->add_subcommand("delay-curve", "Turn-on/turn-off delay vs. V_GS (CSV per device)");
    delay->add_option("--device", delay_args.devices, "Preset name or datasheet JSON (repeatable)");
    delay->add_option("--rgext", delay_args.r_gext, "External gate resistance [ohm]")->capture_default_str();
    delay->add_option("--from", delay_args.from, "Sweep start [V] (default V_gp + 0.1)");
    delay->add_option("--to", delay_args.to, "Sweep end [V]")->capture_default_str();
    delay->add_option("--step", delay_args.delay_step, "Sweep step [V]")->capture_default_str();
    delay->add_option("--out", delay_args.out, "Output directory (default stdout)");
    delay->callback([&] { rc = run_delay_curve(delay_args); });

    CompareArgs cmp;
    auto* compare = app.add_subcommand("compare", "Optical vs. electronic latency and power report");
    compare->add_option("-n,--order", cmp.config.order, "Hadamard order n")->capture_default_str();
    compare->add_option("--vgs", cmp.config.v_gs, "Gate voltage [V]")->capture_default_str();
    compare->add_option("--rgext", cmp.config.drive.r_gext, "External gate resistance [ohm]")
        ->capture_default_str();
    compare->add_option("--nmos", cmp.config.nmos, "NMOS preset or datasheet JSON")->capture_default_str();
    compare->add_option("--pmos", cmp.config.pmos, "PMOS preset or datasheet JSON")->capture_default_str();
    compare->add_option("--policy", cmp.config.policy,
                        "AND delay policy: stage-worst-case, critical-case or fixed:<seconds>")
        ->capture_default_str();
    compare->add_option("--phi", cmp.phi, "Beamsplitter phase: 0 or pi2")->capture_default_str();
    compare->add_flag("--phase-correction", cmp.config.phase_correction,
                      "Add phase shifters around each beamsplitter");
    compare->add_option("--bs-length", cmp.bs_length, "Beamsplitter traversal length [m] (default 2e-3)");
    compare->add_option("--index", cmp.index, "Refractive index (default 1)");
    compare->add_option("--chip-length", cmp.chip_length, "Whole-chip path length [m]");
    compare->add_option("--stage-delay", cmp.stage_delay, "Per-stage optical delay [s]");
    compare->add_option("--link-propagation", cmp.config.link_propagation_s,
                        "Fibre propagation time to report alongside [s]");
    compare->add_option("--format", cmp.format, "json or text")->capture_default_str();
    compare->add_option("--out", cmp.out, "Output directory (default stdout)");
    compare->callback([&] { rc = run_compare(cmp); });

    auto* plan = app.add_subcommand("plan", "Butterfly plan inspection");
    plan->require_subcommand(1);
    unsigned plan_order = 3;
    std::string plan_out;
    auto* dump = plan->add_subcommand("dump", "Stages of [lo, hi] pairs as JSON");
    dump->add_option("-n,--order", plan_order, "Hadamard order n")->capture_default_str();
    dump->add_option("--out", plan_out, "Output directory (default stdout)");
    dump->callback([&] {
        deliver(plan_out, "plan.json",
                hrx::build_butterfly(hrx::HadamardOrder(plan_order)).to_json() + "\n");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    } catch (const hrx::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const hrx::DecodeFailure& e) {
        std::cerr << "decode failure: " << e.what() << '\n';
        return kDecodeFailure;
    } catch (const hrx::NoSignalError& e) {
        std::cerr << "decode failure: " << e.what() << '\n';
        return kDecodeFailure;
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfigError;
    }
    return rc;
}
