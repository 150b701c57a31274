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

// One line per acceptance criterion; exit status is the number of failures.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hrx/and_gate.hpp"
#include "hrx/compare.hpp"
#include "hrx/csv.hpp"
#include "hrx/datasheet_io.hpp"
#include "hrx/device.hpp"
#include "hrx/digital.hpp"
#include "hrx/fwht.hpp"
#include "hrx/optical.hpp"
#include "hrx/report.hpp"
#include "hrx/topology.hpp"
#include "oracles.hpp"

using namespace hrx;

namespace {

struct Check {
    std::string failure;

    void expect(bool ok, const std::string& what) {
        if (!ok && failure.empty()) {
            failure = what;
        }
    }
    bool failed() const { return !failure.empty(); }
};

std::string num(double v) { return format_number(v); }

Check ac1_optical_decode() {
    Check c;
    const CoherentAmplitude alpha{0.6, -0.8};
    for (unsigned n = 1; n <= 10 && !c.failed(); ++n) {
        const auto plan = build_butterfly(HadamardOrder(n));
        const double peak = std::pow(2.0, n / 2.0) * std::abs(alpha);
        for (ModeIndex j = 0; j < plan.modes(); ++j) {
            const auto out = propagate_optical(plan, encode_optical(j, plan.order(), alpha),
                                               BeamsplitterSpec::hadamard());
            const auto d = decode_optical(out);
            const double rel = std::abs(std::abs(out[j]) - peak) / peak;
            c.expect(d.index == j && d.energy_fraction >= 1.0 - 1e-9 && rel <= 1e-9,
                     "n=" + std::to_string(n) + " j=" + std::to_string(j));
            if (c.failed()) break;
        }
    }
    return c;
}

Check ac2_digital_decode() {
    Check c;
    for (Symbol a : kAllSymbols) {
        for (Symbol b : kAllSymbols) {
            c.expect(logical_beamsplitter(a, b) == bs_truth_table(a, b),
                     "netlist differs on " + std::string(to_bits(a)) + "," + std::string(to_bits(b)));
        }
    }
    for (unsigned n = 1; n <= 10 && !c.failed(); ++n) {
        const auto plan = build_butterfly(HadamardOrder(n));
        for (ModeIndex j = 0; j < plan.modes() && !c.failed(); ++j) {
            for (bool invert : {false, true}) {
                const auto out = propagate_digital(plan, encode_digital(j, plan.order(), invert));
                std::size_t live = 0;
                for (Symbol s : out.symbols()) {
                    live += s != Symbol::Vacuum;
                }
                const Symbol want = invert ? Symbol::Minus : Symbol::Plus;
                c.expect(live == 1 && out[j] == want,
                         "n=" + std::to_string(n) + " j=" + std::to_string(j) + (invert ? " inverted" : ""));
            }
        }
    }
    return c;
}

Check ac3_cross_model() {
    Check c;
    for (unsigned n = 1; n <= 10 && !c.failed(); ++n) {
        const auto plan = build_butterfly(HadamardOrder(n));
        for (ModeIndex j = 0; j < plan.modes(); ++j) {
            const auto o = decode_optical(
                propagate_optical(plan, encode_optical(j, plan.order(), 1.0), BeamsplitterSpec::hadamard()));
            const auto d = decode_digital(propagate_digital(plan, encode_digital(j, plan.order())));
            c.expect(o.index == d.index, "n=" + std::to_string(n) + " j=" + std::to_string(j));
            if (c.failed()) break;
        }
    }
    return c;
}

Check ac4_oracle() {
    Check c;
    std::mt19937_64 rng(2026);
    for (unsigned n = 1; n <= 8 && !c.failed(); ++n) {
        const auto plan = build_butterfly(HadamardOrder(n));
        const auto dense = oracle::dense_hadamard(n);
        const double norm = std::pow(2.0, n / 2.0);
        for (int trial = 0; trial < 100 && !c.failed(); ++trial) {
            const auto x = oracle::random_complex(rng, plan.modes());
            const auto fast = fwht_reference(std::span<const std::complex<double>>(x));
            const auto slow = oracle::dense_multiply(dense, x);
            const auto out = propagate_optical(plan, ModeVector(x), BeamsplitterSpec::hadamard());
            for (std::size_t k = 0; k < x.size(); ++k) {
                c.expect(std::abs(fast[k] - slow[k]) <= 1e-9 * std::max(1.0, std::abs(slow[k])),
                         "fwht vs dense, n=" + std::to_string(n));
                c.expect(std::abs(std::abs(out[k]) - std::abs(fast[k]) / norm) <=
                             1e-9 * std::max(1.0, std::abs(fast[k]) / norm),
                         "optical vs fwht, n=" + std::to_string(n));
            }
        }
    }
    return c;
}

Check ac5_topology() {
    Check c;
    for (unsigned n = 1; n <= 12; ++n) {
        const auto plan = build_butterfly(HadamardOrder(n));
        const std::uint64_t expected = n * (std::uint64_t{1} << (n - 1));
        c.expect(beamsplitter_count(n) == expected && plan.pair_count() == expected &&
                     plan.stages().size() == n,
                 "n=" + std::to_string(n));
    }
    c.expect(beamsplitter_count(3) == 12, "n=3 gives " + std::to_string(beamsplitter_count(3)));
    return c;
}

Check ac6_delay_regression() {
    Check c;
    const GateDrive drive{10.0};
    const auto within = [](double v, double target) { return std::abs(v - target) <= 0.2 * target; };
    const auto n = preset_sira04dp();
    const auto p = preset_sia469dj();
    const double n_on = turn_on_delay(n, drive, 5.0);
    const double n_off = turn_off_delay(n, drive, 5.0);
    const double p_on = turn_on_delay(p, drive, 5.0);
    const double p_off = turn_off_delay(p, drive, 5.0);
    c.expect(within(n_on, 30e-9), "NMOS t_on " + num(n_on));
    c.expect(within(n_off, 30e-9), "NMOS t_off " + num(n_off));
    c.expect(within(p_on, 10e-9), "PMOS t_on " + num(p_on));
    c.expect(within(p_off, 25e-9), "PMOS t_off " + num(p_off));
    return c;
}

Check ac7_device_properties() {
    Check c;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto device = [&](double k, double v_th) {
        MosfetDatasheet ds;
        ds.name = "random";
        ds.r_g = 5.0 * u(rng);
        ds.c_iss_at_0v = 1e-10 + 5e-9 * u(rng);
        ds.c_iss_at_vds = 1e-10 + 5e-9 * u(rng);
        ds.v_th = v_th;
        ds.v_gp = 0.5 + 3.0 * u(rng);
        ds.k = k;
        return ds;
    };
    for (int i = 0; i < 1000; ++i) {
        const auto ds = device(0.1 + 100.0 * u(rng), 0.3 + 3.0 * u(rng));
        const double v_gs = ds.v_th + 0.05 + 5.0 * u(rng);
        const double ov = v_gs - ds.v_th;
        const double tri = mosfet_eq::triode_current(*ds.k, ov, ov);
        const double sat = i_d_saturation(ds, {v_gs, ov});
        c.expect(std::abs(tri - sat) <= 1e-12 * std::abs(sat), "continuity draw " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
        const auto ds = device(0.1 + 50.0 * u(rng), 0.3 + 3.0 * u(rng));
        const double ov = 0.1 + 4.0 * u(rng);
        const double v_ds = ov * u(rng);
        const double v_off = v_ds * u(rng);
        const double v_gs = ds.v_th + ov;
        const double quad = oracle::integrate(
            [&](double v) { return mosfet_eq::triode_current(*ds.k, ov, v); }, v_off, v_ds);
        const double closed = dissipation_integral(ds, v_gs, v_ds, v_off);
        c.expect(std::abs(closed - quad) <= 1e-9 * std::max(1.0, std::abs(quad)),
                 "dissipation draw " + std::to_string(i));
    }
    for (int i = 0; i < 200; ++i) {
        const auto ds = device(1.0, 1.0);
        const double v1 = ds.v_gp + 0.01 + 8.0 * u(rng);
        const double v2 = v1 + 0.01 + 2.0 * u(rng);
        const GateDrive drive{20.0 * u(rng)};
        c.expect(turn_on_delay(ds, drive, v2) < turn_on_delay(ds, drive, v1) &&
                     turn_off_delay(ds, drive, v2) > turn_off_delay(ds, drive, v1),
                 "delay monotonicity draw " + std::to_string(i));
        const double scale = 0.5 + 4.0 * u(rng);
        const GateDrive scaled{(ds.r_g + drive.r_gext) * scale - ds.r_g};
        if (scaled.r_gext >= 0.0) {
            const double on_ratio = turn_on_delay(ds, scaled, v1) / turn_on_delay(ds, drive, v1);
            const double off_ratio = turn_off_delay(ds, scaled, v1) / turn_off_delay(ds, drive, v1);
            c.expect(std::abs(on_ratio - scale) <= 1e-9 * scale && std::abs(off_ratio - scale) <= 1e-9 * scale,
                     "resistance scaling draw " + std::to_string(i));
        }
    }
    // 3.3 V presets: formula fidelity only
    for (const auto& ds : {preset_sira04dp(), preset_sia469dj()}) {
        const double r = ds.r_g + 10.0;
        const double on = r * ds.c_iss_at_vds * std::log(3.3 / (3.3 - ds.v_gp));
        const double off = r * ds.c_iss_at_0v * std::log(3.3 / ds.v_gp);
        c.expect(std::abs(turn_on_delay(ds, {10.0}, 3.3) - on) <= 1e-12 * on &&
                     std::abs(turn_off_delay(ds, {10.0}, 3.3) - off) <= 1e-12 * off,
                 ds.name + " at 3.3 V");
    }
    return c;
}

Check ac8_headline() {
    Check c;
    for (unsigned n : {1U, 10U, 16U}) {
        CompareConfig config;
        config.order = n;
        config.policy = "fixed:80e-9";
        config.geometry.stage_delay_s = 10e-12;
        const auto r = run_compare(config);
        const std::string tag = "n=" + std::to_string(n) + ": ";
        c.expect(std::abs(r.electronic_latency_s - 80e-9 * n) <= 1e-12 * 80e-9 * n,
                 tag + "electronic " + num(r.electronic_latency_s));
        c.expect(std::abs(r.optical_latency_s - 10e-12 * n) <= 1e-12 * 10e-12 * n,
                 tag + "optical " + num(r.optical_latency_s));
        c.expect(r.latency_ratio == 8000.0, tag + "ratio " + num(r.latency_ratio));
        c.expect(r.optical_runtime_power_w == 0.0, tag + "optical power " + num(r.optical_runtime_power_w));
    }
    for (double v_gs : {3.3, 5.0}) {
        CompareConfig config;
        config.order = 4;
        config.v_gs = v_gs;
        c.expect(run_compare(config).optical_runtime_power_w == 0.0, "optical power at " + num(v_gs));
    }
    return c;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Check ac9_determinism() {
    Check c;
    const auto dir = std::filesystem::temp_directory_path() / "hrx_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (const std::string format : {"json", "text"}) {
        std::vector<std::string> outputs;
        for (int run = 0; run < 2; ++run) {
            const auto out = dir / (format + std::to_string(run));
            const std::string cmd = std::string("\"") + HRX_CLI_PATH + "\" compare -n 10 --format " + format +
                                    " --link-propagation 1e-6 >\"" + out.string() + "\"";
            const int status = std::system(cmd.c_str());
            c.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, format + " run exited with " +
                                                                        std::to_string(status));
            outputs.push_back(slurp(out));
        }
        c.expect(!outputs[0].empty() && outputs[0] == outputs[1], format + " outputs differ");
    }
    CompareConfig config;
    config.order = 16;
    c.expect(report_to_json(run_compare(config)) == report_to_json(run_compare(config)),
             "sampled n=16 reports differ");
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1", "optical decode correctness, n=1..10, every codeword", ac1_optical_decode},
        {"AC2", "digital decode correctness and netlist equivalence", ac2_digital_decode},
        {"AC3", "optical and digital decoded indices agree, n<=10", ac3_cross_model},
        {"AC4", "optical magnitudes and fwht match dense oracle, n<=8", ac4_oracle},
        {"AC5", "beamsplitter counts match plan, n<=12", ac5_topology},
        {"AC6", "5 V switching delays within 20% of 30/30/10/25 ns", ac6_delay_regression},
        {"AC7", "device model continuity, dissipation, delay properties", ac7_device_properties},
        {"AC8", "fixed 80 ns / 10 ps comparison gives ratio 8000", ac8_headline},
        {"AC9", "compare output is byte-identical across runs", ac9_determinism},
    };
    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.failure = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s %s (%.2fs)%s%s\n", result.failed() ? "FAIL" : "PASS", criterion.id,
                    criterion.title, secs, result.failed() ? ": " : "", result.failure.c_str());
        failures += result.failed();
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
