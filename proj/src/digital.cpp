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

#include "hrx/digital.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hrx/errors.hpp"
#include "hrx/units.hpp"

namespace hrx {

Symbol symbol_from_bits(bool first, bool second) {
    if (first && second) {
        throw std::logic_error("bit pattern 11 is not a symbol");
    }
    return static_cast<Symbol>((first ? 0b10 : 0) | (second ? 0b01 : 0));
}

bool first_bit(Symbol s) noexcept { return (static_cast<std::uint8_t>(s) & 0b10) != 0; }

bool second_bit(Symbol s) noexcept { return (static_cast<std::uint8_t>(s) & 0b01) != 0; }

std::string_view to_bits(Symbol s) noexcept {
    switch (s) {
        case Symbol::Vacuum:
            return "00";
        case Symbol::Plus:
            return "01";
        case Symbol::Minus:
            return "10";
    }
    return "??";
}

SymbolVector::SymbolVector(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (!is_power_of_two(symbols_.size())) {
        throw DomainError("symbol vector length " + std::to_string(symbols_.size()) +
                          " is not a power of two");
    }
}

const AndNetlist& AndNetlist::logical_beamsplitter() {
    static const AndNetlist netlist{{{
        {Line::C1, Line::A1, Line::B1},
        {Line::C2, Line::A2, Line::B2},
        {Line::D1, Line::B2, Line::A1},
        {Line::D2, Line::B1, Line::A2},
    }}};
    return netlist;
}

std::size_t AndNetlist::fanout(Line line) const noexcept {
    return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [&](const AndGate& g) {
        return g.in_a == line || g.in_b == line;
    }));
}

std::pair<Symbol, Symbol> bs_truth_table(Symbol a, Symbol b) noexcept {
    using enum Symbol;
    if (a == Plus && b == Plus) return {Plus, Vacuum};
    if (a == Plus && b == Minus) return {Vacuum, Plus};
    if (a == Minus && b == Plus) return {Vacuum, Minus};
    if (a == Minus && b == Minus) return {Minus, Vacuum};
    return {Vacuum, Vacuum};
}

std::pair<Symbol, Symbol> logical_beamsplitter(Symbol a, Symbol b) {
    std::array<bool, 8> wire{};
    const auto at = [&](Line l) -> bool& { return wire[static_cast<std::size_t>(l)]; };
    at(Line::A1) = first_bit(a);
    at(Line::A2) = second_bit(a);
    at(Line::B1) = first_bit(b);
    at(Line::B2) = second_bit(b);
    for (const auto& g : AndNetlist::logical_beamsplitter().gates) {
        at(g.out) = at(g.in_a) && at(g.in_b);
    }
    return {symbol_from_bits(at(Line::C1), at(Line::C2)),
            symbol_from_bits(at(Line::D1), at(Line::D2))};
}

SymbolVector encode_digital(ModeIndex j, const HadamardOrder& order, bool invert) {
    const SignVector row = encode_codeword(j, order);
    const Symbol pos = invert ? Symbol::Minus : Symbol::Plus;
    const Symbol neg = invert ? Symbol::Plus : Symbol::Minus;
    std::vector<Symbol> symbols(row.size());
    for (std::size_t k = 0; k < symbols.size(); ++k) {
        symbols[k] = row[k] > 0 ? pos : neg;
    }
    return SymbolVector(std::move(symbols));
}

namespace {

void require_matching(const HadamardPlan& plan, const SymbolVector& input) {
    if (input.size() != plan.modes()) {
        throw DomainError("symbol vector has " + std::to_string(input.size()) +
                          " lines but the plan expects " + std::to_string(plan.modes()));
    }
}

std::size_t apply_stage(const Stage& stage, std::vector<Symbol>& lines) {
    std::size_t orphans = 0;
    for (const auto& [lo, hi] : stage) {
        const Symbol a = lines[lo];
        const Symbol b = lines[hi];
        if ((a == Symbol::Vacuum) != (b == Symbol::Vacuum)) {
            ++orphans;
        }
        std::tie(lines[lo], lines[hi]) = logical_beamsplitter(a, b);
    }
    return orphans;
}

}  // namespace

SymbolVector propagate_digital(const HadamardPlan& plan, const SymbolVector& input) {
    require_matching(plan, input);
    std::vector<Symbol> lines(input.symbols().begin(), input.symbols().end());
    for (const auto& stage : plan.stages()) {
        apply_stage(stage, lines);
    }
    return SymbolVector(std::move(lines));
}

DigitalTrace propagate_digital_trace(const HadamardPlan& plan, const SymbolVector& input) {
    require_matching(plan, input);
    DigitalTrace trace;
    trace.stages.reserve(plan.stages().size() + 1);
    trace.stages.push_back(input);
    std::vector<Symbol> lines(input.symbols().begin(), input.symbols().end());
    for (const auto& stage : plan.stages()) {
        trace.orphan_pairings += apply_stage(stage, lines);
        trace.stages.emplace_back(lines);
    }
    return trace;
}

DigitalDecision decode_digital(const SymbolVector& output) {
    std::size_t found = 0;
    DigitalDecision decision{0, Polarity::Positive};
    for (std::size_t k = 0; k < output.size(); ++k) {
        if (output[k] == Symbol::Vacuum) {
            continue;
        }
        if (++found > 1) {
            throw DecodeFailure("more than one line carries a signal (lines " +
                                std::to_string(decision.index) + " and " + std::to_string(k) +
                                ")");
        }
        decision = {k, output[k] == Symbol::Plus ? Polarity::Positive : Polarity::Negative};
    }
    if (found == 0) {
        throw DecodeFailure("no line carries a signal");
    }
    return decision;
}

namespace {

void require_positive_delay(double and_delay) {
    if (!std::isfinite(and_delay) || !(and_delay > 0.0)) {
        throw DomainError("AND-gate delay must be > 0");
    }
}

}  // namespace

double electronic_latency(const HadamardPlan& plan, double and_delay) {
    require_positive_delay(and_delay);
    return scale_by_depth(depth(plan.order().value()), and_delay);
}

std::vector<double> critical_path_arrivals(const HadamardPlan& plan, double and_delay) {
    require_positive_delay(and_delay);
    std::vector<double> arrival(plan.modes(), 0.0);
    for (const auto& stage : plan.stages()) {
        for (const auto& [lo, hi] : stage) {
            // every output gate reads one line from each input symbol
            const double t = std::max(arrival[lo], arrival[hi]) + and_delay;
            arrival[lo] = t;
            arrival[hi] = t;
        }
    }
    return arrival;
}

}  // namespace hrx
