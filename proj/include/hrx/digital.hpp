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
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hrx/fwht.hpp"
#include "hrx/topology.hpp"

namespace hrx {

/// Two-bit line code for one mode. The first bit is the high bit, so Plus is
/// "01" and Minus is "10". "11" does not name a symbol.
enum class Symbol : std::uint8_t {
    Vacuum = 0b00,
    Plus = 0b01,   // |alpha>
    Minus = 0b10,  // |-alpha>
};

/// Throws std::logic_error for the pattern 11.
Symbol symbol_from_bits(bool first, bool second);
bool first_bit(Symbol s) noexcept;
bool second_bit(Symbol s) noexcept;
std::string_view to_bits(Symbol s) noexcept;

inline constexpr std::array<Symbol, 3> kAllSymbols = {Symbol::Vacuum, Symbol::Plus, Symbol::Minus};

class SymbolVector {
  public:
    /// Throws DomainError for non power-of-two length.
    explicit SymbolVector(std::vector<Symbol> symbols);

    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    Symbol operator[](std::size_t k) const { return symbols_[k]; }

    friend bool operator==(const SymbolVector&, const SymbolVector&) = default;

  private:
    std::vector<Symbol> symbols_;
};

/// Wires of one logical beamsplitter: inputs A = (A1, A2), B = (B1, B2),
/// outputs C = (C1, C2) and D = (D1, D2).
enum class Line : std::uint8_t { A1, A2, B1, B2, C1, C2, D1, D2 };

struct AndGate {
    Line out;
    Line in_a;
    Line in_b;
};

/// C1 = A1 & B1, C2 = A2 & B2, D1 = B2 & A1, D2 = B1 & A2.
struct AndNetlist {
    std::array<AndGate, 4> gates;

    static const AndNetlist& logical_beamsplitter();

    /// Number of gate inputs driven by `line`.
    std::size_t fanout(Line line) const noexcept;
};

/// Tabulated transformation: the five listed rows, and (Vacuum, Vacuum) for
/// any pairing of Vacuum with a signal.
std::pair<Symbol, Symbol> bs_truth_table(Symbol a, Symbol b) noexcept;

/// Evaluates the AND netlist on the bit encodings of a and b.
std::pair<Symbol, Symbol> logical_beamsplitter(Symbol a, Symbol b);

/// Codeword j as Plus/Minus lines; `invert` sends the antipodal word.
SymbolVector encode_digital(ModeIndex j, const HadamardOrder& order, bool invert = false);

struct DigitalTrace {
    /// Index 0 is the input, index s + 1 the lines after stage s.
    std::vector<SymbolVector> stages;
    /// Logical beamsplitters that saw Vacuum on one input and a signal on the
    /// other. Codeword inputs never produce one.
    std::size_t orphan_pairings = 0;

    const SymbolVector& output() const { return stages.back(); }
};

/// Throws DomainError when the input length differs from the plan's mode count.
SymbolVector propagate_digital(const HadamardPlan& plan, const SymbolVector& input);
DigitalTrace propagate_digital_trace(const HadamardPlan& plan, const SymbolVector& input);

enum class Polarity : std::int8_t { Positive = 1, Negative = -1 };

struct DigitalDecision {
    ModeIndex index;
    Polarity polarity;
};

/// Throws DecodeFailure unless exactly one line carries a signal.
DigitalDecision decode_digital(const SymbolVector& output);

/// depth(n) * and_delay. The four gates of a logical beamsplitter switch in
/// parallel, so each stage costs one AND delay. Throws DomainError unless
/// and_delay > 0.
double electronic_latency(const HadamardPlan& plan, double and_delay);

/// Static timing over the plan: arrival time of every mode line at the
/// receiver output when all inputs arrive at t = 0.
std::vector<double> critical_path_arrivals(const HadamardPlan& plan, double and_delay);

}  // namespace hrx
