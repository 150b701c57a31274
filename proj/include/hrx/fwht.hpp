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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hrx {

using ModeIndex = std::uint64_t;

inline constexpr unsigned kDefaultMaxOrder = 20;

/// Order n of a Hadamard code: 2^n modes, n butterfly stages.
class HadamardOrder {
  public:
    /// Throws DomainError when n > cap.
    explicit HadamardOrder(unsigned n, unsigned cap = kDefaultMaxOrder);

    unsigned value() const noexcept { return n_; }
    std::size_t modes() const noexcept { return std::size_t{1} << n_; }

    /// Throws DomainError unless index < modes().
    void check_index(ModeIndex index) const;

    friend bool operator==(const HadamardOrder&, const HadamardOrder&) = default;

  private:
    unsigned n_;
};

/// Order whose mode count equals `length`; DomainError if it is not a power of two.
HadamardOrder order_for_length(std::size_t length, unsigned cap = kDefaultMaxOrder);

bool is_power_of_two(std::size_t length) noexcept;

/// A Hadamard codeword: 2^n entries, each +1 or -1.
class SignVector {
  public:
    /// Validates length and entries; throws DomainError.
    explicit SignVector(std::vector<int> entries);

    std::span<const int> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t k) const { return entries_[k]; }

    friend bool operator==(const SignVector&, const SignVector&) = default;

  private:
    std::vector<int> entries_;
};

/// Number of bit positions where both j and k have a 1.
unsigned bitwise_dot(ModeIndex j, ModeIndex k, const HadamardOrder& order);

/// (-1)^(j . k)
int hadamard_entry(ModeIndex j, ModeIndex k, const HadamardOrder& order);

/// Row j of H_n.
SignVector encode_codeword(ModeIndex j, const HadamardOrder& order);

/// Unnormalized H_n x by in-place butterflies. Throws DomainError unless the
/// length is a power of two.
std::vector<double> fwht_reference(std::span<const double> x);
std::vector<std::complex<double>> fwht_reference(std::span<const std::complex<double>> x);

}  // namespace hrx
