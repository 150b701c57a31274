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

#include "hrx/fwht.hpp"

#include <bit>
#include <string>

#include "hrx/errors.hpp"

namespace hrx {

HadamardOrder::HadamardOrder(unsigned n, unsigned cap) : n_(n) {
    if (cap >= 63) {
        throw DomainError("order cap must be below 63, got " + std::to_string(cap));
    }
    if (n > cap) {
        throw DomainError("order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
}

void HadamardOrder::check_index(ModeIndex index) const {
    if (index >= modes()) {
        throw DomainError("mode index " + std::to_string(index) + " out of range for order " +
                          std::to_string(n_) + " (" + std::to_string(modes()) + " modes)");
    }
}

bool is_power_of_two(std::size_t length) noexcept { return std::has_single_bit(length); }

HadamardOrder order_for_length(std::size_t length, unsigned cap) {
    if (!is_power_of_two(length)) {
        throw DomainError("length " + std::to_string(length) + " is not a power of two");
    }
    return HadamardOrder(static_cast<unsigned>(std::countr_zero(length)), cap);
}

SignVector::SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (!is_power_of_two(entries_.size())) {
        throw DomainError("sign vector length " + std::to_string(entries_.size()) +
                          " is not a power of two");
    }
    for (int e : entries_) {
        if (e != 1 && e != -1) {
            throw DomainError("sign vector entry " + std::to_string(e) + " is not +1 or -1");
        }
    }
}

unsigned bitwise_dot(ModeIndex j, ModeIndex k, const HadamardOrder& order) {
    order.check_index(j);
    order.check_index(k);
    return static_cast<unsigned>(std::popcount(j & k));
}

int hadamard_entry(ModeIndex j, ModeIndex k, const HadamardOrder& order) {
    return (bitwise_dot(j, k, order) & 1U) ? -1 : 1;
}

SignVector encode_codeword(ModeIndex j, const HadamardOrder& order) {
    order.check_index(j);
    std::vector<int> row(order.modes());
    for (ModeIndex k = 0; k < row.size(); ++k) {
        row[k] = hadamard_entry(j, k, order);
    }
    return SignVector(std::move(row));
}

namespace {

template <typename T>
std::vector<T> butterfly(std::span<const T> x) {
    if (!is_power_of_two(x.size())) {
        throw DomainError("fwht input length " + std::to_string(x.size()) +
                          " is not a power of two");
    }
    std::vector<T> out(x.begin(), x.end());
    const std::size_t len = out.size();
    for (std::size_t h = 1; h < len; h *= 2) {
        for (std::size_t i = 0; i < len; i += h * 2) {
            for (std::size_t j = i; j < i + h; ++j) {
                T a = out[j];
                T b = out[j + h];
                out[j] = a + b;
                out[j + h] = a - b;
            }
        }
    }
    return out;
}

}  // namespace

std::vector<double> fwht_reference(std::span<const double> x) { return butterfly(x); }

std::vector<std::complex<double>> fwht_reference(std::span<const std::complex<double>> x) {
    return butterfly(x);
}

}  // namespace hrx
