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

#include <random>

#include "gtest/gtest.h"
#include "hrx/errors.hpp"
#include "oracles.hpp"

using namespace hrx;

TEST(HadamardOrder, modes_and_cap) {
    EXPECT_EQ(HadamardOrder(0).modes(), 1u);
    EXPECT_EQ(HadamardOrder(3).modes(), 8u);
    EXPECT_EQ(HadamardOrder(20).modes(), 1u << 20);
    EXPECT_THROW(HadamardOrder(21), DomainError);
    EXPECT_NO_THROW(HadamardOrder(21, 24));
    EXPECT_THROW(HadamardOrder(5, 4), DomainError);
}

TEST(HadamardOrder, order_for_length) {
    EXPECT_EQ(order_for_length(16).value(), 4u);
    EXPECT_THROW(order_for_length(12), DomainError);
    EXPECT_THROW(order_for_length(0), DomainError);
}

TEST(BitwiseDot, examples) {
    EXPECT_EQ(bitwise_dot(0, 5, HadamardOrder(3)), 0u);
    EXPECT_EQ(bitwise_dot(3, 3, HadamardOrder(2)), 2u);
    EXPECT_EQ(bitwise_dot(5, 6, HadamardOrder(3)), 1u);
}

TEST(BitwiseDot, range_errors) {
    EXPECT_THROW(bitwise_dot(4, 0, HadamardOrder(2)), DomainError);
    EXPECT_THROW(bitwise_dot(0, 8, HadamardOrder(3)), DomainError);
}

TEST(HadamardEntry, examples) {
    const HadamardOrder n3(3);
    for (ModeIndex k = 0; k < 8; ++k) {
        EXPECT_EQ(hadamard_entry(0, k, n3), 1);
    }
    EXPECT_EQ(hadamard_entry(3, 1, HadamardOrder(2)), -1);
    EXPECT_EQ(hadamard_entry(3, 3, HadamardOrder(2)), 1);
    EXPECT_THROW(hadamard_entry(0, 4, HadamardOrder(2)), DomainError);
}

TEST(HadamardEntry, matches_definition_for_small_orders) {
    for (unsigned n = 0; n <= 6; ++n) {
        const HadamardOrder order(n);
        for (ModeIndex j = 0; j < order.modes(); ++j) {
            for (ModeIndex k = 0; k < order.modes(); ++k) {
                ASSERT_EQ(hadamard_entry(j, k, order), oracle::dense_hadamard_entry(j, k, n));
            }
        }
    }
}

TEST(EncodeCodeword, examples) {
    EXPECT_EQ(encode_codeword(0, HadamardOrder(2)), SignVector({1, 1, 1, 1}));
    EXPECT_EQ(encode_codeword(1, HadamardOrder(1)), SignVector({1, -1}));
    EXPECT_EQ(encode_codeword(3, HadamardOrder(2)), SignVector({1, -1, -1, 1}));
    EXPECT_THROW(encode_codeword(4, HadamardOrder(2)), DomainError);
}

TEST(SignVector, validates) {
    EXPECT_THROW(SignVector({1, -1, 1}), DomainError);
    EXPECT_THROW(SignVector({1, 0}), DomainError);
    EXPECT_THROW(SignVector({}), DomainError);
    EXPECT_NO_THROW(SignVector({-1}));
}

TEST(Codewords, rows_are_orthogonal) {
    for (unsigned n = 1; n <= 6; ++n) {
        const HadamardOrder order(n);
        for (ModeIndex j = 0; j < order.modes(); ++j) {
            const auto a = encode_codeword(j, order);
            for (ModeIndex jj = 0; jj < order.modes(); ++jj) {
                const auto b = encode_codeword(jj, order);
                long dot = 0;
                for (std::size_t k = 0; k < a.size(); ++k) {
                    dot += a[k] * b[k];
                }
                ASSERT_EQ(dot, j == jj ? static_cast<long>(order.modes()) : 0) << n << ' ' << j << ' ' << jj;
            }
        }
    }
}

TEST(DenseHadamard, squares_to_scaled_identity) {
    for (unsigned n = 0; n <= 8; ++n) {
        const auto h = oracle::dense_hadamard(n);
        const std::size_t size = h.size();
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
                long acc = 0;
                for (std::size_t k = 0; k < size; ++k) {
                    acc += h[i][k] * h[k][j];
                }
                ASSERT_EQ(acc, i == j ? static_cast<long>(size) : 0);
            }
        }
    }
}

TEST(FwhtReference, examples) {
    const std::vector<double> e0{1.0, 0.0};
    EXPECT_EQ(fwht_reference(e0), (std::vector<double>{1.0, 1.0}));
    const std::vector<double> ones{1, 1, 1, 1};
    EXPECT_EQ(fwht_reference(ones), (std::vector<double>{4, 0, 0, 0}));
    const std::vector<double> three(3, 1.0);
    EXPECT_THROW(fwht_reference(three), DomainError);
}

TEST(FwhtReference, equals_dense_product_exactly_for_integer_inputs) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-50, 50);
    for (unsigned n = 0; n <= 8; ++n) {
        const auto h = oracle::dense_hadamard(n);
        std::vector<double> x(h.size());
        for (auto& v : x) {
            v = dist(rng);
        }
        EXPECT_EQ(fwht_reference(x), oracle::dense_multiply(h, x)) << "n=" << n;
    }
}

TEST(FwhtReference, is_an_involution_up_to_scale) {
    std::mt19937_64 rng(12);
    std::normal_distribution<double> g;
    for (unsigned n = 0; n <= 10; ++n) {
        std::vector<double> x(std::size_t{1} << n);
        for (auto& v : x) {
            v = g(rng);
        }
        const auto twice = fwht_reference(fwht_reference(x));
        for (std::size_t k = 0; k < x.size(); ++k) {
            ASSERT_NEAR(twice[k], x.size() * x[k], 1e-9 * x.size());
        }
    }
}

TEST(FwhtReference, complex_overload_is_linear_in_parts) {
    std::mt19937_64 rng(13);
    const auto x = oracle::random_complex(rng, 32);
    std::vector<double> re(32), im(32);
    for (std::size_t k = 0; k < 32; ++k) {
        re[k] = x[k].real();
        im[k] = x[k].imag();
    }
    const auto y = fwht_reference(std::span<const std::complex<double>>(x));
    const auto yr = fwht_reference(re);
    const auto yi = fwht_reference(im);
    for (std::size_t k = 0; k < 32; ++k) {
        EXPECT_DOUBLE_EQ(y[k].real(), yr[k]);
        EXPECT_DOUBLE_EQ(y[k].imag(), yi[k]);
    }
}
