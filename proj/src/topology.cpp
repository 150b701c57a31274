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

#include "hrx/topology.hpp"

#include <json.hpp>

#include "hrx/errors.hpp"

namespace hrx {

namespace {

void require_network_order(unsigned n) {
    if (n == 0) {
        throw DomainError("a butterfly network needs order n >= 1");
    }
    if (n >= 63) {
        throw DomainError("order " + std::to_string(n) + " is too large");
    }
}

}  // namespace

std::size_t HadamardPlan::pair_count() const noexcept {
    std::size_t total = 0;
    for (const auto& stage : stages_) {
        total += stage.size();
    }
    return total;
}

std::string HadamardPlan::to_json() const {
    nlohmann::ordered_json doc;
    doc["order"] = order_.value();
    auto stages = nlohmann::json::array();
    for (const auto& stage : stages_) {
        auto pairs = nlohmann::json::array();
        for (const auto& p : stage) {
            pairs.push_back({p.lo, p.hi});
        }
        stages.push_back(std::move(pairs));
    }
    doc["stages"] = std::move(stages);
    return doc.dump();
}

HadamardPlan build_butterfly(const HadamardOrder& order) {
    const unsigned n = order.value();
    require_network_order(n);
    const std::size_t modes = order.modes();

    std::vector<Stage> stages;
    stages.reserve(n);
    for (unsigned s = 0; s < n; ++s) {
        const ModeIndex bit = ModeIndex{1} << s;
        Stage stage;
        stage.reserve(modes / 2);
        for (ModeIndex k = 0; k < modes; ++k) {
            if ((k & bit) == 0) {
                stage.push_back({k, k | bit});
            }
        }
        stages.push_back(std::move(stage));
    }
    return HadamardPlan(order, std::move(stages));
}

std::uint64_t beamsplitter_count(unsigned n) {
    require_network_order(n);
    return std::uint64_t{n} << (n - 1);
}

unsigned depth(unsigned n) {
    require_network_order(n);
    return n;
}

}  // namespace hrx
