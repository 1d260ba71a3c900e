// Copyright 2026 The orliczkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

#include <json.hpp>

#include "orliczkit/boyd.hpp"
#include "orliczkit/harness.hpp"
#include "orliczkit/raster.hpp"
#include "orliczkit/sobolev_targets.hpp"

namespace orliczkit {

using Json = nlohmann::ordered_json;

Json to_json(const YoungFunction& a);
Json to_json(const ImproperIntegral& r);
Json to_json(const GateReport& r);
Json to_json(const RatioDecayReport& r);
Json to_json(const HEstimate& r);
/// `table` holds [t, h(t)] pairs; `verdicts` answers I_A < x for each threshold.
Json to_json(const BoydEstimate& r, const std::vector<double>& thresholds = {});
Json to_json(const GrowthConditionResult& r);
Json to_json(const DensityReport& r, int n);
Json to_json(const HarnessSetup& s);
Json to_json(const NecessityReport& r);

/// One row per chain step, prefixed with the verdict's position in the batch.
void write_chain_csv(std::ostream& os, const std::vector<NecessityReport>& reports);

/// Two-space indented JSON followed by a newline.
void write_json(std::ostream& os, const Json& j);

}  // namespace orliczkit
