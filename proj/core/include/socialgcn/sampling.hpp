// Copyright 2026 The SocialGCN Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOCIALGCN_SAMPLING_HPP_
#define SOCIALGCN_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "socialgcn/dataset.hpp"

namespace sgcn {

struct PairwiseSample {
  Id user = 0;
  Id pos_item = 0;  // in R_a(train)
  Id neg_item = 0;  // not in R_a(train)

  friend bool operator==(const PairwiseSample&, const PairwiseSample&) = default;
};

struct SampledPairs {
  std::vector<PairwiseSample> pairs;
  // Users with positives whose history already covers every item.
  std::size_t saturated_users = 0;
};

// For every training positive (a, i), emits negatives_per_positive triples
// (a, i, j) with j uniform over items a has not liked in train. Output is
// grouped by user then positive; deterministic in (seed, epoch).
SampledPairs sample_pairs(const InteractionMatrix& train, std::size_t negatives_per_positive,
                          std::uint64_t seed, std::uint64_t epoch);

}  // namespace sgcn

#endif  // SOCIALGCN_SAMPLING_HPP_
