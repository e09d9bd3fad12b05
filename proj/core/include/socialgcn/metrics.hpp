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

#ifndef SOCIALGCN_METRICS_HPP_
#define SOCIALGCN_METRICS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "socialgcn/dataset.hpp"
#include "socialgcn/model.hpp"

namespace sgcn {

// Items by descending score; equal scores go to the smaller item id first.
std::vector<Id> rank_items(std::span<const ScoredItem> scored);

// |top-n of ranked ∩ positives| / |positives|. 0 when positives is empty.
double hit_ratio_at_n(std::span<const Id> ranked, std::span<const Id> positives,
                      std::size_t n);

// Binary-gain DCG@n with discount 1/log2(rank + 1), rank 1-based, divided
// by the ideal DCG of min(|positives|, n) hits. 0 when positives is empty.
double ndcg_at_n(std::span<const Id> ranked, std::span<const Id> positives, std::size_t n);

}  // namespace sgcn

#endif  // SOCIALGCN_METRICS_HPP_
