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

#ifndef SOCIALGCN_PREPROCESS_HPP_
#define SOCIALGCN_PREPROCESS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "socialgcn/dataset.hpp"

namespace sgcn {

struct FilterThresholds {
  std::size_t min_ratings = 2;
  // Counted on the user's followees (the size of S_a among surviving users).
  std::size_t min_links = 2;
  std::size_t min_item_degree = 2;

  friend bool operator==(const FilterThresholds&, const FilterThresholds&) = default;
};

struct FilterResult {
  InteractionMatrix interactions;
  SocialGraph social;
  // old id -> new id, nullopt when the entity was dropped.
  std::vector<std::optional<Id>> user_map;
  std::vector<std::optional<Id>> item_map;
};

// Drops users and items below the thresholds, repeating until no further
// removals happen, then compacts the surviving ids in ascending old order.
// Throws DataError if nothing survives.
FilterResult preprocess_filter(const InteractionMatrix& raw_interactions,
                               const SocialGraph& raw_social,
                               const FilterThresholds& thresholds = {});

}  // namespace sgcn

#endif  // SOCIALGCN_PREPROCESS_HPP_
