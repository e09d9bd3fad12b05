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

#include "socialgcn/preprocess.hpp"

#include <string>

#include "socialgcn/errors.hpp"

namespace sgcn {

FilterResult preprocess_filter(const InteractionMatrix& raw_interactions,
                               const SocialGraph& raw_social,
                               const FilterThresholds& thresholds) {
  const std::size_t m = raw_interactions.num_users();
  const std::size_t n = raw_interactions.num_items();
  if (raw_social.num_users() != m) {
    throw DataError("filter inputs disagree on user count (" + std::to_string(m) +
                    " vs " + std::to_string(raw_social.num_users()) + ")");
  }

  std::vector<bool> user_alive(m, true);
  std::vector<bool> item_alive(n, true);

  for (bool changed = true; changed;) {
    changed = false;
    for (Id a = 0; a < m; ++a) {
      if (!user_alive[a]) continue;
      std::size_t ratings = 0;
      for (Id i : raw_interactions.items_of(a)) ratings += item_alive[i] ? 1 : 0;
      std::size_t links = 0;
      for (Id b : raw_social.followees_of(a)) links += user_alive[b] ? 1 : 0;
      if (ratings < thresholds.min_ratings || links < thresholds.min_links) {
        user_alive[a] = false;
        changed = true;
      }
    }
    for (Id i = 0; i < n; ++i) {
      if (!item_alive[i]) continue;
      std::size_t degree = 0;
      for (Id a : raw_interactions.users_of(i)) degree += user_alive[a] ? 1 : 0;
      if (degree < thresholds.min_item_degree) {
        item_alive[i] = false;
        changed = true;
      }
    }
  }

  FilterResult out;
  out.user_map.assign(m, std::nullopt);
  out.item_map.assign(n, std::nullopt);
  Id next_user = 0, next_item = 0;
  for (Id a = 0; a < m; ++a) {
    if (user_alive[a]) out.user_map[a] = next_user++;
  }
  for (Id i = 0; i < n; ++i) {
    if (item_alive[i]) out.item_map[i] = next_item++;
  }
  if (next_user == 0 || next_item == 0) {
    throw DataError("filtering removed every " +
                    std::string(next_user == 0 ? "user" : "item"));
  }

  std::vector<Edge> ratings;
  for (const Edge& e : raw_interactions.edges()) {
    if (out.user_map[e.from] && out.item_map[e.to]) {
      ratings.push_back({*out.user_map[e.from], *out.item_map[e.to]});
    }
  }
  std::vector<Edge> follows;
  for (const Edge& e : raw_social.edges()) {
    if (out.user_map[e.from] && out.user_map[e.to]) {
      follows.push_back({*out.user_map[e.from], *out.user_map[e.to]});
    }
  }
  out.interactions = InteractionMatrix(next_user, next_item, std::move(ratings));
  out.social = SocialGraph(next_user, std::move(follows));
  return out;
}

}  // namespace sgcn
