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

#include "socialgcn/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace sgcn {
namespace {

std::vector<Id> sorted_copy(std::span<const Id> ids) {
  std::vector<Id> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool member(const std::vector<Id>& sorted, Id id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

}  // namespace

std::vector<Id> rank_items(std::span<const ScoredItem> scored) {
  std::vector<ScoredItem> order(scored.begin(), scored.end());
  std::sort(order.begin(), order.end(), [](const ScoredItem& a, const ScoredItem& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.item < b.item;
  });
  std::vector<Id> out;
  out.reserve(order.size());
  for (const ScoredItem& s : order) out.push_back(s.item);
  return out;
}

double hit_ratio_at_n(std::span<const Id> ranked, std::span<const Id> positives,
                      std::size_t n) {
  if (positives.empty()) return 0.0;
  const auto pos = sorted_copy(positives);
  const std::size_t cut = std::min(n, ranked.size());
  std::size_t hits = 0;
  for (std::size_t r = 0; r < cut; ++r) hits += member(pos, ranked[r]) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(pos.size());
}

double ndcg_at_n(std::span<const Id> ranked, std::span<const Id> positives, std::size_t n) {
  if (positives.empty() || n == 0) return 0.0;
  const auto pos = sorted_copy(positives);
  const std::size_t cut = std::min(n, ranked.size());
  double dcg = 0.0;
  for (std::size_t r = 0; r < cut; ++r) {
    if (member(pos, ranked[r])) dcg += 1.0 / std::log2(static_cast<double>(r) + 2.0);
  }
  double ideal = 0.0;
  const std::size_t ideal_hits = std::min(pos.size(), n);
  for (std::size_t r = 0; r < ideal_hits; ++r) {
    ideal += 1.0 / std::log2(static_cast<double>(r) + 2.0);
  }
  return dcg / ideal;
}

}  // namespace sgcn
