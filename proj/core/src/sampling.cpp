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

#include "socialgcn/sampling.hpp"

#include <algorithm>
#include <random>

#include "socialgcn/rng.hpp"

namespace sgcn {

SampledPairs sample_pairs(const InteractionMatrix& train, std::size_t negatives_per_positive,
                          std::uint64_t seed, std::uint64_t epoch) {
  SampledPairs out;
  const std::size_t n = train.num_items();
  if (n == 0 || negatives_per_positive == 0) return out;
  out.pairs.reserve(train.num_edges() * negatives_per_positive);

  Rng rng = make_rng({seed, kSamplerStream, epoch});
  std::uniform_int_distribution<Id> any_item(0, static_cast<Id>(n - 1));
  std::vector<Id> complement;

  for (Id a = 0; a < train.num_users(); ++a) {
    auto liked = train.items_of(a);
    if (liked.empty()) continue;
    if (liked.size() >= n) {
      ++out.saturated_users;
      continue;
    }
    // Rejection sampling while the complement is large; an explicit
    // complement list once the user has liked most of the catalog.
    const bool dense = liked.size() * 2 > n;
    if (dense) {
      complement.clear();
      for (Id j = 0; j < n; ++j) {
        if (!std::binary_search(liked.begin(), liked.end(), j)) complement.push_back(j);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, dense ? complement.size() - 1 : 0);
    for (Id i : liked) {
      for (std::size_t s = 0; s < negatives_per_positive; ++s) {
        Id j = 0;
        if (dense) {
          j = complement[pick(rng)];
        } else {
          do {
            j = any_item(rng);
          } while (std::binary_search(liked.begin(), liked.end(), j));
        }
        out.pairs.push_back({a, i, j});
      }
    }
  }
  return out;
}

}  // namespace sgcn
