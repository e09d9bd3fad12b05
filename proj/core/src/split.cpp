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

#include "socialgcn/split.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "socialgcn/errors.hpp"
#include "socialgcn/rng.hpp"

namespace sgcn {

DatasetBundle split(const InteractionMatrix& interactions, const SplitConfig& config) {
  auto in_open_unit = [](double f) { return f > 0.0 && f < 1.0; };
  if (!in_open_unit(config.test_fraction) ||
      !in_open_unit(config.validation_fraction_of_train)) {
    throw ConfigError("split fractions must lie strictly between 0 and 1");
  }
  if (interactions.empty()) throw DataError("cannot split an empty interaction set");

  std::vector<Edge> edges = interactions.edges();
  const auto total = edges.size();
  const auto test_count =
      static_cast<std::size_t>(std::floor(config.test_fraction * static_cast<double>(total)));
  if (test_count == 0) {
    throw DataError("test fraction " + std::to_string(config.test_fraction) + " of " +
                    std::to_string(total) + " edges leaves an empty test split");
  }
  const auto validation_count = static_cast<std::size_t>(std::floor(
      config.validation_fraction_of_train * static_cast<double>(total - test_count)));

  Rng rng = make_rng({config.seed, kSplitStream});
  std::shuffle(edges.begin(), edges.end(), rng);

  auto first = edges.begin();
  std::vector<Edge> test(first, first + static_cast<std::ptrdiff_t>(test_count));
  first += static_cast<std::ptrdiff_t>(test_count);
  std::vector<Edge> validation(first, first + static_cast<std::ptrdiff_t>(validation_count));
  first += static_cast<std::ptrdiff_t>(validation_count);
  std::vector<Edge> train(first, edges.end());

  const std::size_t m = interactions.num_users();
  const std::size_t n = interactions.num_items();
  DatasetBundle bundle;
  bundle.train = InteractionMatrix(m, n, std::move(train));
  bundle.validation = InteractionMatrix(m, n, std::move(validation));
  bundle.test = InteractionMatrix(m, n, std::move(test));
  bundle.social = SocialGraph(m, {});
  return bundle;
}

}  // namespace sgcn
