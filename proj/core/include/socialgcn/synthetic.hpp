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

#ifndef SOCIALGCN_SYNTHETIC_HPP_
#define SOCIALGCN_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "socialgcn/dataset.hpp"
#include "socialgcn/split.hpp"

namespace sgcn {

struct SyntheticSpec {
  std::size_t users = 200;
  std::size_t items = 150;
  std::size_t dim_user = 8;
  std::size_t dim_item = 8;
  // Probability that a follow edge stays inside the follower's cluster.
  double homophily = 0.9;
  // Expected fraction of the user x item matrix that is positive.
  double density = 0.05;
  std::uint64_t seed = 1;

  std::size_t clusters = 4;
  std::size_t links_per_user = 5;
  // Probability that a liked item is drawn from the user's own cluster.
  double taste_purity = 0.8;
  double feature_noise = 0.5;

  friend bool operator==(const SyntheticSpec&, const SyntheticSpec&) = default;
};

struct SyntheticData {
  InteractionMatrix interactions;
  SocialGraph social;
  FeatureTable user_features;
  FeatureTable item_features;
  std::vector<std::size_t> user_cluster;
  std::vector<std::size_t> item_cluster;
};

// Plants latent clusters: users and items each get a cluster, users like
// mostly same-cluster items, follow same-cluster users with probability
// `homophily` (otherwise any user), and features are noisy cluster
// centroids. Pure function of the spec. Throws ConfigError on a degenerate
// spec.
SyntheticData generate_synthetic_data(const SyntheticSpec& spec);

// generate_synthetic_data followed by split() with the same seed and the
// given fractions, with social graph and features attached.
DatasetBundle generate_synthetic(const SyntheticSpec& spec,
                                 double test_fraction = 0.10,
                                 double validation_fraction_of_train = 0.10);

// Attaches social graph and features to a split.
DatasetBundle assemble_bundle(const SyntheticData& data, const SplitConfig& split_config);

}  // namespace sgcn

#endif  // SOCIALGCN_SYNTHETIC_HPP_
