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

#include "socialgcn/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "socialgcn/errors.hpp"
#include "socialgcn/rng.hpp"

namespace sgcn {
namespace {

void check_spec(const SyntheticSpec& spec) {
  if (spec.users == 0 || spec.items == 0) {
    throw ConfigError("synthetic spec needs at least one user and one item");
  }
  if (spec.dim_user == 0 || spec.dim_item == 0) {
    throw ConfigError("synthetic feature dimensions must be positive");
  }
  if (spec.clusters == 0) throw ConfigError("synthetic spec needs at least one cluster");
  if (!(spec.density > 0.0 && spec.density < 1.0)) {
    throw ConfigError("synthetic density must lie in (0,1)");
  }
  if (!(spec.homophily >= 0.0 && spec.homophily <= 1.0)) {
    throw ConfigError("synthetic homophily must lie in [0,1]");
  }
  if (!(spec.taste_purity >= 0.0 && spec.taste_purity <= 1.0)) {
    throw ConfigError("synthetic taste purity must lie in [0,1]");
  }
}

Eigen::MatrixXd noisy_centroids(const std::vector<std::size_t>& cluster,
                                const Eigen::MatrixXd& centroids, double noise,
                                Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd out(centroids.rows(), static_cast<Eigen::Index>(cluster.size()));
  for (std::size_t e = 0; e < cluster.size(); ++e) {
    for (Eigen::Index d = 0; d < centroids.rows(); ++d) {
      out(d, static_cast<Eigen::Index>(e)) =
          centroids(d, static_cast<Eigen::Index>(cluster[e])) + noise * gauss(rng);
    }
  }
  return out;
}

Eigen::MatrixXd random_centroids(std::size_t dim, std::size_t clusters, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd c(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(clusters));
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    for (Eigen::Index d = 0; d < c.rows(); ++d) c(d, j) = gauss(rng);
  }
  return c;
}

}  // namespace

SyntheticData generate_synthetic_data(const SyntheticSpec& spec) {
  check_spec(spec);
  Rng rng = make_rng({spec.seed, kSyntheticStream});

  SyntheticData out;
  std::uniform_int_distribution<std::size_t> pick_cluster(0, spec.clusters - 1);
  out.user_cluster.resize(spec.users);
  out.item_cluster.resize(spec.items);
  for (auto& c : out.user_cluster) c = pick_cluster(rng);
  for (auto& c : out.item_cluster) c = pick_cluster(rng);

  std::vector<std::vector<Id>> users_in(spec.clusters), items_in(spec.clusters);
  for (Id a = 0; a < spec.users; ++a) users_in[out.user_cluster[a]].push_back(a);
  for (Id i = 0; i < spec.items; ++i) items_in[out.item_cluster[i]].push_back(i);

  // Interactions: per-user count ~ Binomial(items, density), at least one.
  std::binomial_distribution<std::size_t> count_dist(spec.items, spec.density);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<Id> any_item(0, static_cast<Id>(spec.items - 1));
  std::vector<Edge> ratings;
  for (Id a = 0; a < spec.users; ++a) {
    const std::size_t want = std::max<std::size_t>(1, count_dist(rng));
    const auto& own = items_in[out.user_cluster[a]];
    std::unordered_set<Id> liked;
    std::size_t attempts = 0;
    while (liked.size() < want && attempts < 50 * spec.items) {
      ++attempts;
      Id item = 0;
      if (!own.empty() && unit(rng) < spec.taste_purity) {
        std::uniform_int_distribution<std::size_t> pick(0, own.size() - 1);
        item = own[pick(rng)];
      } else {
        item = any_item(rng);
      }
      if (liked.insert(item).second) ratings.push_back({a, item});
    }
  }
  out.interactions = InteractionMatrix(spec.users, spec.items, std::move(ratings));

  // Follow edges.
  std::vector<Edge> follows;
  if (spec.users > 1) {
    std::uniform_int_distribution<Id> any_user(0, static_cast<Id>(spec.users - 1));
    for (Id a = 0; a < spec.users; ++a) {
      const auto& peers = users_in[out.user_cluster[a]];
      const std::size_t want = std::min(spec.links_per_user, spec.users - 1);
      std::unordered_set<Id> followed;
      std::size_t attempts = 0;
      while (followed.size() < want && attempts < 50 * (want + 1)) {
        ++attempts;
        Id b = 0;
        if (unit(rng) < spec.homophily) {
          if (peers.size() < 2) continue;
          std::uniform_int_distribution<std::size_t> pick(0, peers.size() - 1);
          b = peers[pick(rng)];
        } else {
          b = any_user(rng);
        }
        if (b == a) continue;
        if (followed.insert(b).second) follows.push_back({a, b});
      }
    }
  }
  out.social = SocialGraph(spec.users, std::move(follows));

  Eigen::MatrixXd user_centroids = random_centroids(spec.dim_user, spec.clusters, rng);
  Eigen::MatrixXd item_centroids = random_centroids(spec.dim_item, spec.clusters, rng);
  out.user_features =
      FeatureTable(noisy_centroids(out.user_cluster, user_centroids, spec.feature_noise, rng));
  out.item_features =
      FeatureTable(noisy_centroids(out.item_cluster, item_centroids, spec.feature_noise, rng));
  return out;
}

DatasetBundle assemble_bundle(const SyntheticData& data, const SplitConfig& split_config) {
  DatasetBundle bundle = split(data.interactions, split_config);
  bundle.social = data.social;
  bundle.user_features = data.user_features;
  bundle.item_features = data.item_features;
  bundle.validate();
  return bundle;
}

DatasetBundle generate_synthetic(const SyntheticSpec& spec, double test_fraction,
                                 double validation_fraction_of_train) {
  return assemble_bundle(generate_synthetic_data(spec),
                         SplitConfig{test_fraction, validation_fraction_of_train, spec.seed});
}

}  // namespace sgcn
