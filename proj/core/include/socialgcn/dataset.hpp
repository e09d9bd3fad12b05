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

#ifndef SOCIALGCN_DATASET_HPP_
#define SOCIALGCN_DATASET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace sgcn {

using Id = std::uint32_t;

struct Edge {
  Id from = 0;
  Id to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sparse binary user -> item positive feedback. Both adjacency directions
// are kept sorted and encode the same edge set.
class InteractionMatrix {
 public:
  InteractionMatrix() = default;

  // Duplicate edges are collapsed. Throws DataError on out-of-range ids.
  InteractionMatrix(std::size_t num_users, std::size_t num_items,
                    std::vector<Edge> edges);

  std::size_t num_users() const { return user_offsets_.empty() ? 0 : user_offsets_.size() - 1; }
  std::size_t num_items() const { return item_offsets_.empty() ? 0 : item_offsets_.size() - 1; }
  std::size_t num_edges() const { return user_items_.size(); }
  bool empty() const { return user_items_.empty(); }

  std::span<const Id> items_of(Id user) const;
  std::span<const Id> users_of(Id item) const;
  bool contains(Id user, Id item) const;

  // Edges in (user, item) lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const InteractionMatrix&, const InteractionMatrix&) = default;

 private:
  std::vector<std::size_t> user_offsets_;
  std::vector<Id> user_items_;
  std::vector<std::size_t> item_offsets_;
  std::vector<Id> item_users_;
};

// Directed follow graph. followees_of(a) is the ego network S_a.
class SocialGraph {
 public:
  SocialGraph() = default;

  // Duplicates are collapsed; self-loops and out-of-range ids throw DataError.
  SocialGraph(std::size_t num_users, std::vector<Edge> follows);

  std::size_t num_users() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return followees_.size(); }

  std::span<const Id> followees_of(Id user) const;
  bool follows(Id follower, Id followee) const;
  std::vector<Edge> edges() const;

  friend bool operator==(const SocialGraph&, const SocialGraph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Id> followees_;
};

// Dense per-entity attributes, stored column-wise (dim x count).
class FeatureTable {
 public:
  FeatureTable() = default;
  explicit FeatureTable(Eigen::MatrixXd values);

  std::size_t dim() const { return static_cast<std::size_t>(values_.rows()); }
  std::size_t count() const { return static_cast<std::size_t>(values_.cols()); }
  const Eigen::MatrixXd& values() const { return values_; }
  Eigen::Ref<const Eigen::VectorXd> vector(Id id) const { return values_.col(id); }

  // Keeps the entities whose remap entry is set, at their new position.
  FeatureTable remapped(std::span<const std::optional<Id>> old_to_new,
                        std::size_t new_count) const;

  friend bool operator==(const FeatureTable& a, const FeatureTable& b) {
    return a.values_.rows() == b.values_.rows() &&
           a.values_.cols() == b.values_.cols() && a.values_ == b.values_;
  }

 private:
  Eigen::MatrixXd values_;
};

struct DatasetBundle {
  InteractionMatrix train;
  InteractionMatrix validation;
  InteractionMatrix test;
  SocialGraph social;
  std::optional<FeatureTable> user_features;
  std::optional<FeatureTable> item_features;

  std::size_t num_users() const { return train.num_users(); }
  std::size_t num_items() const { return train.num_items(); }

  // Checks split disjointness, shared dimensions and feature coverage.
  void validate() const;

  friend bool operator==(const DatasetBundle&, const DatasetBundle&) = default;
};

// True if (user, item) is positive in any of the three splits.
bool rated_anywhere(const DatasetBundle& bundle, Id user, Id item);

}  // namespace sgcn

#endif  // SOCIALGCN_DATASET_HPP_
