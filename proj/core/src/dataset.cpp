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

#include "socialgcn/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "socialgcn/errors.hpp"

namespace sgcn {

const char* category_name(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::kConfig: return "config";
    case ErrorCategory::kData: return "data";
    case ErrorCategory::kNumeric: return "numeric";
    case ErrorCategory::kCheckpoint: return "checkpoint";
    case ErrorCategory::kShape: return "shape";
  }
  return "unknown";
}

namespace {

// Builds a CSR adjacency from edges already sorted by (from, to).
void build_csr(std::size_t rows, const std::vector<Edge>& sorted,
               std::vector<std::size_t>& offsets, std::vector<Id>& targets) {
  offsets.assign(rows + 1, 0);
  targets.clear();
  targets.reserve(sorted.size());
  for (const Edge& e : sorted) {
    ++offsets[e.from + 1];
    targets.push_back(e.to);
  }
  for (std::size_t r = 0; r < rows; ++r) offsets[r + 1] += offsets[r];
}

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

InteractionMatrix::InteractionMatrix(std::size_t num_users,
                                     std::size_t num_items,
                                     std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.from >= num_users || e.to >= num_items) {
      throw DataError("interaction (" + std::to_string(e.from) + "," +
                      std::to_string(e.to) + ") outside " +
                      std::to_string(num_users) + "x" +
                      std::to_string(num_items));
    }
  }
  sort_unique(edges);
  build_csr(num_users, edges, user_offsets_, user_items_);

  std::vector<Edge> transposed;
  transposed.reserve(edges.size());
  for (const Edge& e : edges) transposed.push_back({e.to, e.from});
  std::sort(transposed.begin(), transposed.end());
  build_csr(num_items, transposed, item_offsets_, item_users_);
}

std::span<const Id> InteractionMatrix::items_of(Id user) const {
  return {user_items_.data() + user_offsets_[user],
          user_offsets_[user + 1] - user_offsets_[user]};
}

std::span<const Id> InteractionMatrix::users_of(Id item) const {
  return {item_users_.data() + item_offsets_[item],
          item_offsets_[item + 1] - item_offsets_[item]};
}

bool InteractionMatrix::contains(Id user, Id item) const {
  if (user >= num_users()) return false;
  auto items = items_of(user);
  return std::binary_search(items.begin(), items.end(), item);
}

std::vector<Edge> InteractionMatrix::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Id a = 0; a < num_users(); ++a) {
    for (Id i : items_of(a)) out.push_back({a, i});
  }
  return out;
}

SocialGraph::SocialGraph(std::size_t num_users, std::vector<Edge> follows) {
  for (const Edge& e : follows) {
    if (e.from >= num_users || e.to >= num_users) {
      throw DataError("social edge (" + std::to_string(e.from) + "," +
                      std::to_string(e.to) + ") outside " +
                      std::to_string(num_users) + " users");
    }
    if (e.from == e.to) {
      throw DataError("self-loop on user " + std::to_string(e.from));
    }
  }
  sort_unique(follows);
  build_csr(num_users, follows, offsets_, followees_);
}

std::span<const Id> SocialGraph::followees_of(Id user) const {
  return {followees_.data() + offsets_[user],
          offsets_[user + 1] - offsets_[user]};
}

bool SocialGraph::follows(Id follower, Id followee) const {
  auto s = followees_of(follower);
  return std::binary_search(s.begin(), s.end(), followee);
}

std::vector<Edge> SocialGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Id a = 0; a < num_users(); ++a) {
    for (Id b : followees_of(a)) out.push_back({a, b});
  }
  return out;
}

FeatureTable::FeatureTable(Eigen::MatrixXd values) : values_(std::move(values)) {
  if (!values_.allFinite()) throw DataError("feature table has non-finite values");
}

FeatureTable FeatureTable::remapped(std::span<const std::optional<Id>> old_to_new,
                                    std::size_t new_count) const {
  Eigen::MatrixXd out(values_.rows(), static_cast<Eigen::Index>(new_count));
  for (std::size_t old = 0; old < old_to_new.size() && old < count(); ++old) {
    if (old_to_new[old]) out.col(*old_to_new[old]) = values_.col(old);
  }
  return FeatureTable(std::move(out));
}

void DatasetBundle::validate() const {
  const std::size_t m = train.num_users();
  const std::size_t n = train.num_items();
  if (validation.num_users() != m || test.num_users() != m ||
      validation.num_items() != n || test.num_items() != n) {
    throw DataError("train/validation/test dimensions disagree");
  }
  if (social.num_users() != m) {
    throw DataError("social graph has " + std::to_string(social.num_users()) +
                    " users, interactions have " + std::to_string(m));
  }
  for (Id a = 0; a < m; ++a) {
    for (Id i : validation.items_of(a)) {
      if (train.contains(a, i) || test.contains(a, i)) {
        throw DataError("validation edge overlaps another split");
      }
    }
    for (Id i : test.items_of(a)) {
      if (train.contains(a, i)) throw DataError("test edge overlaps train");
    }
  }
  if (user_features && user_features->count() != m) {
    throw DataError("user feature count does not match user count");
  }
  if (item_features && item_features->count() != n) {
    throw DataError("item feature count does not match item count");
  }
}

bool rated_anywhere(const DatasetBundle& bundle, Id user, Id item) {
  return bundle.train.contains(user, item) ||
         bundle.validation.contains(user, item) ||
         bundle.test.contains(user, item);
}

}  // namespace sgcn
