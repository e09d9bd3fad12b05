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

#include "socialgcn/model.hpp"

#include <string>

#include "kernels.hpp"
#include "socialgcn/errors.hpp"

namespace sgcn {
namespace {

bool with_features(const HyperParams& hypers) {
  return hypers.feature_mode == FeatureMode::kWithFeatures;
}

void expect_size(Eigen::Index got, Eigen::Index want, const char* what) {
  if (got != want) {
    throw ShapeError(std::string(what) + " has size " + std::to_string(got) +
                     ", expected " + std::to_string(want));
  }
}

const Eigen::MatrixXd& feature_values(const std::optional<FeatureTable>& table,
                                      const char* what) {
  if (!table) throw ShapeError(std::string(what) + " features required in features mode");
  return table->values();
}

}  // namespace

Eigen::VectorXd item_embedding(const ModelParams& params, const HyperParams& hypers,
                               const Eigen::VectorXd& free_vector,
                               const Eigen::VectorXd* features) {
  expect_size(free_vector.size(), static_cast<Eigen::Index>(hypers.free_dim), "q_i");
  if (!with_features(hypers)) return free_vector;
  if (!features) throw ShapeError("item features missing in features mode");
  expect_size(free_vector.size() + features->size(), params.item_transform.cols(),
              "[q_i; y_i]");
  return detail::relu(
      detail::affine(params.item_transform, params.item_bias, free_vector, *features));
}

Eigen::VectorXd user_base_embedding(const ModelParams& params, const HyperParams& hypers,
                                    const Eigen::VectorXd* features,
                                    const Eigen::VectorXd& free_vector) {
  expect_size(free_vector.size(), static_cast<Eigen::Index>(hypers.free_dim), "p_a");
  if (!with_features(hypers)) return free_vector;
  if (!features) throw ShapeError("user features missing in features mode");
  expect_size(features->size() + free_vector.size(), params.base_transform.cols(),
              "[x_a; p_a]");
  return detail::relu(
      detail::affine(params.base_transform, params.base_bias, *features, free_vector));
}

Eigen::VectorXd aggregate_neighbors(const Eigen::MatrixXd& layer,
                                    std::span<const Id> neighbors, Aggregator aggregator) {
  for (Id b : neighbors) {
    if (b >= layer.cols()) throw DataError("neighbor id " + std::to_string(b) + " out of range");
  }
  return detail::aggregate(layer, neighbors, aggregator);
}

Eigen::VectorXd convolve_layer(const ModelParams& params, std::size_t k,
                               const Eigen::VectorXd& aggregated,
                               const Eigen::VectorXd& self) {
  if (k >= params.conv_weight.size()) {
    throw ShapeError("layer index " + std::to_string(k) + " beyond depth " +
                     std::to_string(params.conv_weight.size()));
  }
  const Eigen::MatrixXd& w = params.conv_weight[k];
  expect_size(aggregated.size(), w.rows(), "aggregated neighbor vector");
  expect_size(self.size(), w.rows(), "self vector");
  return detail::relu(detail::affine(w, params.conv_bias[k], aggregated, self));
}

DiffusionState diffuse(const ModelParams& params, const HyperParams& hypers,
                       const SocialGraph& social, const Eigen::MatrixXd& base) {
  expect_size(base.cols(), static_cast<Eigen::Index>(social.num_users()), "layer-0 matrix");
  DiffusionState state;
  state.layers.reserve(hypers.depth + 1);
  state.layers.push_back(base);
  for (std::size_t k = 0; k < hypers.depth; ++k) {
    const Eigen::MatrixXd& prev = state.layers.back();
    Eigen::MatrixXd next(prev.rows(), prev.cols());
    for (Id a = 0; a < social.num_users(); ++a) {
      Eigen::VectorXd agg =
          detail::aggregate(prev, social.followees_of(a), hypers.aggregator);
      next.col(a) = convolve_layer(params, k, agg, prev.col(a));
    }
    state.layers.push_back(std::move(next));
  }
  return state;
}

Eigen::VectorXd user_embedding(const DiffusionState& diffusion, Id user,
                               std::span<const Id> history,
                               const Eigen::MatrixXd& item_embeddings) {
  return detail::with_history(diffusion.top().col(user), history, item_embeddings);
}

double predict(const Eigen::VectorXd& user, const Eigen::VectorXd& item) {
  expect_size(item.size(), user.size(), "item embedding");
  return detail::dot(user, item);
}

ModelShape model_shape(const HyperParams& hypers, const DatasetBundle& bundle) {
  ModelShape shape;
  shape.users = bundle.num_users();
  shape.items = bundle.num_items();
  if (with_features(hypers)) {
    shape.user_feature_dim = feature_values(bundle.user_features, "user").rows();
    shape.item_feature_dim = feature_values(bundle.item_features, "item").rows();
  }
  return shape;
}

void check_params(const ModelParams& params, const HyperParams& hypers,
                  const ModelShape& shape) {
  if (!params.same_shapes(ModelParams::zeros(hypers, shape))) {
    throw ShapeError("parameter shapes do not match hyperparameters and data");
  }
}

Eigen::MatrixXd all_item_embeddings(const ModelParams& params, const HyperParams& hypers,
                                    const DatasetBundle& bundle) {
  if (!with_features(hypers)) return params.item_free;
  const Eigen::MatrixXd& y = feature_values(bundle.item_features, "item");
  Eigen::MatrixXd v(static_cast<Eigen::Index>(hypers.dim), params.item_free.cols());
  for (Eigen::Index i = 0; i < v.cols(); ++i) {
    v.col(i) = detail::relu(detail::affine(params.item_transform, params.item_bias,
                                           params.item_free.col(i), y.col(i)));
  }
  return v;
}

Eigen::MatrixXd all_base_embeddings(const ModelParams& params, const HyperParams& hypers,
                                    const DatasetBundle& bundle) {
  if (!with_features(hypers)) return params.user_free;
  const Eigen::MatrixXd& x = feature_values(bundle.user_features, "user");
  Eigen::MatrixXd h(static_cast<Eigen::Index>(hypers.dim), params.user_free.cols());
  for (Eigen::Index a = 0; a < h.cols(); ++a) {
    h.col(a) = detail::relu(detail::affine(params.base_transform, params.base_bias,
                                           x.col(a), params.user_free.col(a)));
  }
  return h;
}

Embeddings compute_embeddings(const ModelParams& params, const HyperParams& hypers,
                              const DatasetBundle& bundle) {
  check_params(params, hypers, model_shape(hypers, bundle));
  Embeddings out;
  out.items = all_item_embeddings(params, hypers, bundle);
  DiffusionState state =
      diffuse(params, hypers, bundle.social, all_base_embeddings(params, hypers, bundle));
  out.users.resize(out.items.rows(), static_cast<Eigen::Index>(bundle.num_users()));
  for (Id a = 0; a < bundle.num_users(); ++a) {
    out.users.col(a) = user_embedding(state, a, bundle.train.items_of(a), out.items);
  }
  return out;
}

std::vector<ScoredItem> score_candidates(const Embeddings& embeddings, Id user,
                                         std::span<const Id> candidates) {
  if (user >= embeddings.users.cols()) {
    throw DataError("unknown user id " + std::to_string(user));
  }
  std::vector<ScoredItem> out;
  out.reserve(candidates.size());
  const Eigen::VectorXd u = embeddings.users.col(user);
  for (Id i : candidates) {
    if (i >= embeddings.items.cols()) throw DataError("unknown item id " + std::to_string(i));
    out.push_back({i, detail::dot(u, embeddings.items.col(i))});
  }
  return out;
}

std::vector<ScoredItem> score_all_items(const ModelParams& params, const HyperParams& hypers,
                                        const DatasetBundle& bundle, Id user,
                                        std::span<const Id> candidates) {
  return score_candidates(compute_embeddings(params, hypers, bundle), user, candidates);
}

}  // namespace sgcn
