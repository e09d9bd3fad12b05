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

#ifndef SOCIALGCN_MODEL_HPP_
#define SOCIALGCN_MODEL_HPP_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "socialgcn/dataset.hpp"
#include "socialgcn/params.hpp"

namespace sgcn {

// Vectors passed by reference are columns; "absent" features are nullptr.

// With features: ReLU(F [q; y] + b_F). Featureless: q, untouched.
Eigen::VectorXd item_embedding(const ModelParams& params, const HyperParams& hypers,
                               const Eigen::VectorXd& free_vector,
                               const Eigen::VectorXd* features);

// Layer-0 user vector. With features: ReLU(W0 [x; p] + b_0). Featureless: p.
Eigen::VectorXd user_base_embedding(const ModelParams& params, const HyperParams& hypers,
                                    const Eigen::VectorXd* features,
                                    const Eigen::VectorXd& free_vector);

// Mean or componentwise max of layer.col(b) over b in neighbors; the zero
// vector when neighbors is empty.
Eigen::VectorXd aggregate_neighbors(const Eigen::MatrixXd& layer,
                                    std::span<const Id> neighbors, Aggregator aggregator);

// ReLU(W^k [h_agg; h_self] + b_k).
Eigen::VectorXd convolve_layer(const ModelParams& params, std::size_t k,
                               const Eigen::VectorXd& aggregated,
                               const Eigen::VectorXd& self);

// layers[k] is D x M with column a holding h^k_a, k = 0..K.
struct DiffusionState {
  std::vector<Eigen::MatrixXd> layers;

  const Eigen::MatrixXd& top() const { return layers.back(); }
};

DiffusionState diffuse(const ModelParams& params, const HyperParams& hypers,
                       const SocialGraph& social, const Eigen::MatrixXd& base);

// h^K_a plus the mean item embedding over history (zero if history empty).
Eigen::VectorXd user_embedding(const DiffusionState& diffusion, Id user,
                               std::span<const Id> history,
                               const Eigen::MatrixXd& item_embeddings);

double predict(const Eigen::VectorXd& user, const Eigen::VectorXd& item);

// Whole-population forward pass.
struct Embeddings {
  Eigen::MatrixXd users;  // D x M
  Eigen::MatrixXd items;  // D x N
};

Eigen::MatrixXd all_item_embeddings(const ModelParams& params, const HyperParams& hypers,
                                    const DatasetBundle& bundle);
Eigen::MatrixXd all_base_embeddings(const ModelParams& params, const HyperParams& hypers,
                                    const DatasetBundle& bundle);
// Histories come from bundle.train only.
Embeddings compute_embeddings(const ModelParams& params, const HyperParams& hypers,
                              const DatasetBundle& bundle);

struct ScoredItem {
  Id item = 0;
  double score = 0.0;

  friend bool operator==(const ScoredItem&, const ScoredItem&) = default;
};

// Scores in candidate order. Throws DataError on unknown ids.
std::vector<ScoredItem> score_candidates(const Embeddings& embeddings, Id user,
                                         std::span<const Id> candidates);
std::vector<ScoredItem> score_all_items(const ModelParams& params, const HyperParams& hypers,
                                        const DatasetBundle& bundle, Id user,
                                        std::span<const Id> candidates);

// Shapes the data implies for these hyperparameters.
ModelShape model_shape(const HyperParams& hypers, const DatasetBundle& bundle);

// Throws ShapeError if params do not match (hypers, shape).
void check_params(const ModelParams& params, const HyperParams& hypers,
                  const ModelShape& shape);

}  // namespace sgcn

#endif  // SOCIALGCN_MODEL_HPP_
