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

#ifndef SOCIALGCN_PARAMS_HPP_
#define SOCIALGCN_PARAMS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sgcn {

enum class FeatureMode { kWithFeatures, kFeatureless };
enum class Aggregator { kAverage, kMax };

const char* to_string(FeatureMode mode);
const char* to_string(Aggregator aggregator);
FeatureMode parse_feature_mode(const std::string& text);
Aggregator parse_aggregator(const std::string& text);

struct HyperParams {
  std::size_t dim = 16;       // D: final user/item embedding width
  std::size_t free_dim = 16;  // L: width of the free base vectors p_a, q_i
  std::size_t depth = 2;      // K: number of diffusion layers
  FeatureMode feature_mode = FeatureMode::kWithFeatures;
  Aggregator aggregator = Aggregator::kAverage;
  bool use_bias = true;
  // Pins P to zero and keeps it out of the optimizer (the P=0 ablation).
  bool pin_user_free = false;

  // Throws ConfigError (featureless mode needs free_dim == dim, dims > 0).
  void validate() const;

  friend bool operator==(const HyperParams&, const HyperParams&) = default;
};

// Sizes that come from the data rather than the hyperparameters.
struct ModelShape {
  std::size_t users = 0;
  std::size_t items = 0;
  std::size_t user_feature_dim = 0;  // d1
  std::size_t item_feature_dim = 0;  // d2

  friend bool operator==(const ModelShape&, const ModelShape&) = default;
};

// All trainable tensors. Vectors (biases) are stored as D x 1 matrices so
// that every tensor can be visited uniformly. A tensor that the active
// configuration does not use is left empty (0 x 0) and is skipped by
// tensors().
struct ModelParams {
  Eigen::MatrixXd user_free;       // P: L x M, column p_a
  Eigen::MatrixXd item_free;       // Q: L x N, column q_i
  Eigen::MatrixXd item_transform;  // F: D x (L + d2)
  Eigen::MatrixXd item_bias;       // D x 1
  Eigen::MatrixXd base_transform;  // layer-0 transform: D x (d1 + L)
  Eigen::MatrixXd base_bias;       // D x 1
  std::vector<Eigen::MatrixXd> conv_weight;  // K entries, D x 2D
  std::vector<Eigen::MatrixXd> conv_bias;    // K entries, D x 1

  struct Entry {
    std::string name;
    Eigen::MatrixXd* tensor;
  };
  struct ConstEntry {
    std::string name;
    const Eigen::MatrixXd* tensor;
  };

  // Stable order: user_free, item_free, item_transform, item_bias,
  // base_transform, base_bias, conv_weight.k, conv_bias.k.
  std::vector<Entry> tensors();
  std::vector<ConstEntry> tensors() const;

  // Zero tensors with the shapes implied by (hypers, shape).
  static ModelParams zeros(const HyperParams& hypers, const ModelShape& shape);
  // Same shapes as *this, all zeros.
  ModelParams zeros_like() const;

  std::size_t parameter_count() const;
  bool all_finite() const;
  bool same_shapes(const ModelParams& other) const;

  friend bool operator==(const ModelParams& a, const ModelParams& b);
};

// Initial values: P and Q uniform in (-0.01, 0.01); transforms uniform in
// +-sqrt(6 / (fan_in + fan_out)); biases zero. P stays zero when pinned.
ModelParams init_params(const HyperParams& hypers, const ModelShape& shape,
                        std::uint64_t seed);

// Trainable parameter count (P excluded when pinned).
std::size_t trainable_parameter_count(const ModelParams& params,
                                      const HyperParams& hypers);

}  // namespace sgcn

#endif  // SOCIALGCN_PARAMS_HPP_
