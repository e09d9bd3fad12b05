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

#include "socialgcn/params.hpp"

#include <cmath>
#include <random>

#include "socialgcn/errors.hpp"
#include "socialgcn/rng.hpp"

namespace sgcn {

const char* to_string(FeatureMode mode) {
  return mode == FeatureMode::kWithFeatures ? "features" : "featureless";
}

const char* to_string(Aggregator aggregator) {
  return aggregator == Aggregator::kAverage ? "average" : "max";
}

FeatureMode parse_feature_mode(const std::string& text) {
  if (text == "features") return FeatureMode::kWithFeatures;
  if (text == "featureless") return FeatureMode::kFeatureless;
  throw ConfigError("unknown feature mode '" + text + "' (features|featureless)");
}

Aggregator parse_aggregator(const std::string& text) {
  if (text == "average") return Aggregator::kAverage;
  if (text == "max") return Aggregator::kMax;
  throw ConfigError("unknown aggregator '" + text + "' (average|max)");
}

void HyperParams::validate() const {
  if (dim == 0 || free_dim == 0) throw ConfigError("embedding dimensions must be positive");
  if (feature_mode == FeatureMode::kFeatureless && free_dim != dim) {
    throw ConfigError("featureless mode requires free_dim == dim (got " +
                      std::to_string(free_dim) + " vs " + std::to_string(dim) + ")");
  }
}

namespace {

template <typename Self, typename Out>
void collect_tensors(Self& self, std::vector<Out>& out) {
  auto add = [&](std::string name, auto& t) {
    if (t.size() > 0) out.push_back({std::move(name), &t});
  };
  add("user_free", self.user_free);
  add("item_free", self.item_free);
  add("item_transform", self.item_transform);
  add("item_bias", self.item_bias);
  add("base_transform", self.base_transform);
  add("base_bias", self.base_bias);
  for (std::size_t k = 0; k < self.conv_weight.size(); ++k) {
    add("conv_weight." + std::to_string(k), self.conv_weight[k]);
  }
  for (std::size_t k = 0; k < self.conv_bias.size(); ++k) {
    add("conv_bias." + std::to_string(k), self.conv_bias[k]);
  }
}

}  // namespace

std::vector<ModelParams::Entry> ModelParams::tensors() {
  std::vector<Entry> out;
  collect_tensors(*this, out);
  return out;
}

std::vector<ModelParams::ConstEntry> ModelParams::tensors() const {
  std::vector<ConstEntry> out;
  collect_tensors(*this, out);
  return out;
}

ModelParams ModelParams::zeros(const HyperParams& hypers, const ModelShape& shape) {
  hypers.validate();
  const auto d = static_cast<Eigen::Index>(hypers.dim);
  const auto l = static_cast<Eigen::Index>(hypers.free_dim);
  const auto d1 = static_cast<Eigen::Index>(shape.user_feature_dim);
  const auto d2 = static_cast<Eigen::Index>(shape.item_feature_dim);

  ModelParams p;
  p.user_free = Eigen::MatrixXd::Zero(l, static_cast<Eigen::Index>(shape.users));
  p.item_free = Eigen::MatrixXd::Zero(l, static_cast<Eigen::Index>(shape.items));
  if (hypers.feature_mode == FeatureMode::kWithFeatures) {
    p.item_transform = Eigen::MatrixXd::Zero(d, l + d2);
    p.base_transform = Eigen::MatrixXd::Zero(d, d1 + l);
    if (hypers.use_bias) {
      p.item_bias = Eigen::MatrixXd::Zero(d, 1);
      p.base_bias = Eigen::MatrixXd::Zero(d, 1);
    }
  }
  for (std::size_t k = 0; k < hypers.depth; ++k) {
    p.conv_weight.push_back(Eigen::MatrixXd::Zero(d, 2 * d));
    p.conv_bias.push_back(hypers.use_bias ? Eigen::MatrixXd::Zero(d, 1) : Eigen::MatrixXd());
  }
  return p;
}

ModelParams ModelParams::zeros_like() const {
  ModelParams z = *this;
  for (auto& e : z.tensors()) e.tensor->setZero();
  return z;
}

std::size_t ModelParams::parameter_count() const {
  std::size_t n = 0;
  for (const auto& e : tensors()) n += static_cast<std::size_t>(e.tensor->size());
  return n;
}

bool ModelParams::all_finite() const {
  for (const auto& e : tensors()) {
    if (!e.tensor->allFinite()) return false;
  }
  return true;
}

bool ModelParams::same_shapes(const ModelParams& other) const {
  auto a = tensors();
  auto b = other.tensors();
  if (a.size() != b.size()) return false;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t].name != b[t].name || a[t].tensor->rows() != b[t].tensor->rows() ||
        a[t].tensor->cols() != b[t].tensor->cols()) {
      return false;
    }
  }
  return true;
}

bool operator==(const ModelParams& a, const ModelParams& b) {
  if (!a.same_shapes(b)) return false;
  auto ta = a.tensors();
  auto tb = b.tensors();
  for (std::size_t t = 0; t < ta.size(); ++t) {
    if (*ta[t].tensor != *tb[t].tensor) return false;
  }
  return true;
}

ModelParams init_params(const HyperParams& hypers, const ModelShape& shape,
                        std::uint64_t seed) {
  ModelParams p = ModelParams::zeros(hypers, shape);
  Rng rng = make_rng({seed, kInitStream});

  auto fill_uniform = [&](Eigen::MatrixXd& m, double bound) {
    std::uniform_real_distribution<double> dist(-bound, bound);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = dist(rng);
    }
  };
  auto glorot = [&](Eigen::MatrixXd& m) {
    if (m.size() == 0) return;
    fill_uniform(m, std::sqrt(6.0 / static_cast<double>(m.rows() + m.cols())));
  };

  if (!hypers.pin_user_free) fill_uniform(p.user_free, 0.01);
  fill_uniform(p.item_free, 0.01);
  glorot(p.item_transform);
  glorot(p.base_transform);
  for (auto& w : p.conv_weight) glorot(w);
  return p;
}

std::size_t trainable_parameter_count(const ModelParams& params,
                                      const HyperParams& hypers) {
  std::size_t n = params.parameter_count();
  if (hypers.pin_user_free) n -= static_cast<std::size_t>(params.user_free.size());
  return n;
}

}  // namespace sgcn
