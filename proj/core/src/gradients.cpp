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

#include "socialgcn/gradients.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kernels.hpp"
#include "socialgcn/errors.hpp"
#include "socialgcn/model.hpp"

namespace sgcn {
namespace {

// Forward pass over the sub-graph a batch touches, keeping what the
// backward pass needs. Per-user and per-item quantities live in dense
// D x M / D x N matrices; only the columns in the reached sets are valid.
class BatchTape {
 public:
  BatchTape(const ModelParams& params, const HyperParams& hypers,
            const DatasetBundle& bundle, std::span<const PairwiseSample> batch)
      : params_(params), hypers_(hypers), bundle_(bundle), batch_(batch) {
    check_params(params, hypers, model_shape(hypers, bundle));
    for (const PairwiseSample& s : batch) {
      if (s.user >= bundle.num_users() || s.pos_item >= bundle.num_items() ||
          s.neg_item >= bundle.num_items()) {
        throw DataError("pairwise sample references an unknown id");
      }
    }
    collect_reached();
    forward();
  }

  double loss(const BatchObjective& objective) const {
    double sum = 0.0;
    for (double m : margins_) sum += pair_loss(objective.form, m);
    const double mean = batch_.empty() ? 0.0 : sum / static_cast<double>(batch_.size());
    return mean + objective.lambda_reg * (params_.user_free.squaredNorm() +
                                          params_.item_free.squaredNorm());
  }

  GradientSet backward(const BatchObjective& objective) const;
  std::vector<std::uint32_t> pattern() const;

 private:
  bool with_features() const { return hypers_.feature_mode == FeatureMode::kWithFeatures; }
  std::size_t depth() const { return hypers_.depth; }

  void collect_reached();
  void forward();

  const ModelParams& params_;
  const HyperParams& hypers_;
  const DatasetBundle& bundle_;
  std::span<const PairwiseSample> batch_;

  // reached_[k]: users whose h^k is needed, ascending. reached_[K] are the
  // batch users.
  std::vector<std::vector<Id>> reached_;
  std::vector<Id> items_;

  Eigen::MatrixXd item_pre_, item_emb_;
  std::vector<Eigen::MatrixXd> pre_;  // pre_[k]: pre-activation of h^k
  std::vector<Eigen::MatrixXd> h_;
  std::vector<Eigen::MatrixXd> agg_;  // agg_[k]: aggregate feeding layer k+1
  // argmax_[k][a]: winning neighbor per component (max aggregator only).
  std::vector<std::vector<std::vector<Id>>> argmax_;
  Eigen::MatrixXd user_emb_;
  std::vector<double> margins_;
};

void BatchTape::collect_reached() {
  const std::size_t m = bundle_.num_users();
  const std::size_t n = bundle_.num_items();
  const std::size_t k_max = depth();

  std::vector<char> mark(m, 0);
  reached_.assign(k_max + 1, {});
  for (const PairwiseSample& s : batch_) {
    if (!mark[s.user]) {
      mark[s.user] = 1;
      reached_[k_max].push_back(s.user);
    }
  }
  std::sort(reached_[k_max].begin(), reached_[k_max].end());
  for (std::size_t k = k_max; k-- > 0;) {
    std::vector<Id>& layer = reached_[k];
    layer = reached_[k + 1];
    for (Id a : reached_[k + 1]) {
      for (Id b : bundle_.social.followees_of(a)) {
        if (!mark[b]) {
          mark[b] = 1;
          layer.push_back(b);
        }
      }
    }
    std::sort(layer.begin(), layer.end());
  }

  std::vector<char> item_mark(n, 0);
  auto touch = [&](Id i) {
    if (!item_mark[i]) {
      item_mark[i] = 1;
      items_.push_back(i);
    }
  };
  for (const PairwiseSample& s : batch_) {
    touch(s.pos_item);
    touch(s.neg_item);
  }
  for (Id a : reached_[k_max]) {
    for (Id i : bundle_.train.items_of(a)) touch(i);
  }
  std::sort(items_.begin(), items_.end());
}

void BatchTape::forward() {
  const auto d = static_cast<Eigen::Index>(hypers_.dim);
  const auto m = static_cast<Eigen::Index>(bundle_.num_users());
  const auto n = static_cast<Eigen::Index>(bundle_.num_items());
  const std::size_t k_max = depth();

  item_emb_.setZero(d, n);
  if (with_features()) {
    item_pre_.setZero(d, n);
    const Eigen::MatrixXd& y = bundle_.item_features->values();
    for (Id i : items_) {
      item_pre_.col(i) = detail::affine(params_.item_transform, params_.item_bias,
                                        params_.item_free.col(i), y.col(i));
      item_emb_.col(i) = detail::relu(item_pre_.col(i));
    }
  } else {
    for (Id i : items_) item_emb_.col(i) = params_.item_free.col(i);
  }

  pre_.assign(k_max + 1, Eigen::MatrixXd());
  h_.assign(k_max + 1, Eigen::MatrixXd());
  agg_.assign(k_max, Eigen::MatrixXd());
  argmax_.assign(k_max, {});

  h_[0].setZero(d, m);
  if (with_features()) {
    pre_[0].setZero(d, m);
    const Eigen::MatrixXd& x = bundle_.user_features->values();
    for (Id a : reached_[0]) {
      pre_[0].col(a) = detail::affine(params_.base_transform, params_.base_bias, x.col(a),
                                      params_.user_free.col(a));
      h_[0].col(a) = detail::relu(pre_[0].col(a));
    }
  } else {
    for (Id a : reached_[0]) h_[0].col(a) = params_.user_free.col(a);
  }

  const bool use_max = hypers_.aggregator == Aggregator::kMax;
  for (std::size_t k = 0; k < k_max; ++k) {
    pre_[k + 1].setZero(d, m);
    h_[k + 1].setZero(d, m);
    agg_[k].setZero(d, m);
    if (use_max) argmax_[k].assign(static_cast<std::size_t>(m), {});
    for (Id a : reached_[k + 1]) {
      agg_[k].col(a) = detail::aggregate(h_[k], bundle_.social.followees_of(a),
                                         hypers_.aggregator,
                                         use_max ? &argmax_[k][a] : nullptr);
      pre_[k + 1].col(a) = detail::affine(params_.conv_weight[k], params_.conv_bias[k],
                                          agg_[k].col(a), h_[k].col(a));
      h_[k + 1].col(a) = detail::relu(pre_[k + 1].col(a));
    }
  }

  user_emb_.setZero(d, m);
  for (Id a : reached_[k_max]) {
    user_emb_.col(a) =
        detail::with_history(h_[k_max].col(a), bundle_.train.items_of(a), item_emb_);
  }

  margins_.clear();
  margins_.reserve(batch_.size());
  for (const PairwiseSample& s : batch_) {
    const double pos = detail::dot(user_emb_.col(s.user), item_emb_.col(s.pos_item));
    const double neg = detail::dot(user_emb_.col(s.user), item_emb_.col(s.neg_item));
    margins_.push_back(pos - neg);
  }
}

GradientSet BatchTape::backward(const BatchObjective& objective) const {
  const auto d = static_cast<Eigen::Index>(hypers_.dim);
  const auto l = static_cast<Eigen::Index>(hypers_.free_dim);
  const auto m = static_cast<Eigen::Index>(bundle_.num_users());
  const auto n = static_cast<Eigen::Index>(bundle_.num_items());
  const std::size_t k_max = depth();

  GradientSet grads{params_.zeros_like()};
  ModelParams& g = grads.values;

  // Score layer.
  Eigen::MatrixXd d_user = Eigen::MatrixXd::Zero(d, m);
  Eigen::MatrixXd d_item = Eigen::MatrixXd::Zero(d, n);
  const double inv_batch = batch_.empty() ? 0.0 : 1.0 / static_cast<double>(batch_.size());
  for (std::size_t t = 0; t < batch_.size(); ++t) {
    const PairwiseSample& s = batch_[t];
    const double slope = pair_loss_slope(objective.form, margins_[t]) * inv_batch;
    d_user.col(s.user) += slope * (item_emb_.col(s.pos_item) - item_emb_.col(s.neg_item));
    d_item.col(s.pos_item) += slope * user_emb_.col(s.user);
    d_item.col(s.neg_item) -= slope * user_emb_.col(s.user);
  }

  // u_a = h^K_a + mean history embedding.
  std::vector<Eigen::MatrixXd> d_h(k_max + 1);
  d_h[k_max] = Eigen::MatrixXd::Zero(d, m);
  for (Id a : reached_[k_max]) {
    d_h[k_max].col(a) += d_user.col(a);
    auto history = bundle_.train.items_of(a);
    if (history.empty()) continue;
    const Eigen::VectorXd share = d_user.col(a) / static_cast<double>(history.size());
    for (Id i : history) d_item.col(i) += share;
  }

  // Diffusion layers, top down.
  for (std::size_t k = k_max; k-- > 0;) {
    d_h[k] = Eigen::MatrixXd::Zero(d, m);
    const Eigen::MatrixXd& w = params_.conv_weight[k];
    Eigen::MatrixXd& dw = g.conv_weight[k];
    for (Id a : reached_[k + 1]) {
      const Eigen::VectorXd dz =
          (pre_[k + 1].col(a).array() > 0.0).select(d_h[k + 1].col(a), 0.0);
      if (dz.isZero(0.0)) continue;
      dw.leftCols(d).noalias() += dz * agg_[k].col(a).transpose();
      dw.rightCols(d).noalias() += dz * h_[k].col(a).transpose();
      if (g.conv_bias[k].size() > 0) g.conv_bias[k].col(0) += dz;
      d_h[k].col(a).noalias() += w.rightCols(d).transpose() * dz;

      auto neighbors = bundle_.social.followees_of(a);
      if (neighbors.empty()) continue;
      const Eigen::VectorXd d_agg = w.leftCols(d).transpose() * dz;
      if (hypers_.aggregator == Aggregator::kAverage) {
        const Eigen::VectorXd share = d_agg / static_cast<double>(neighbors.size());
        for (Id b : neighbors) d_h[k].col(b) += share;
      } else {
        const std::vector<Id>& winners = argmax_[k][a];
        for (Eigen::Index c = 0; c < d; ++c) {
          d_h[k](c, winners[static_cast<std::size_t>(c)]) += d_agg(c);
        }
      }
    }
  }

  // Layer 0.
  if (with_features()) {
    const Eigen::MatrixXd& x = bundle_.user_features->values();
    const Eigen::Index d1 = x.rows();
    for (Id a : reached_[0]) {
      const Eigen::VectorXd dz = (pre_[0].col(a).array() > 0.0).select(d_h[0].col(a), 0.0);
      if (dz.isZero(0.0)) continue;
      g.base_transform.leftCols(d1).noalias() += dz * x.col(a).transpose();
      g.base_transform.rightCols(l).noalias() += dz * params_.user_free.col(a).transpose();
      if (g.base_bias.size() > 0) g.base_bias.col(0) += dz;
      g.user_free.col(a).noalias() += params_.base_transform.rightCols(l).transpose() * dz;
    }
  } else {
    for (Id a : reached_[0]) g.user_free.col(a) += d_h[0].col(a);
  }

  // Items.
  if (with_features()) {
    const Eigen::MatrixXd& y = bundle_.item_features->values();
    const Eigen::Index d2 = y.rows();
    for (Id i : items_) {
      const Eigen::VectorXd dz = (item_pre_.col(i).array() > 0.0).select(d_item.col(i), 0.0);
      if (dz.isZero(0.0)) continue;
      g.item_transform.leftCols(l).noalias() += dz * params_.item_free.col(i).transpose();
      g.item_transform.rightCols(d2).noalias() += dz * y.col(i).transpose();
      if (g.item_bias.size() > 0) g.item_bias.col(0) += dz;
      g.item_free.col(i).noalias() += params_.item_transform.leftCols(l).transpose() * dz;
    }
  } else {
    for (Id i : items_) g.item_free.col(i) += d_item.col(i);
  }

  g.user_free += 2.0 * objective.lambda_reg * params_.user_free;
  g.item_free += 2.0 * objective.lambda_reg * params_.item_free;
  if (hypers_.pin_user_free) g.user_free.setZero();

  if (!g.all_finite()) throw NumericError("non-finite gradient");
  return grads;
}

std::vector<std::uint32_t> BatchTape::pattern() const {
  std::vector<std::uint32_t> out;
  auto signs = [&](const Eigen::MatrixXd& pre, std::span<const Id> cols) {
    for (Id c : cols) {
      for (Eigen::Index r = 0; r < pre.rows(); ++r) out.push_back(pre(r, c) > 0.0 ? 1u : 0u);
    }
  };
  if (with_features()) {
    signs(item_pre_, items_);
    signs(pre_[0], reached_[0]);
  }
  for (std::size_t k = 0; k < depth(); ++k) {
    signs(pre_[k + 1], reached_[k + 1]);
    if (hypers_.aggregator == Aggregator::kMax) {
      for (Id a : reached_[k + 1]) {
        for (Id w : argmax_[k][a]) out.push_back(w);
      }
    }
  }
  return out;
}

}  // namespace

double batch_loss(const ModelParams& params, const HyperParams& hypers,
                  const DatasetBundle& bundle, std::span<const PairwiseSample> batch,
                  const BatchObjective& objective) {
  return BatchTape(params, hypers, bundle, batch).loss(objective);
}

LossAndGradients loss_and_gradients(const ModelParams& params, const HyperParams& hypers,
                                    const DatasetBundle& bundle,
                                    std::span<const PairwiseSample> batch,
                                    const BatchObjective& objective) {
  BatchTape tape(params, hypers, bundle, batch);
  LossAndGradients out{tape.loss(objective), tape.backward(objective)};
  if (!std::isfinite(out.loss)) throw NumericError("non-finite batch loss");
  return out;
}

GradientSet compute_gradients(const ModelParams& params, const HyperParams& hypers,
                              const DatasetBundle& bundle,
                              std::span<const PairwiseSample> batch,
                              const BatchObjective& objective) {
  return loss_and_gradients(params, hypers, bundle, batch, objective).gradients;
}

std::vector<std::uint32_t> activation_pattern(const ModelParams& params,
                                              const HyperParams& hypers,
                                              const DatasetBundle& bundle,
                                              std::span<const PairwiseSample> batch) {
  return BatchTape(params, hypers, bundle, batch).pattern();
}

}  // namespace sgcn
