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

// Shared numeric kernels. The batch tape in gradients.cpp and the public
// forward in model.cpp both go through these, so the scores a trained model
// reports are bit-identical to the ones its loss was computed from.
#ifndef SOCIALGCN_SRC_KERNELS_HPP_
#define SOCIALGCN_SRC_KERNELS_HPP_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "socialgcn/dataset.hpp"
#include "socialgcn/params.hpp"

namespace sgcn::detail {

// W [top; bottom] + b, with b optional (empty).
inline Eigen::VectorXd affine(const Eigen::MatrixXd& w, const Eigen::MatrixXd& b,
                              const Eigen::Ref<const Eigen::VectorXd>& top,
                              const Eigen::Ref<const Eigen::VectorXd>& bottom) {
  Eigen::VectorXd z = w.leftCols(top.size()) * top;
  z.noalias() += w.rightCols(bottom.size()) * bottom;
  if (b.size() > 0) z += b.col(0);
  return z;
}

// Sequential sum, independent of operand alignment.
inline double dot(const Eigen::Ref<const Eigen::VectorXd>& a,
                  const Eigen::Ref<const Eigen::VectorXd>& b) {
  double s = 0.0;
  for (Eigen::Index c = 0; c < a.size(); ++c) s += a(c) * b(c);
  return s;
}

inline Eigen::VectorXd relu(const Eigen::VectorXd& z) { return z.cwiseMax(0.0); }

// Aggregate; when argmax is non-null and the aggregator is max it receives,
// per component, the neighbor that won (first one on ties).
inline Eigen::VectorXd aggregate(const Eigen::MatrixXd& layer, std::span<const Id> neighbors,
                                 Aggregator aggregator, std::vector<Id>* argmax = nullptr) {
  const Eigen::Index d = layer.rows();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(d);
  if (argmax) argmax->clear();
  if (neighbors.empty()) return out;
  if (aggregator == Aggregator::kAverage) {
    for (Id b : neighbors) out += layer.col(b);
    out /= static_cast<double>(neighbors.size());
    return out;
  }
  out = layer.col(neighbors.front());
  if (argmax) argmax->assign(static_cast<std::size_t>(d), neighbors.front());
  for (std::size_t n = 1; n < neighbors.size(); ++n) {
    const Id b = neighbors[n];
    for (Eigen::Index c = 0; c < d; ++c) {
      if (layer(c, b) > out(c)) {
        out(c) = layer(c, b);
        if (argmax) (*argmax)[static_cast<std::size_t>(c)] = b;
      }
    }
  }
  return out;
}

// top + mean of items.col(i) over history; top alone when history is empty.
inline Eigen::VectorXd with_history(const Eigen::Ref<const Eigen::VectorXd>& top,
                                    std::span<const Id> history,
                                    const Eigen::MatrixXd& items) {
  Eigen::VectorXd u = top;
  if (history.empty()) return u;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(top.size());
  for (Id i : history) sum += items.col(i);
  u += sum / static_cast<double>(history.size());
  return u;
}

}  // namespace sgcn::detail

#endif  // SOCIALGCN_SRC_KERNELS_HPP_
