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

#ifndef SOCIALGCN_GRADIENTS_HPP_
#define SOCIALGCN_GRADIENTS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "socialgcn/dataset.hpp"
#include "socialgcn/loss.hpp"
#include "socialgcn/params.hpp"
#include "socialgcn/sampling.hpp"

namespace sgcn {

// d loss / d theta, congruent with the ModelParams it was computed for.
struct GradientSet {
  ModelParams values;
};

struct BatchObjective {
  double lambda_reg = 1e-4;
  LossForm form = LossForm::kBpr;
};

// mean over the batch of the pair loss + lambda * (|P|^2 + |Q|^2). The
// regularizer is added once per batch; an empty batch contributes only it.
double batch_loss(const ModelParams& params, const HyperParams& hypers,
                  const DatasetBundle& bundle, std::span<const PairwiseSample> batch,
                  const BatchObjective& objective = {});

struct LossAndGradients {
  double loss = 0.0;
  GradientSet gradients;
};

// Exact reverse-mode gradients of batch_loss. Only the users and items the
// batch reaches (batch users, their K-hop followee cones, positives,
// negatives and history items) are recomputed. ReLU'(0) is taken as 0 and
// max aggregation routes the gradient to the first maximal neighbor. Throws
// NumericError on a non-finite loss or gradient.
LossAndGradients loss_and_gradients(const ModelParams& params, const HyperParams& hypers,
                                    const DatasetBundle& bundle,
                                    std::span<const PairwiseSample> batch,
                                    const BatchObjective& objective = {});

GradientSet compute_gradients(const ModelParams& params, const HyperParams& hypers,
                              const DatasetBundle& bundle,
                              std::span<const PairwiseSample> batch,
                              const BatchObjective& objective = {});

// Which ReLUs are active and which neighbor wins each max-aggregated
// component. Equal patterns mean the loss is smooth between two points on
// the same piece.
std::vector<std::uint32_t> activation_pattern(const ModelParams& params,
                                              const HyperParams& hypers,
                                              const DatasetBundle& bundle,
                                              std::span<const PairwiseSample> batch);

}  // namespace sgcn

#endif  // SOCIALGCN_GRADIENTS_HPP_
