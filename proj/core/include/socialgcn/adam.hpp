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

#ifndef SOCIALGCN_ADAM_HPP_
#define SOCIALGCN_ADAM_HPP_

#include <cstdint>

#include "socialgcn/gradients.hpp"
#include "socialgcn/params.hpp"

namespace sgcn {

struct AdamHyper {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  friend bool operator==(const AdamHyper&, const AdamHyper&) = default;
};

struct AdamState {
  AdamHyper hyper;
  ModelParams first_moment;
  ModelParams second_moment;
  std::uint64_t step = 0;

  static AdamState for_params(const ModelParams& params, AdamHyper hyper = {});
};

// One bias-corrected Adam update of every tensor. With freeze_user_free the
// user free vectors and their moments are left untouched. Throws
// ShapeError on incongruent tensors and NumericError if any updated value
// is non-finite (params and state are then unchanged).
void adam_step(ModelParams& params, AdamState& state, const GradientSet& grads,
               double learning_rate, bool freeze_user_free = false);

}  // namespace sgcn

#endif  // SOCIALGCN_ADAM_HPP_
