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

#include "socialgcn/adam.hpp"

#include <cmath>

#include "socialgcn/errors.hpp"

namespace sgcn {

AdamState AdamState::for_params(const ModelParams& params, AdamHyper hyper) {
  return AdamState{hyper, params.zeros_like(), params.zeros_like(), 0};
}

void adam_step(ModelParams& params, AdamState& state, const GradientSet& grads,
               double learning_rate, bool freeze_user_free) {
  if (!params.same_shapes(grads.values) || !params.same_shapes(state.first_moment) ||
      !params.same_shapes(state.second_moment)) {
    throw ShapeError("adam: parameter, gradient and moment shapes differ");
  }
  const AdamHyper& h = state.hyper;
  const std::uint64_t t = state.step + 1;
  const double correction1 = 1.0 - std::pow(h.beta1, static_cast<double>(t));
  const double correction2 = 1.0 - std::pow(h.beta2, static_cast<double>(t));

  ModelParams next = params;
  ModelParams m = state.first_moment;
  ModelParams v = state.second_moment;
  auto theta = next.tensors();
  auto g = grads.values.tensors();
  auto m1 = m.tensors();
  auto m2 = v.tensors();
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (freeze_user_free && theta[k].name == "user_free") continue;
    auto ga = g[k].tensor->array();
    auto ma = m1[k].tensor->array();
    auto va = m2[k].tensor->array();
    ma = h.beta1 * ma + (1.0 - h.beta1) * ga;
    va = h.beta2 * va + (1.0 - h.beta2) * ga.square();
    theta[k].tensor->array() -=
        learning_rate * (ma / correction1) / ((va / correction2).sqrt() + h.epsilon);
  }
  if (!next.all_finite()) throw NumericError("adam step produced non-finite parameters");
  params = std::move(next);
  state.first_moment = std::move(m);
  state.second_moment = std::move(v);
  state.step = t;
}

}  // namespace sgcn
