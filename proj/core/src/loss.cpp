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

#include "socialgcn/loss.hpp"

#include <algorithm>
#include <cmath>

namespace sgcn {

const char* to_string(LossForm form) {
  return form == LossForm::kBpr ? "bpr" : "literal_sigmoid";
}

double softplus(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double bpr_pair_loss(double score_pos, double score_neg) {
  return softplus(score_neg - score_pos);
}

double pair_loss(LossForm form, double margin) {
  return form == LossForm::kBpr ? softplus(-margin) : sigmoid(margin);
}

double pair_loss_slope(LossForm form, double margin) {
  if (form == LossForm::kBpr) return -sigmoid(-margin);
  const double s = sigmoid(margin);
  return s * (1.0 - s);
}

}  // namespace sgcn
