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

#ifndef SOCIALGCN_LOSS_HPP_
#define SOCIALGCN_LOSS_HPP_

namespace sgcn {

// kBpr is -ln sigmoid(pos - neg). kLiteralSigmoid minimizes sigmoid(pos - neg)
// exactly as the objective is sometimes transcribed; it pushes negatives
// above positives and is kept only to document that reading.
enum class LossForm { kBpr, kLiteralSigmoid };

const char* to_string(LossForm form);

// log(1 + exp(x)) without overflow or cancellation.
double softplus(double x);
double sigmoid(double x);

// -ln sigmoid(score_pos - score_neg) = softplus(score_neg - score_pos).
double bpr_pair_loss(double score_pos, double score_neg);

double pair_loss(LossForm form, double margin);
// d pair_loss / d margin.
double pair_loss_slope(LossForm form, double margin);

}  // namespace sgcn

#endif  // SOCIALGCN_LOSS_HPP_
