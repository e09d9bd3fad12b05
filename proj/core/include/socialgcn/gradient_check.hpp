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

#ifndef SOCIALGCN_GRADIENT_CHECK_HPP_
#define SOCIALGCN_GRADIENT_CHECK_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "socialgcn/dataset.hpp"
#include "socialgcn/gradients.hpp"
#include "socialgcn/params.hpp"
#include "socialgcn/sampling.hpp"

namespace sgcn {

struct GradientCheckOptions {
  double step = 1e-5;
  double tolerance = 1e-4;
  // Relative error is |analytic - numeric| / max(|analytic|, |numeric|, floor).
  double abs_floor = 1e-6;
  // Above this many coordinates a seeded random subset is checked.
  std::size_t max_coordinates = 5000;
  // Retries at a jittered point when a difference straddles a kink.
  std::size_t max_retries = 3;
  double jitter = 1e-3;
  std::uint64_t seed = 0;
  // Tensors (by name) excluded from checking and jitter.
  std::vector<std::string> skip_tensors;
};

struct GradientCheckReport {
  double max_rel_error = 0.0;
  std::string worst_tensor;
  long worst_row = -1;
  long worst_col = -1;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;
  std::size_t coordinates_checked = 0;
  std::size_t kinks = 0;  // in the final attempt
  std::size_t retries = 0;
  bool passed = false;
};

// A scalar function of ModelParams with its claimed gradient.
struct CheckedObjective {
  struct Evaluation {
    double value = 0.0;
    // Piece identifier for piecewise-smooth functions; may stay empty.
    std::vector<std::uint32_t> pattern;
  };
  std::function<Evaluation(const ModelParams&)> evaluate;
  std::function<GradientSet(const ModelParams&)> gradient;
};

// Central differences against objective.gradient at `at`. Passing requires
// max_rel_error < tolerance, so tolerance 0 never passes.
GradientCheckReport check_gradients(const CheckedObjective& objective, const ModelParams& at,
                                    const GradientCheckOptions& options = {});

// The batch_loss / compute_gradients pair for one batch.
GradientCheckReport finite_difference_check(const ModelParams& params,
                                            const HyperParams& hypers,
                                            const DatasetBundle& bundle,
                                            std::span<const PairwiseSample> batch,
                                            const BatchObjective& objective = {},
                                            const GradientCheckOptions& options = {});

}  // namespace sgcn

#endif  // SOCIALGCN_GRADIENT_CHECK_HPP_
