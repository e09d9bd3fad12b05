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

#include "socialgcn/gradient_check.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "socialgcn/rng.hpp"

namespace sgcn {
namespace {

struct Coordinate {
  std::size_t tensor;
  Eigen::Index flat;
};

bool skipped(const GradientCheckOptions& options, const std::string& name) {
  return std::find(options.skip_tensors.begin(), options.skip_tensors.end(), name) !=
         options.skip_tensors.end();
}

std::vector<Coordinate> pick_coordinates(const ModelParams& params,
                                         const GradientCheckOptions& options, Rng& rng) {
  const std::size_t limit = options.max_coordinates;
  std::vector<Coordinate> all;
  auto tensors = params.tensors();
  for (std::size_t t = 0; t < tensors.size(); ++t) {
    if (skipped(options, tensors[t].name)) continue;
    for (Eigen::Index f = 0; f < tensors[t].tensor->size(); ++f) all.push_back({t, f});
  }
  if (all.size() <= limit) return all;
  for (std::size_t i = 0; i < limit; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  all.resize(limit);
  std::sort(all.begin(), all.end(), [](const Coordinate& a, const Coordinate& b) {
    return std::pair(a.tensor, a.flat) < std::pair(b.tensor, b.flat);
  });
  return all;
}

}  // namespace

GradientCheckReport check_gradients(const CheckedObjective& objective, const ModelParams& at,
                                    const GradientCheckOptions& options) {
  Rng rng = make_rng({options.seed, kCheckStream});
  ModelParams point = at;
  GradientCheckReport report;

  for (std::size_t attempt = 0;; ++attempt) {
    report = GradientCheckReport{};
    report.retries = attempt;
    const GradientSet analytic = objective.gradient(point);
    const auto base_pattern = objective.evaluate(point).pattern;
    const auto coords = pick_coordinates(point, options, rng);

    ModelParams probe = point;
    auto probe_tensors = probe.tensors();
    auto analytic_tensors = analytic.values.tensors();
    for (const Coordinate& c : coords) {
      double& slot = probe_tensors[c.tensor].tensor->data()[c.flat];
      const double original = slot;
      slot = original + options.step;
      const auto plus = objective.evaluate(probe);
      slot = original - options.step;
      const auto minus = objective.evaluate(probe);
      slot = original;
      if (plus.pattern != base_pattern || minus.pattern != base_pattern) ++report.kinks;

      const double numeric = (plus.value - minus.value) / (2.0 * options.step);
      const double exact = analytic_tensors[c.tensor].tensor->data()[c.flat];
      const double scale =
          std::max({std::abs(exact), std::abs(numeric), options.abs_floor});
      const double rel = std::abs(exact - numeric) / scale;
      ++report.coordinates_checked;
      if (std::isnan(rel) || rel > report.max_rel_error || report.worst_tensor.empty()) {
        const Eigen::Index rows = probe_tensors[c.tensor].tensor->rows();
        report.max_rel_error = std::isnan(rel) ? INFINITY : std::max(rel, report.max_rel_error);
        report.worst_tensor = probe_tensors[c.tensor].name;
        report.worst_row = static_cast<long>(c.flat % rows);
        report.worst_col = static_cast<long>(c.flat / rows);
        report.worst_analytic = exact;
        report.worst_numeric = numeric;
      }
    }

    if (report.kinks == 0 || attempt >= options.max_retries) break;
    std::normal_distribution<double> noise(0.0, options.jitter);
    for (auto& e : point.tensors()) {
      if (skipped(options, e.name)) continue;
      for (Eigen::Index f = 0; f < e.tensor->size(); ++f) e.tensor->data()[f] += noise(rng);
    }
  }
  report.passed = report.max_rel_error < options.tolerance;
  return report;
}

GradientCheckReport finite_difference_check(const ModelParams& params,
                                            const HyperParams& hypers,
                                            const DatasetBundle& bundle,
                                            std::span<const PairwiseSample> batch,
                                            const BatchObjective& objective,
                                            const GradientCheckOptions& options) {
  GradientCheckOptions effective = options;
  // A pinned P is a constant, not a parameter.
  if (hypers.pin_user_free) effective.skip_tensors.push_back("user_free");
  CheckedObjective checked;
  checked.evaluate = [&](const ModelParams& p) {
    return CheckedObjective::Evaluation{batch_loss(p, hypers, bundle, batch, objective),
                                        activation_pattern(p, hypers, bundle, batch)};
  };
  checked.gradient = [&](const ModelParams& p) {
    return compute_gradients(p, hypers, bundle, batch, objective);
  };
  return check_gradients(checked, params, effective);
}

}  // namespace sgcn
