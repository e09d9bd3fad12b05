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

#ifndef SOCIALGCN_EVALUATION_HPP_
#define SOCIALGCN_EVALUATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "socialgcn/dataset.hpp"
#include "socialgcn/params.hpp"

namespace sgcn {

// Which split supplies the positives being ranked.
enum class EvalSplit { kTrain, kValidation, kTest };

const char* to_string(EvalSplit split);

struct RankingTask {
  Id user = 0;
  std::vector<Id> positives;   // ascending
  // positives followed by the sampled unrated items (ascending within each part).
  std::vector<Id> candidates;
};

struct EvalConfig {
  std::vector<std::size_t> cutoffs{5, 10, 15};
  std::size_t num_negatives = 1000;
  std::size_t repetitions = 10;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  EvalSplit split = EvalSplit::kTest;

  void validate() const;

  friend bool operator==(const EvalConfig&, const EvalConfig&) = default;
};

// One task per user with at least one positive in `split`. Negatives are
// sampled without replacement from the items the user rated in no split;
// all of them when fewer than num_negatives exist. Deterministic in
// (seed, repetition, user).
std::vector<RankingTask> build_tasks(const DatasetBundle& bundle, EvalSplit split,
                                     std::size_t num_negatives, std::uint64_t seed,
                                     std::size_t repetition);

struct MetricReport {
  std::vector<std::size_t> cutoffs;
  // [repetition][cutoff index], each a mean over tasks.
  std::vector<std::vector<double>> hr_per_repetition;
  std::vector<std::vector<double>> ndcg_per_repetition;
  std::vector<double> hr_mean;  // [cutoff index], mean over repetitions
  std::vector<double> ndcg_mean;
  std::size_t repetitions = 0;
  std::size_t num_tasks = 0;
  std::size_t num_negatives = 0;
  std::uint64_t seed = 0;
  EvalSplit split = EvalSplit::kTest;

  double hr(std::size_t cutoff) const;
  double ndcg(std::size_t cutoff) const;
};

// Fills scores[k] for candidates[k]. Called concurrently when workers > 1.
using ScoreFn =
    std::function<void(Id user, std::span<const Id> candidates, std::span<double> scores)>;

MetricReport evaluate_scores(const DatasetBundle& bundle, const EvalConfig& config,
                             const ScoreFn& score);

MetricReport evaluate(const ModelParams& params, const HyperParams& hypers,
                      const DatasetBundle& bundle, const EvalConfig& config);

// "key=value" lines; doubles in shortest round-trip form. `metadata` is
// emitted first, in key order.
std::string format_report(const MetricReport& report,
                          const std::map<std::string, std::string>& metadata = {});

// Tab-separated: model, HR@n..., NDCG@n... (4 decimals).
std::string format_metric_table(
    const std::vector<std::pair<std::string, MetricReport>>& rows);

}  // namespace sgcn

#endif  // SOCIALGCN_EVALUATION_HPP_
