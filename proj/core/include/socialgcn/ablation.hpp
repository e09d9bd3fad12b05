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

#ifndef SOCIALGCN_ABLATION_HPP_
#define SOCIALGCN_ABLATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "socialgcn/dataset.hpp"
#include "socialgcn/evaluation.hpp"
#include "socialgcn/params.hpp"
#include "socialgcn/training.hpp"

namespace sgcn {

enum class AblationVariant {
  kFull,                // base hyperparameters
  kOneLayer,            // K = 1
  kFeaturelessDeep,     // no features, K = 2
  kFeaturelessShallow,  // no features, K = 1
  kNoUserFree,          // P pinned to zero
};

// "full", "k1", "featureless_k2", "featureless_k1", "p0".
const char* variant_name(AblationVariant variant);
// Throws ConfigError listing the valid names.
AblationVariant parse_variant(const std::string& name);
std::vector<AblationVariant> parse_variant_list(const std::string& comma_separated);

HyperParams apply_variant(HyperParams base, AblationVariant variant);

struct AblationRow {
  std::string name;
  HyperParams hypers;
  MetricReport report;
  std::size_t trainable_parameters = 0;
  std::size_t best_epoch = 0;
};

struct AblationTable {
  std::vector<AblationRow> rows;  // rows[0] is always the full model
};

// Trains each variant from the same seed and data and evaluates all of them
// on the same candidate samples. The full model is added as the reference
// when the list does not already contain it.
AblationTable run_ablation(const DatasetBundle& bundle, const HyperParams& base_hypers,
                           const TrainConfig& train_config, const EvalConfig& eval_config,
                           const std::vector<AblationVariant>& variants);

// 100 * (value - reference) / reference.
double relative_change_percent(double value, double reference);
// Two decimals and a percent sign; never prints "-0.00%".
std::string format_percent(double percent);

struct AblationLine {
  std::string name;
  double hr = 0.0;
  double ndcg = 0.0;
};

// Columns: model, HR@n, Improve., NDCG@n, Improve. Changes are relative to
// the first line, which therefore shows 0.00%.
std::string format_ablation_table(const std::vector<AblationLine>& lines, std::size_t cutoff);
std::string format_ablation_table(const AblationTable& table, std::size_t cutoff);

}  // namespace sgcn

#endif  // SOCIALGCN_ABLATION_HPP_
