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

#ifndef SOCIALGCN_TRAINING_HPP_
#define SOCIALGCN_TRAINING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "socialgcn/adam.hpp"
#include "socialgcn/dataset.hpp"
#include "socialgcn/loss.hpp"
#include "socialgcn/params.hpp"

namespace sgcn {

struct TrainConfig {
  double learning_rate = 0.001;
  std::size_t batch_size = 512;
  std::size_t negatives_per_positive = 5;
  double lambda_reg = 1e-4;
  std::size_t max_epochs = 100;
  // Stop after this many epochs without a better validation NDCG@10.
  std::size_t early_stop_patience = 10;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  LossForm loss_form = LossForm::kBpr;
  AdamHyper adam;
  // Candidate pool for the per-epoch validation ranking.
  std::size_t validation_negatives = 1000;

  void validate() const;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

struct EpochRecord {
  std::size_t epoch = 0;  // 1-based
  double loss = 0.0;      // mean batch loss over the epoch
  bool has_validation = false;
  double val_hr10 = 0.0;
  double val_ndcg10 = 0.0;
  std::size_t saturated_users = 0;
  // Wall-clock time is reported but never written to the deterministic log.
  double wall_seconds = 0.0;
};

struct TrainResult {
  ModelParams params;  // best-validation parameters (last epoch without validation)
  std::vector<EpochRecord> log;
  std::size_t best_epoch = 0;  // 0: the initial parameters were kept
  bool early_stopped = false;
};

// Mini-batch Adam over freshly sampled pairs each epoch. Every epoch ends
// with a validation ranking (HR@10 / NDCG@10, one repetition) when the
// validation split is non-empty. Throws DataError on empty training data
// and NumericError on divergence.
TrainResult train(const DatasetBundle& bundle, const HyperParams& hypers,
                  const TrainConfig& config,
                  const std::function<void(const EpochRecord&)>& on_epoch = {});

// Deterministic, tab-separated epoch log with a commented header that pins
// the optimizer settings.
std::string format_training_log(const TrainResult& result, const HyperParams& hypers,
                                const TrainConfig& config);

}  // namespace sgcn

#endif  // SOCIALGCN_TRAINING_HPP_
