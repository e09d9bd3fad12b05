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

#include "socialgcn/training.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "socialgcn/errors.hpp"
#include "socialgcn/evaluation.hpp"
#include "socialgcn/gradients.hpp"
#include "socialgcn/model.hpp"
#include "socialgcn/rng.hpp"
#include "socialgcn/sampling.hpp"
#include "socialgcn/tsv_io.hpp"

namespace sgcn {

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0)) throw ConfigError("learning_rate must be positive");
  if (batch_size == 0) throw ConfigError("batch_size must be positive");
  if (negatives_per_positive == 0) throw ConfigError("negatives_per_positive must be positive");
  if (!(lambda_reg >= 0.0)) throw ConfigError("lambda must be non-negative");
  if (early_stop_patience == 0) throw ConfigError("patience must be positive");
  if (workers == 0) throw ConfigError("workers must be positive");
}

TrainResult train(const DatasetBundle& bundle, const HyperParams& hypers,
                  const TrainConfig& config,
                  const std::function<void(const EpochRecord&)>& on_epoch) {
  config.validate();
  hypers.validate();
  if (bundle.train.empty()) throw DataError("training split is empty");

  TrainResult result;
  result.params = init_params(hypers, model_shape(hypers, bundle), config.seed);
  ModelParams best = result.params;
  AdamState adam = AdamState::for_params(result.params, config.adam);
  const BatchObjective objective{config.lambda_reg, config.loss_form};

  EvalConfig validation;
  validation.cutoffs = {10};
  validation.num_negatives = config.validation_negatives;
  validation.repetitions = 1;
  validation.seed = config.seed;
  validation.workers = config.workers;
  validation.split = EvalSplit::kValidation;
  const bool has_validation = !bundle.validation.empty();

  double best_ndcg = -1.0;
  std::size_t since_best = 0;
  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    const auto started = std::chrono::steady_clock::now();
    SampledPairs sampled =
        sample_pairs(bundle.train, config.negatives_per_positive, config.seed, epoch);
    Rng shuffle_rng = make_rng({config.seed, kShuffleStream, epoch});
    std::shuffle(sampled.pairs.begin(), sampled.pairs.end(), shuffle_rng);

    double loss_sum = 0.0;
    std::size_t batches = 0;
    std::span<const PairwiseSample> all(sampled.pairs);
    for (std::size_t first = 0; first < all.size(); first += config.batch_size) {
      auto batch = all.subspan(first, std::min(config.batch_size, all.size() - first));
      LossAndGradients step =
          loss_and_gradients(result.params, hypers, bundle, batch, objective);
      adam_step(result.params, adam, step.gradients, config.learning_rate,
                hypers.pin_user_free);
      loss_sum += step.loss;
      ++batches;
    }

    EpochRecord record;
    record.epoch = epoch;
    record.loss = batches ? loss_sum / static_cast<double>(batches) : 0.0;
    record.saturated_users = sampled.saturated_users;
    if (!std::isfinite(record.loss)) {
      throw NumericError("training diverged at epoch " + std::to_string(epoch));
    }
    if (has_validation) {
      const MetricReport val = evaluate(result.params, hypers, bundle, validation);
      record.has_validation = true;
      record.val_hr10 = val.hr(10);
      record.val_ndcg10 = val.ndcg(10);
    }
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    result.log.push_back(record);
    if (on_epoch) on_epoch(record);

    if (!has_validation) {
      best = result.params;
      result.best_epoch = epoch;
      continue;
    }
    if (record.val_ndcg10 > best_ndcg) {
      best_ndcg = record.val_ndcg10;
      best = result.params;
      result.best_epoch = epoch;
      since_best = 0;
    } else if (++since_best >= config.early_stop_patience) {
      result.early_stopped = true;
      break;
    }
  }
  result.params = std::move(best);
  return result;
}

std::string format_training_log(const TrainResult& result, const HyperParams& hypers,
                                const TrainConfig& config) {
  std::ostringstream out;
  out << "# optimizer=adam beta1=" << format_double(config.adam.beta1)
      << " beta2=" << format_double(config.adam.beta2)
      << " epsilon=" << format_double(config.adam.epsilon)
      << " learning_rate=" << format_double(config.learning_rate) << '\n';
  out << "# loss=" << to_string(config.loss_form)
      << " lambda=" << format_double(config.lambda_reg)
      << " regularizer=once_per_batch negatives_per_positive="
      << config.negatives_per_positive << " batch_size=" << config.batch_size << '\n';
  out << "# dim=" << hypers.dim << " free_dim=" << hypers.free_dim
      << " depth=" << hypers.depth << " mode=" << to_string(hypers.feature_mode)
      << " aggregator=" << to_string(hypers.aggregator)
      << " bias=" << (hypers.use_bias ? "true" : "false")
      << " pin_user_free=" << (hypers.pin_user_free ? "true" : "false") << '\n';
  out << "# seed=" << config.seed << " workers=" << config.workers << '\n';
  out << "epoch\tloss\tval_hr@10\tval_ndcg@10\tsaturated_users\n";
  for (const EpochRecord& r : result.log) {
    out << r.epoch << '\t' << format_double(r.loss) << '\t'
        << (r.has_validation ? format_double(r.val_hr10) : "nan") << '\t'
        << (r.has_validation ? format_double(r.val_ndcg10) : "nan") << '\t'
        << r.saturated_users << '\n';
  }
  out << "# best_epoch=" << result.best_epoch
      << " early_stopped=" << (result.early_stopped ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace sgcn
