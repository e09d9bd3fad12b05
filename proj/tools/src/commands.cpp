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


#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "socialgcn/ablation.hpp"
#include "socialgcn/checkpoint.hpp"
#include "socialgcn/fingerprint.hpp"
#include "socialgcn/metrics.hpp"
#include "socialgcn/model.hpp"
#include "socialgcn/training.hpp"
#include "socialgcn/tsv_io.hpp"

namespace sgcn::cli {
namespace {

std::filesystem::path require_output_dir(const RunConfig& config) {
  if (config.output_dir.empty()) throw ConfigError("missing required key 'output_dir'");
  return config.output_dir;
}

void make_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw DataError("cannot create output directory " + dir.string());
  }
}

std::string last_lines(const std::string& text, std::size_t count) {
  std::size_t pos = text.size();
  if (pos > 0 && text[pos - 1] == '\n') --pos;
  for (std::size_t seen = 0; pos > 0; --pos) {
    if (text[pos - 1] == '\n' && ++seen == count) break;
  }
  return text.substr(pos);
}

std::string prefixed(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  std::string out;
  while (std::getline(in, line)) out += prefix + line + '\n';
  return out;
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

// Loads the checkpoint and the data it is applied to, enforcing the
// fingerprint unless the caller allows a mismatch.
struct Loaded {
  Checkpoint checkpoint;
  DatasetBundle bundle;
  std::string fingerprint;
};

Loaded load_for_inference(const RunConfig& config, const std::filesystem::path& path,
                          bool allow_mismatch) {
  Loaded l{load_checkpoint(path), load_bundle(config), {}};
  l.fingerprint = dataset_fingerprint(l.bundle);
  if (l.fingerprint != l.checkpoint.dataset_fingerprint && !allow_mismatch) {
    throw DataError("dataset fingerprint mismatch: checkpoint " +
                    l.checkpoint.dataset_fingerprint + ", data " + l.fingerprint +
                    " (pass --allow-mismatch to override)");
  }
  check_params(l.checkpoint.params, l.checkpoint.hypers,
               model_shape(l.checkpoint.hypers, l.bundle));
  return l;
}

}  // namespace

void apply_overrides(RunConfig& config, const Overrides& o) {
  if (o.seed) config.seed = *o.seed;
  if (o.workers) config.workers = *o.workers;
  if (o.depth) config.hypers.depth = *o.depth;
  if (o.dim) {
    config.hypers.dim = *o.dim;
    config.hypers.free_dim = *o.dim;
  }
  if (o.mode) config.hypers.feature_mode = *o.mode;
  if (config.hypers.feature_mode == FeatureMode::kFeatureless) {
    config.hypers.free_dim = config.hypers.dim;
  }
  if (o.cutoffs) config.eval.cutoffs = *o.cutoffs;
  if (o.negatives) config.eval.num_negatives = *o.negatives;
  if (o.repetitions) config.eval.repetitions = *o.repetitions;
  config.propagate();
}

void cmd_train(const RunConfig& config, std::ostream& out) {
  config.validate();
  const std::filesystem::path dir = require_output_dir(config);
  const DatasetBundle bundle = load_bundle(config);
  const std::string fingerprint = dataset_fingerprint(bundle);

  const TrainResult result =
      train(bundle, config.hypers, config.train, [&out](const EpochRecord& r) {
        out << "epoch " << r.epoch << " loss=" << fixed(r.loss, 6);
        if (r.has_validation) out << " val_ndcg@10=" << fixed(r.val_ndcg10, 4);
        out << " (" << fixed(r.wall_seconds, 2) << "s)\n";
      });
  const MetricReport test = evaluate(result.params, config.hypers, bundle, config.eval);

  std::string log = format_training_log(result, config.hypers, config.train);
  log += "# dataset_fingerprint=" + fingerprint + '\n';
  log += prefixed(format_report(test), "# test ");

  std::string timing = "epoch\twall_seconds\n";
  for (const EpochRecord& r : result.log) {
    timing += std::to_string(r.epoch) + '\t' + fixed(r.wall_seconds, 6) + '\n';
  }

  Checkpoint ckpt{config.hypers, model_shape(config.hypers, bundle), result.params,
                  fingerprint, last_lines(log, 12)};
  make_dir(dir);
  save_checkpoint(dir / kCheckpointFile, ckpt);
  write_file_atomic(dir / kTrainLogFile, log);
  write_file_atomic(dir / kTimingFile, timing);

  out << "best_epoch=" << result.best_epoch << " epochs_run=" << result.log.size() << '\n'
      << format_metric_table({{"socialgcn", test}})
      << "wrote " << (dir / kCheckpointFile).string() << '\n';
}

MetricReport cmd_evaluate(const RunConfig& config, const std::filesystem::path& checkpoint,
                          bool allow_mismatch, std::ostream& out) {
  config.validate();
  const std::filesystem::path dir = require_output_dir(config);
  const Loaded l = load_for_inference(config, checkpoint, allow_mismatch);
  const HyperParams& hypers = l.checkpoint.hypers;
  const MetricReport report = evaluate(l.checkpoint.params, hypers, l.bundle, config.eval);

  const std::map<std::string, std::string> metadata{
      {"checkpoint", checkpoint.string()},
      {"checkpoint_fingerprint", l.checkpoint.dataset_fingerprint},
      {"dataset_fingerprint", l.fingerprint},
      {"fingerprint_match",
       l.fingerprint == l.checkpoint.dataset_fingerprint ? "true" : "false"},
      {"workers", std::to_string(config.eval.workers)},
      {"depth", std::to_string(hypers.depth)},
      {"mode", to_string(hypers.feature_mode)},
  };
  const std::string table = format_metric_table({{"socialgcn", report}});
  make_dir(dir);
  write_file_atomic(dir / kReportFile, format_report(report, metadata));
  write_file_atomic(dir / kMetricsFile, table);
  out << table;
  return report;
}

void cmd_predict(const RunConfig& config, const std::filesystem::path& checkpoint, Id user,
                 std::size_t top_n, bool allow_mismatch, std::ostream& out) {
  config.validate();
  const Loaded l = load_for_inference(config, checkpoint, allow_mismatch);
  if (user >= l.bundle.num_users()) {
    throw DataError("unknown user id " + std::to_string(user) + " (valid: 0.." +
                    std::to_string(l.bundle.num_users()) + ")");
  }
  if (top_n == 0) return;

  std::vector<Id> candidates;
  for (Id i = 0; i < l.bundle.num_items(); ++i) {
    if (!l.bundle.train.contains(user, i)) candidates.push_back(i);
  }
  if (candidates.empty()) {
    out << "# user " << user << " has no items outside the training positives\n";
    return;
  }
  const std::vector<ScoredItem> scored =
      score_all_items(l.checkpoint.params, l.checkpoint.hypers, l.bundle, user, candidates);
  std::vector<double> score_of(l.bundle.num_items(), 0.0);
  for (const ScoredItem& s : scored) score_of[s.item] = s.score;
  const std::vector<Id> ranked = rank_items(scored);
  const std::size_t shown = std::min(top_n, ranked.size());
  for (std::size_t k = 0; k < shown; ++k) {
    out << ranked[k] << '\t' << format_double(score_of[ranked[k]]) << '\n';
  }
}

void cmd_synth(const SyntheticSpec& spec, const std::filesystem::path& out_dir,
               std::ostream& out) {
  const SyntheticData data = generate_synthetic_data(spec);
  std::ostringstream interactions, social, users, items;
  write_interactions(interactions, data.interactions);
  write_social(social, data.social);
  write_features(users, data.user_features);
  write_features(items, data.item_features);

  make_dir(out_dir);
  write_file_atomic(out_dir / "interactions.tsv", interactions.str());
  write_file_atomic(out_dir / "social.tsv", social.str());
  write_file_atomic(out_dir / "user_features.tsv", users.str());
  write_file_atomic(out_dir / "item_features.tsv", items.str());

  const double m = static_cast<double>(data.interactions.num_users());
  const double n = static_cast<double>(data.interactions.num_items());
  const double ratings = static_cast<double>(data.interactions.num_edges());
  const double links = static_cast<double>(data.social.num_edges());
  out << "Users\t" << data.interactions.num_users() << '\n'
      << "Items\t" << data.interactions.num_items() << '\n'
      << "Ratings\t" << data.interactions.num_edges() << '\n'
      << "Links\t" << data.social.num_edges() << '\n'
      << "Link Density\t" << fixed(100.0 * links / (m * m), 3) << "%\n"
      << "Rating Density\t" << fixed(100.0 * ratings / (m * n), 3) << "%\n";
}

void cmd_ablate(const RunConfig& config, std::ostream& out) {
  config.validate();
  const std::filesystem::path dir = require_output_dir(config);
  const DatasetBundle bundle = load_bundle(config);
  const AblationTable table =
      run_ablation(bundle, config.hypers, config.train, config.eval, config.variants);

  std::string text;
  for (std::size_t n : config.eval.cutoffs) {
    text += "# N=" + std::to_string(n) + '\n' + format_ablation_table(table, n);
  }
  make_dir(dir);
  write_file_atomic(dir / kAblationFile, text);
  out << text;
}

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kConfig:
      return 2;
    case ErrorCategory::kData:
      return 3;
    case ErrorCategory::kNumeric:
      return 4;
    case ErrorCategory::kCheckpoint:
      return 5;
    case ErrorCategory::kShape:
      return 6;
  }
  return 1;
}

}  // namespace sgcn::cli
