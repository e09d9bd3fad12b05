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


#include <exception>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace sgcn::cli {
namespace {

struct Flags {
  std::string config;
  Overrides overrides;
  std::string mode;
  std::string cutoffs;
};

void add_run_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "run configuration (key=value file)")->required();
  cmd->add_option("--seed", f.overrides.seed, "master seed");
  cmd->add_option("--workers", f.overrides.workers, "worker cap for evaluation");
  cmd->add_option("--k", f.overrides.depth, "diffusion depth K");
  cmd->add_option("--dim", f.overrides.dim, "embedding dimension D (and L)");
  cmd->add_option("--mode", f.mode, "features | featureless");
  cmd->add_option("--n", f.cutoffs, "comma-separated cutoffs, e.g. 5,10,15");
  cmd->add_option("--negatives", f.overrides.negatives, "sampled negatives per ranking task");
  cmd->add_option("--repetitions", f.overrides.repetitions, "evaluation repetitions");
}

RunConfig resolve_config(Flags& f) {
  RunConfig config = load_run_config(f.config);
  if (!f.mode.empty()) f.overrides.mode = parse_feature_mode(f.mode);
  if (!f.cutoffs.empty()) {
    std::vector<std::size_t> cutoffs;
    std::stringstream in(f.cutoffs);
    std::string part;
    while (std::getline(in, part, ',')) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(part, &used);
        if (used != part.size()) throw std::invalid_argument(part);
        cutoffs.push_back(static_cast<std::size_t>(v));
      } catch (const std::exception&) {
        throw ConfigError("--n: expected a comma-separated list of integers, got '" +
                          f.cutoffs + "'");
      }
    }
    f.overrides.cutoffs = cutoffs;
  }
  apply_overrides(config, f.overrides);
  return config;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"SocialGCN social recommendation: train, evaluate, predict, ablate"};
  app.require_subcommand(1);

  Flags train_flags, eval_flags, predict_flags, ablate_flags;
  std::string checkpoint;
  bool allow_mismatch = false;
  std::uint32_t user = 0;
  std::size_t top_n = 10;
  SyntheticSpec spec;
  std::string synth_out;

  CLI::App* train_cmd = app.add_subcommand("train", "train a model and write a checkpoint");
  add_run_flags(train_cmd, train_flags);

  CLI::App* eval_cmd = app.add_subcommand("evaluate", "rank held-out items with a checkpoint");
  add_run_flags(eval_cmd, eval_flags);
  eval_cmd->add_option("--checkpoint", checkpoint, "checkpoint (default: <output_dir>/checkpoint.bin)");
  eval_cmd->add_flag("--allow-mismatch", allow_mismatch, "accept a different dataset fingerprint");

  CLI::App* predict_cmd = app.add_subcommand("predict", "top-N items for one user");
  add_run_flags(predict_cmd, predict_flags);
  predict_cmd->add_option("--checkpoint", checkpoint, "checkpoint (default: <output_dir>/checkpoint.bin)");
  predict_cmd->add_option("--user", user, "user id after filtering")->required();
  predict_cmd->add_option("--top", top_n, "number of items to list");
  predict_cmd->add_flag("--allow-mismatch", allow_mismatch, "accept a different dataset fingerprint");

  CLI::App* synth_cmd = app.add_subcommand("synth", "write a synthetic dataset");
  synth_cmd->add_option("--out", synth_out, "output directory")->required();
  synth_cmd->add_option("--users", spec.users);
  synth_cmd->add_option("--items", spec.items);
  synth_cmd->add_option("--dim-user", spec.dim_user);
  synth_cmd->add_option("--dim-item", spec.dim_item);
  synth_cmd->add_option("--homophily", spec.homophily);
  synth_cmd->add_option("--density", spec.density);
  synth_cmd->add_option("--seed", spec.seed);
  synth_cmd->add_option("--clusters", spec.clusters);
  synth_cmd->add_option("--links", spec.links_per_user, "follow edges per user");

  CLI::App* ablate_cmd = app.add_subcommand("ablate", "train and compare ablation variants");
  add_run_flags(ablate_cmd, ablate_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code(ErrorCategory::kConfig);
  }

  auto checkpoint_path = [&](const RunConfig& config) {
    return checkpoint.empty() ? config.output_dir / kCheckpointFile
                              : std::filesystem::path(checkpoint);
  };

  try {
    if (*train_cmd) {
      cmd_train(resolve_config(train_flags), out);
    } else if (*eval_cmd) {
      const RunConfig config = resolve_config(eval_flags);
      cmd_evaluate(config, checkpoint_path(config), allow_mismatch, out);
    } else if (*predict_cmd) {
      const RunConfig config = resolve_config(predict_flags);
      cmd_predict(config, checkpoint_path(config), user, top_n, allow_mismatch, out);
    } else if (*synth_cmd) {
      cmd_synth(spec, synth_out, out);
    } else if (*ablate_cmd) {
      cmd_ablate(resolve_config(ablate_flags), out);
    }
  } catch (const Error& e) {
    err << "error [" << category_name(e.category()) << "]: " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sgcn::cli
