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


#ifndef SOCIALGCN_TOOLS_COMMANDS_HPP_
#define SOCIALGCN_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "socialgcn/dataset.hpp"
#include "socialgcn/errors.hpp"
#include "socialgcn/evaluation.hpp"
#include "socialgcn/run_config.hpp"
#include "socialgcn/synthetic.hpp"

namespace sgcn::cli {

// Command-line values that take precedence over the config file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> dim;
  std::optional<FeatureMode> mode;
  std::optional<std::vector<std::size_t>> cutoffs;
  std::optional<std::size_t> negatives;
  std::optional<std::size_t> repetitions;
};

// dim also sets free_dim; featureless mode forces free_dim = dim.
void apply_overrides(RunConfig& config, const Overrides& overrides);

inline constexpr const char* kCheckpointFile = "checkpoint.bin";
inline constexpr const char* kTrainLogFile = "train_log.tsv";
inline constexpr const char* kTimingFile = "train_timing.tsv";
inline constexpr const char* kReportFile = "report.txt";
inline constexpr const char* kMetricsFile = "metrics.tsv";
inline constexpr const char* kAblationFile = "ablation.tsv";

// Each command computes everything first and only then writes its
// artifacts (atomically) under config.output_dir.
void cmd_train(const RunConfig& config, std::ostream& out);
MetricReport cmd_evaluate(const RunConfig& config, const std::filesystem::path& checkpoint,
                          bool allow_mismatch, std::ostream& out);
void cmd_predict(const RunConfig& config, const std::filesystem::path& checkpoint, Id user,
                 std::size_t top_n, bool allow_mismatch, std::ostream& out);
void cmd_synth(const SyntheticSpec& spec, const std::filesystem::path& out_dir,
               std::ostream& out);
void cmd_ablate(const RunConfig& config, std::ostream& out);

// 0 success, 1 unexpected failure, 2 config, 3 data, 4 numeric,
// 5 checkpoint, 6 shape.
int exit_code(ErrorCategory category);

// Full command-line entry point; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgcn::cli

#endif  // SOCIALGCN_TOOLS_COMMANDS_HPP_
