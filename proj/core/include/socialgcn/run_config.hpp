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


#ifndef SOCIALGCN_RUN_CONFIG_HPP_
#define SOCIALGCN_RUN_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "socialgcn/ablation.hpp"
#include "socialgcn/dataset.hpp"
#include "socialgcn/evaluation.hpp"
#include "socialgcn/params.hpp"
#include "socialgcn/preprocess.hpp"
#include "socialgcn/synthetic.hpp"
#include "socialgcn/training.hpp"

namespace sgcn {

// Flat "key=value" text. Getters record which keys were read so that
// reject_unused() can flag typos. All failures throw ConfigError.
class KeyValues {
 public:
  void set(const std::string& key, std::string value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::size_t get_size(const std::string& key) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  void reject_unused() const;

 private:
  const std::string& lookup(const std::string& key) const;

  std::map<std::string, std::string> values_;
  mutable std::set<std::string> used_;
};

// Blank lines and '#' comments are skipped; whitespace around keys and
// values is trimmed; duplicate keys are rejected.
KeyValues parse_key_values(std::string_view text, const std::string& source);

std::string hyperparams_to_text(const HyperParams& hypers);
HyperParams hyperparams_from_text(const std::string& text);

LossForm parse_loss_form(const std::string& text);

struct DataConfig {
  bool synthetic = false;
  std::filesystem::path interactions;
  std::filesystem::path social;
  std::filesystem::path user_features;
  std::filesystem::path item_features;
  SyntheticSpec synthetic_spec;
  bool filter = true;
  FilterThresholds thresholds;
  double test_fraction = 0.10;
  double validation_fraction = 0.10;

  friend bool operator==(const DataConfig&, const DataConfig&) = default;
};

struct RunConfig {
  DataConfig data;
  HyperParams hypers;
  TrainConfig train;
  EvalConfig eval;
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::vector<AblationVariant> variants{AblationVariant::kFull};

  // Copies seed and workers into the nested configs.
  void propagate();
  // Throws ConfigError: bad values, missing social file, feature paths
  // missing in with_features mode, data files that do not exist.
  void validate() const;
  std::string to_text() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Relative paths are resolved against base_dir.
RunConfig parse_run_config(std::string_view text, const std::filesystem::path& base_dir,
                           const std::string& source = "config");
RunConfig load_run_config(const std::filesystem::path& path);

// Load (or generate), optionally filter, split with the run seed, and attach
// the social graph and any features.
DatasetBundle load_bundle(const RunConfig& config);

}  // namespace sgcn

#endif  // SOCIALGCN_RUN_CONFIG_HPP_
