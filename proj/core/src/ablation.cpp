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

#include "socialgcn/ablation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "socialgcn/errors.hpp"

namespace sgcn {
namespace {

constexpr AblationVariant kAllVariants[] = {
    AblationVariant::kFull, AblationVariant::kOneLayer, AblationVariant::kFeaturelessDeep,
    AblationVariant::kFeaturelessShallow, AblationVariant::kNoUserFree};

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

const char* variant_name(AblationVariant variant) {
  switch (variant) {
    case AblationVariant::kFull: return "full";
    case AblationVariant::kOneLayer: return "k1";
    case AblationVariant::kFeaturelessDeep: return "featureless_k2";
    case AblationVariant::kFeaturelessShallow: return "featureless_k1";
    case AblationVariant::kNoUserFree: return "p0";
  }
  return "full";
}

AblationVariant parse_variant(const std::string& name) {
  for (AblationVariant v : kAllVariants) {
    if (name == variant_name(v)) return v;
  }
  std::string valid;
  for (AblationVariant v : kAllVariants) {
    if (!valid.empty()) valid += ", ";
    valid += variant_name(v);
  }
  throw ConfigError("unknown ablation variant '" + name + "' (valid: " + valid + ")");
}

std::vector<AblationVariant> parse_variant_list(const std::string& comma_separated) {
  std::vector<AblationVariant> out;
  std::stringstream in(comma_separated);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty()) out.push_back(parse_variant(name));
  }
  if (out.empty()) throw ConfigError("variant list is empty");
  return out;
}

HyperParams apply_variant(HyperParams base, AblationVariant variant) {
  switch (variant) {
    case AblationVariant::kFull:
      break;
    case AblationVariant::kOneLayer:
      base.depth = 1;
      break;
    case AblationVariant::kFeaturelessDeep:
    case AblationVariant::kFeaturelessShallow:
      base.feature_mode = FeatureMode::kFeatureless;
      base.free_dim = base.dim;
      base.depth = variant == AblationVariant::kFeaturelessDeep ? 2 : 1;
      break;
    case AblationVariant::kNoUserFree:
      base.pin_user_free = true;
      break;
  }
  return base;
}

AblationTable run_ablation(const DatasetBundle& bundle, const HyperParams& base_hypers,
                           const TrainConfig& train_config, const EvalConfig& eval_config,
                           const std::vector<AblationVariant>& variants) {
  std::vector<AblationVariant> order{AblationVariant::kFull};
  for (AblationVariant v : variants) {
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  }
  AblationTable table;
  for (AblationVariant v : order) {
    AblationRow row;
    row.name = variant_name(v);
    row.hypers = apply_variant(base_hypers, v);
    TrainResult trained = train(bundle, row.hypers, train_config);
    row.report = evaluate(trained.params, row.hypers, bundle, eval_config);
    row.trainable_parameters = trainable_parameter_count(trained.params, row.hypers);
    row.best_epoch = trained.best_epoch;
    table.rows.push_back(std::move(row));
  }
  return table;
}

double relative_change_percent(double value, double reference) {
  if (reference == 0.0) return value == 0.0 ? 0.0 : INFINITY;
  return 100.0 * (value - reference) / reference;
}

std::string format_percent(double percent) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f%%", percent);
  std::string s = buf;
  if (s == "-0.00%") s = "0.00%";
  return s;
}

std::string format_ablation_table(const std::vector<AblationLine>& lines,
                                  std::size_t cutoff) {
  std::ostringstream out;
  out << "model\tHR@" << cutoff << "\tImprove.\tNDCG@" << cutoff << "\tImprove.\n";
  if (lines.empty()) return out.str();
  const AblationLine& reference = lines.front();
  for (const AblationLine& l : lines) {
    out << l.name << '\t' << fixed4(l.hr) << '\t'
        << format_percent(relative_change_percent(l.hr, reference.hr)) << '\t'
        << fixed4(l.ndcg) << '\t'
        << format_percent(relative_change_percent(l.ndcg, reference.ndcg)) << '\n';
  }
  return out.str();
}

std::string format_ablation_table(const AblationTable& table, std::size_t cutoff) {
  std::vector<AblationLine> lines;
  for (const AblationRow& row : table.rows) {
    lines.push_back({row.name, row.report.hr(cutoff), row.report.ndcg(cutoff)});
  }
  return format_ablation_table(lines, cutoff);
}

}  // namespace sgcn
