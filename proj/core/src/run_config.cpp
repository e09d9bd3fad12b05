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


#include "socialgcn/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "socialgcn/errors.hpp"
#include "socialgcn/split.hpp"
#include "socialgcn/tsv_io.hpp"

namespace sgcn {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t to_u64(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw ConfigError("key '" + key + "': expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError("key '" + key + "': expected a finite number, got '" + text + "'");
  }
  return v;
}

std::vector<std::size_t> to_size_list(const std::string& key, const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    out.push_back(to_u64(key, std::string(trim(part))));
  }
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

std::filesystem::path resolve(const std::string& text, const std::filesystem::path& base) {
  if (text.empty()) return {};
  std::filesystem::path p(text);
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

void require_file(const std::filesystem::path& path, const char* key) {
  if (path.empty()) throw ConfigError(std::string("missing required key '") + key + "'");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw ConfigError(std::string(key) + " file not found: " + path.string());
  }
}

void read_hypers(const KeyValues& kv, HyperParams& h) {
  h.dim = kv.get_size("dim", h.dim);
  h.free_dim = kv.get_size("free_dim", h.free_dim);
  h.depth = kv.get_size("depth", h.depth);
  h.feature_mode = parse_feature_mode(kv.get_string("mode", to_string(h.feature_mode)));
  h.aggregator = parse_aggregator(kv.get_string("aggregator", to_string(h.aggregator)));
  h.use_bias = kv.get_bool("bias", h.use_bias);
  h.pin_user_free = kv.get_bool("pin_user_free", h.pin_user_free);
}

}  // namespace

void KeyValues::set(const std::string& key, std::string value) {
  if (!values_.emplace(key, std::move(value)).second) {
    throw ConfigError("duplicate key '" + key + "'");
  }
}

bool KeyValues::has(const std::string& key) const { return values_.count(key) != 0; }

const std::string& KeyValues::lookup(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing required key '" + key + "'");
  used_.insert(key);
  return it->second;
}

std::string KeyValues::get_string(const std::string& key) const { return lookup(key); }
std::string KeyValues::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? lookup(key) : fallback;
}
std::size_t KeyValues::get_size(const std::string& key) const {
  return static_cast<std::size_t>(to_u64(key, lookup(key)));
}
std::size_t KeyValues::get_size(const std::string& key, std::size_t fallback) const {
  return has(key) ? get_size(key) : fallback;
}
std::uint64_t KeyValues::get_u64(const std::string& key, std::uint64_t fallback) const {
  return has(key) ? to_u64(key, lookup(key)) : fallback;
}
double KeyValues::get_double(const std::string& key) const {
  return to_double(key, lookup(key));
}
double KeyValues::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}
bool KeyValues::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string& v = lookup(key);
  if (v == "true" || v == "on" || v == "1") return true;
  if (v == "false" || v == "off" || v == "0") return false;
  throw ConfigError("key '" + key + "': expected true/false, got '" + v + "'");
}

void KeyValues::reject_unused() const {
  for (const auto& [key, value] : values_) {
    if (!used_.count(key)) throw ConfigError("unknown key '" + key + "'");
  }
}

KeyValues parse_key_values(std::string_view text, const std::string& source) {
  KeyValues kv;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ConfigError(where + "expected key=value");
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError(where + "empty key");
    try {
      kv.set(key, std::string(trim(line.substr(eq + 1))));
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  return kv;
}

std::string hyperparams_to_text(const HyperParams& h) {
  std::ostringstream out;
  out << "dim=" << h.dim << "\nfree_dim=" << h.free_dim << "\ndepth=" << h.depth
      << "\nmode=" << to_string(h.feature_mode) << "\naggregator=" << to_string(h.aggregator)
      << "\nbias=" << bool_text(h.use_bias) << "\npin_user_free=" << bool_text(h.pin_user_free)
      << '\n';
  return out.str();
}

HyperParams hyperparams_from_text(const std::string& text) {
  const KeyValues kv = parse_key_values(text, "hyperparameters");
  HyperParams h;
  for (const char* key : {"dim", "free_dim", "depth", "mode", "aggregator", "bias", "pin_user_free"}) {
    if (!kv.has(key)) throw ConfigError(std::string("missing required key '") + key + "'");
  }
  read_hypers(kv, h);
  kv.reject_unused();
  h.validate();
  return h;
}

LossForm parse_loss_form(const std::string& text) {
  if (text == "bpr") return LossForm::kBpr;
  if (text == "literal_sigmoid") return LossForm::kLiteralSigmoid;
  throw ConfigError("unknown loss '" + text + "' (bpr|literal_sigmoid)");
}

void RunConfig::propagate() {
  train.seed = seed;
  eval.seed = seed;
  train.workers = workers;
  eval.workers = workers;
}

void RunConfig::validate() const {
  hypers.validate();
  train.validate();
  eval.validate();
  if (workers == 0) throw ConfigError("workers must be positive");
  if (variants.empty()) throw ConfigError("variant list is empty");
  for (double f : {data.test_fraction, data.validation_fraction}) {
    if (!(f > 0.0 && f < 1.0)) throw ConfigError("split fractions must lie in (0, 1)");
  }
  if (data.synthetic) return;
  require_file(data.interactions, "interactions");
  require_file(data.social, "social");
  if (hypers.feature_mode == FeatureMode::kWithFeatures) {
    require_file(data.user_features, "user_features");
    require_file(data.item_features, "item_features");
  }
}

std::string RunConfig::to_text() const {
  const SyntheticSpec& s = data.synthetic_spec;
  std::ostringstream out;
  out << "# data\n"
      << "data=" << (data.synthetic ? "synthetic" : "files") << '\n'
      << "interactions=" << data.interactions.string() << '\n'
      << "social=" << data.social.string() << '\n'
      << "user_features=" << data.user_features.string() << '\n'
      << "item_features=" << data.item_features.string() << '\n'
      << "synth_users=" << s.users << "\nsynth_items=" << s.items
      << "\nsynth_dim_user=" << s.dim_user << "\nsynth_dim_item=" << s.dim_item
      << "\nsynth_homophily=" << format_double(s.homophily)
      << "\nsynth_density=" << format_double(s.density) << "\nsynth_seed=" << s.seed
      << "\nsynth_clusters=" << s.clusters << "\nsynth_links=" << s.links_per_user
      << "\nsynth_taste_purity=" << format_double(s.taste_purity)
      << "\nsynth_feature_noise=" << format_double(s.feature_noise) << '\n'
      << "filter=" << bool_text(data.filter) << '\n'
      << "min_ratings=" << data.thresholds.min_ratings << '\n'
      << "min_links=" << data.thresholds.min_links << '\n'
      << "min_item_degree=" << data.thresholds.min_item_degree << '\n'
      << "test_fraction=" << format_double(data.test_fraction) << '\n'
      << "validation_fraction=" << format_double(data.validation_fraction) << '\n'
      << "# model\n"
      << hyperparams_to_text(hypers)
      << "# training\n"
      << "learning_rate=" << format_double(train.learning_rate) << '\n'
      << "batch_size=" << train.batch_size << '\n'
      << "negatives=" << train.negatives_per_positive << '\n'
      << "lambda=" << format_double(train.lambda_reg) << '\n'
      << "max_epochs=" << train.max_epochs << '\n'
      << "patience=" << train.early_stop_patience << '\n'
      << "loss=" << to_string(train.loss_form) << '\n'
      << "adam_beta1=" << format_double(train.adam.beta1) << '\n'
      << "adam_beta2=" << format_double(train.adam.beta2) << '\n'
      << "adam_epsilon=" << format_double(train.adam.epsilon) << '\n'
      << "validation_negatives=" << train.validation_negatives << '\n'
      << "# evaluation\n"
      << "eval_n=" << join_sizes(eval.cutoffs) << '\n'
      << "eval_negatives=" << eval.num_negatives << '\n'
      << "eval_repetitions=" << eval.repetitions << '\n'
      << "eval_split=" << to_string(eval.split) << '\n'
      << "# run\n"
      << "seed=" << seed << '\n'
      << "workers=" << workers << '\n'
      << "output_dir=" << output_dir.string() << '\n'
      << "variants=";
  for (std::size_t k = 0; k < variants.size(); ++k) {
    out << (k ? "," : "") << variant_name(variants[k]);
  }
  out << '\n';
  return out.str();
}

RunConfig parse_run_config(std::string_view text, const std::filesystem::path& base_dir,
                           const std::string& source) {
  const KeyValues kv = parse_key_values(text, source);
  RunConfig c;
  DataConfig& d = c.data;
  const std::string kind = kv.get_string("data", "files");
  if (kind != "files" && kind != "synthetic") {
    throw ConfigError("key 'data': expected files or synthetic, got '" + kind + "'");
  }
  d.synthetic = kind == "synthetic";
  d.interactions = resolve(kv.get_string("interactions", ""), base_dir);
  d.social = resolve(kv.get_string("social", ""), base_dir);
  d.user_features = resolve(kv.get_string("user_features", ""), base_dir);
  d.item_features = resolve(kv.get_string("item_features", ""), base_dir);

  SyntheticSpec& s = d.synthetic_spec;
  s.users = kv.get_size("synth_users", s.users);
  s.items = kv.get_size("synth_items", s.items);
  s.dim_user = kv.get_size("synth_dim_user", s.dim_user);
  s.dim_item = kv.get_size("synth_dim_item", s.dim_item);
  s.homophily = kv.get_double("synth_homophily", s.homophily);
  s.density = kv.get_double("synth_density", s.density);
  s.seed = kv.get_u64("synth_seed", s.seed);
  s.clusters = kv.get_size("synth_clusters", s.clusters);
  s.links_per_user = kv.get_size("synth_links", s.links_per_user);
  s.taste_purity = kv.get_double("synth_taste_purity", s.taste_purity);
  s.feature_noise = kv.get_double("synth_feature_noise", s.feature_noise);

  d.filter = kv.get_bool("filter", d.filter);
  d.thresholds.min_ratings = kv.get_size("min_ratings", d.thresholds.min_ratings);
  d.thresholds.min_links = kv.get_size("min_links", d.thresholds.min_links);
  d.thresholds.min_item_degree = kv.get_size("min_item_degree", d.thresholds.min_item_degree);
  d.test_fraction = kv.get_double("test_fraction", d.test_fraction);
  d.validation_fraction = kv.get_double("validation_fraction", d.validation_fraction);

  read_hypers(kv, c.hypers);

  TrainConfig& t = c.train;
  t.learning_rate = kv.get_double("learning_rate", t.learning_rate);
  t.batch_size = kv.get_size("batch_size", t.batch_size);
  t.negatives_per_positive = kv.get_size("negatives", t.negatives_per_positive);
  t.lambda_reg = kv.get_double("lambda", t.lambda_reg);
  t.max_epochs = kv.get_size("max_epochs", t.max_epochs);
  t.early_stop_patience = kv.get_size("patience", t.early_stop_patience);
  t.loss_form = parse_loss_form(kv.get_string("loss", to_string(t.loss_form)));
  t.adam.beta1 = kv.get_double("adam_beta1", t.adam.beta1);
  t.adam.beta2 = kv.get_double("adam_beta2", t.adam.beta2);
  t.adam.epsilon = kv.get_double("adam_epsilon", t.adam.epsilon);
  t.validation_negatives = kv.get_size("validation_negatives", t.validation_negatives);

  EvalConfig& e = c.eval;
  if (kv.has("eval_n")) e.cutoffs = to_size_list("eval_n", kv.get_string("eval_n"));
  e.num_negatives = kv.get_size("eval_negatives", e.num_negatives);
  e.repetitions = kv.get_size("eval_repetitions", e.repetitions);
  const std::string split_name = kv.get_string("eval_split", to_string(e.split));
  if (split_name == "train") {
    e.split = EvalSplit::kTrain;
  } else if (split_name == "validation") {
    e.split = EvalSplit::kValidation;
  } else if (split_name == "test") {
    e.split = EvalSplit::kTest;
  } else {
    throw ConfigError("key 'eval_split': expected train, validation or test");
  }

  c.seed = kv.get_u64("seed", c.seed);
  c.workers = kv.get_size("workers", c.workers);
  c.output_dir = resolve(kv.get_string("output_dir", ""), base_dir);
  if (kv.has("variants")) {
    std::string list;
    for (char ch : kv.get_string("variants")) {
      if (ch != ' ' && ch != '\t') list += ch;
    }
    c.variants = parse_variant_list(list);
  }
  kv.reject_unused();
  c.propagate();
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_run_config(text, path.parent_path(), path.string());
}

DatasetBundle load_bundle(const RunConfig& config) {
  config.validate();
  const DataConfig& d = config.data;

  InteractionMatrix interactions;
  SocialGraph social;
  std::optional<FeatureTable> user_features;
  std::optional<FeatureTable> item_features;

  if (d.synthetic) {
    SyntheticData data = generate_synthetic_data(d.synthetic_spec);
    interactions = std::move(data.interactions);
    social = std::move(data.social);
    user_features = std::move(data.user_features);
    item_features = std::move(data.item_features);
  } else {
    interactions = load_interactions(d.interactions);
    social = load_social(d.social, interactions.num_users());
    if (social.num_users() > interactions.num_users()) {
      interactions = InteractionMatrix(social.num_users(), interactions.num_items(),
                                       interactions.edges());
    }
    if (!d.user_features.empty()) {
      user_features = load_features(d.user_features, interactions.num_users());
    }
    if (!d.item_features.empty()) {
      item_features = load_features(d.item_features, interactions.num_items());
    }
  }

  if (d.filter) {
    FilterResult f = preprocess_filter(interactions, social, d.thresholds);
    if (user_features) {
      user_features = user_features->remapped(f.user_map, f.interactions.num_users());
    }
    if (item_features) {
      item_features = item_features->remapped(f.item_map, f.interactions.num_items());
    }
    interactions = std::move(f.interactions);
    social = std::move(f.social);
  }

  DatasetBundle bundle =
      split(interactions, SplitConfig{d.test_fraction, d.validation_fraction, config.seed});
  bundle.social = std::move(social);
  bundle.user_features = std::move(user_features);
  bundle.item_features = std::move(item_features);
  bundle.validate();
  return bundle;
}

}  // namespace sgcn
