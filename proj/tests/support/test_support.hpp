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


// Shared fixtures and independent reference implementations for tests.
#ifndef SOCIALGCN_TESTS_TEST_SUPPORT_HPP_
#define SOCIALGCN_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include "socialgcn/dataset.hpp"
#include "socialgcn/params.hpp"
#include "socialgcn/sampling.hpp"

namespace sgcn_test {

using sgcn::Aggregator;
using sgcn::DatasetBundle;
using sgcn::Edge;
using sgcn::FeatureMode;
using sgcn::FeatureTable;
using sgcn::HyperParams;
using sgcn::Id;
using sgcn::InteractionMatrix;
using sgcn::ModelParams;
using sgcn::PairwiseSample;
using sgcn::SocialGraph;

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("sgcn_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline Eigen::MatrixXd random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                     double scale = 0.5) {
  std::normal_distribution<double> n(0.0, scale);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] = n(rng);
  return m;
}

// A small random problem with a pairwise batch. User 0 follows nobody and
// user 1 has no training items; both appear in the batch.
struct TinyCase {
  HyperParams hypers;
  DatasetBundle bundle;
  ModelParams params;
  std::vector<PairwiseSample> batch;
};

struct TinySpec {
  std::size_t users = 7;
  std::size_t items = 6;
  std::size_t user_feature_dim = 3;
  std::size_t item_feature_dim = 2;
  std::size_t dim = 3;
  std::size_t free_dim = 3;
  std::size_t depth = 2;
  FeatureMode mode = FeatureMode::kWithFeatures;
  Aggregator aggregator = Aggregator::kAverage;
  bool use_bias = true;
  bool pin_user_free = false;
  std::size_t batch_size = 6;
};

inline TinyCase make_tiny_case(const TinySpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t m = spec.users;
  const std::size_t n = spec.items;
  std::bernoulli_distribution coin(0.4);

  std::vector<Edge> train;
  for (Id a = 0; a < m; ++a) {
    if (a == 1) continue;
    bool any = false;
    for (Id i = 0; i < n; ++i) {
      if (coin(rng)) {
        train.push_back({a, i});
        any = true;
      }
    }
    if (!any) train.push_back({a, static_cast<Id>(rng() % n)});
  }
  std::vector<Edge> follows;
  for (Id a = 1; a < m; ++a) {
    for (Id b = 0; b < m; ++b) {
      if (a != b && coin(rng)) follows.push_back({a, b});
    }
  }

  TinyCase c;
  c.hypers.dim = spec.dim;
  c.hypers.free_dim = spec.mode == FeatureMode::kFeatureless ? spec.dim : spec.free_dim;
  c.hypers.depth = spec.depth;
  c.hypers.feature_mode = spec.mode;
  c.hypers.aggregator = spec.aggregator;
  c.hypers.use_bias = spec.use_bias;
  c.hypers.pin_user_free = spec.pin_user_free;

  c.bundle.train = InteractionMatrix(m, n, train);
  c.bundle.validation = InteractionMatrix(m, n, {});
  c.bundle.test = InteractionMatrix(m, n, {});
  c.bundle.social = SocialGraph(m, follows);
  if (spec.mode == FeatureMode::kWithFeatures) {
    c.bundle.user_features = FeatureTable(random_matrix(spec.user_feature_dim, m, rng, 1.0));
    c.bundle.item_features = FeatureTable(random_matrix(spec.item_feature_dim, n, rng, 1.0));
  }

  const sgcn::ModelShape shape{m, n,
                               spec.mode == FeatureMode::kWithFeatures ? spec.user_feature_dim : 0,
                               spec.mode == FeatureMode::kWithFeatures ? spec.item_feature_dim : 0};
  c.params = ModelParams::zeros(c.hypers, shape);
  for (auto& t : c.params.tensors()) {
    *t.tensor = random_matrix(t.tensor->rows(), t.tensor->cols(), rng, 0.7);
  }
  if (spec.pin_user_free) c.params.user_free.setZero();

  c.batch.push_back({0, static_cast<Id>(rng() % n), static_cast<Id>(rng() % n)});
  c.batch.push_back({1, static_cast<Id>(rng() % n), static_cast<Id>(rng() % n)});
  while (c.batch.size() < spec.batch_size) {
    c.batch.push_back({static_cast<Id>(rng() % m), static_cast<Id>(rng() % n),
                       static_cast<Id>(rng() % n)});
  }
  return c;
}

// Loop-level forward pass written without the library's kernels.
struct OracleForward {
  std::vector<std::vector<double>> items;              // [i][d]
  std::vector<std::vector<std::vector<double>>> layers;  // [k][a][d]
  std::vector<std::vector<double>> users;              // [a][d]

  double score(Id a, Id i) const {
    double s = 0.0;
    for (std::size_t d = 0; d < users[a].size(); ++d) s += users[a][d] * items[i][d];
    return s;
  }
};

inline std::vector<double> oracle_affine_relu(const Eigen::MatrixXd& w, const Eigen::MatrixXd& b,
                                              const std::vector<double>& input) {
  std::vector<double> out(static_cast<std::size_t>(w.rows()), 0.0);
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    long double acc = b.size() ? b(r, 0) : 0.0;
    for (Eigen::Index c = 0; c < w.cols(); ++c) acc += w(r, c) * input[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc > 0 ? static_cast<double>(acc) : 0.0;
  }
  return out;
}

inline std::vector<double> column(const Eigen::MatrixXd& m, Eigen::Index c) {
  return std::vector<double>(m.col(c).data(), m.col(c).data() + m.rows());
}

inline OracleForward oracle_forward(const ModelParams& p, const HyperParams& h,
                                    const DatasetBundle& b) {
  const bool feats = h.feature_mode == FeatureMode::kWithFeatures;
  const std::size_t m = b.num_users();
  const std::size_t n = b.num_items();
  OracleForward f;
  for (Id i = 0; i < n; ++i) {
    std::vector<double> q = column(p.item_free, i);
    if (!feats) {
      f.items.push_back(q);
      continue;
    }
    std::vector<double> in = q;
    for (double y : column(b.item_features->values(), i)) in.push_back(y);
    f.items.push_back(oracle_affine_relu(p.item_transform, p.item_bias, in));
  }
  std::vector<std::vector<double>> h0;
  for (Id a = 0; a < m; ++a) {
    std::vector<double> pa = column(p.user_free, a);
    if (!feats) {
      h0.push_back(pa);
      continue;
    }
    std::vector<double> in = column(b.user_features->values(), a);
    in.insert(in.end(), pa.begin(), pa.end());
    h0.push_back(oracle_affine_relu(p.base_transform, p.base_bias, in));
  }
  f.layers.push_back(h0);
  const std::size_t dim = h.dim;
  for (std::size_t k = 0; k < h.depth; ++k) {
    const auto& prev = f.layers.back();
    std::vector<std::vector<double>> next;
    for (Id a = 0; a < m; ++a) {
      std::vector<double> agg(dim, 0.0);
      const auto nb = b.social.followees_of(a);
      for (std::size_t d = 0; d < dim; ++d) {
        if (nb.empty()) break;
        if (h.aggregator == Aggregator::kAverage) {
          double s = 0.0;
          for (Id x : nb) s += prev[x][d];
          agg[d] = s / static_cast<double>(nb.size());
        } else {
          double best = prev[nb[0]][d];
          for (Id x : nb) best = std::max(best, prev[x][d]);
          agg[d] = best;
        }
      }
      std::vector<double> in = agg;
      in.insert(in.end(), prev[a].begin(), prev[a].end());
      const Eigen::MatrixXd empty;
      next.push_back(oracle_affine_relu(p.conv_weight[k],
                                        h.use_bias ? p.conv_bias[k] : empty, in));
    }
    f.layers.push_back(next);
  }
  for (Id a = 0; a < m; ++a) {
    std::vector<double> u = f.layers.back()[a];
    const auto hist = b.train.items_of(a);
    for (std::size_t d = 0; d < dim; ++d) {
      double s = 0.0;
      for (Id i : hist) s += f.items[i][d];
      if (!hist.empty()) u[d] += s / static_cast<double>(hist.size());
    }
    f.users.push_back(u);
  }
  return f;
}

// Users whose h^K can depend on user `source`: those reaching it in at most
// `hops` follow steps (including itself).
inline std::set<Id> khop_dependents(const SocialGraph& g, Id source, std::size_t hops) {
  std::set<Id> reached{source};
  std::vector<Id> frontier{source};
  for (std::size_t step = 0; step < hops; ++step) {
    std::vector<Id> next;
    for (Id a = 0; a < g.num_users(); ++a) {
      if (reached.count(a)) continue;
      for (Id b : g.followees_of(a)) {
        if (std::find(frontier.begin(), frontier.end(), b) != frontier.end()) {
          next.push_back(a);
          break;
        }
      }
    }
    for (Id a : next) reached.insert(a);
    frontier = next;
  }
  return reached;
}

// From-definition metrics: sort by (score desc, id asc), read the top n.
struct OracleMetrics {
  double hr = 0.0;
  double ndcg = 0.0;
};

inline OracleMetrics oracle_metrics(const std::vector<std::pair<Id, double>>& scored,
                                    const std::set<Id>& positives, std::size_t n) {
  auto order = scored;
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  const std::size_t top = std::min(n, order.size());
  std::size_t hits = 0;
  double dcg = 0.0;
  for (std::size_t r = 0; r < top; ++r) {
    if (positives.count(order[r].first)) {
      ++hits;
      dcg += 1.0 / std::log2(static_cast<double>(r) + 2.0);
    }
  }
  double idcg = 0.0;
  for (std::size_t r = 0; r < std::min(n, positives.size()); ++r) {
    idcg += 1.0 / std::log2(static_cast<double>(r) + 2.0);
  }
  OracleMetrics out;
  out.hr = positives.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(positives.size());
  out.ndcg = idcg > 0.0 ? dcg / idcg : 0.0;
  return out;
}

}  // namespace sgcn_test

#endif  // SOCIALGCN_TESTS_TEST_SUPPORT_HPP_
