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

#include "socialgcn/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "socialgcn/errors.hpp"
#include "socialgcn/metrics.hpp"
#include "socialgcn/model.hpp"
#include "socialgcn/rng.hpp"
#include "socialgcn/tsv_io.hpp"

namespace sgcn {
namespace {

const InteractionMatrix& positives_of(const DatasetBundle& bundle, EvalSplit split) {
  switch (split) {
    case EvalSplit::kTrain: return bundle.train;
    case EvalSplit::kValidation: return bundle.validation;
    case EvalSplit::kTest: return bundle.test;
  }
  return bundle.test;
}

std::vector<Id> unrated_items(const DatasetBundle& bundle, Id user) {
  std::vector<Id> rated;
  for (const InteractionMatrix* m : {&bundle.train, &bundle.validation, &bundle.test}) {
    auto items = m->items_of(user);
    rated.insert(rated.end(), items.begin(), items.end());
  }
  std::sort(rated.begin(), rated.end());
  std::vector<Id> out;
  out.reserve(bundle.num_items() - std::min(rated.size(), bundle.num_items()));
  auto it = rated.begin();
  for (Id j = 0; j < bundle.num_items(); ++j) {
    while (it != rated.end() && *it < j) ++it;
    if (it == rated.end() || *it != j) out.push_back(j);
  }
  return out;
}

struct TaskScores {
  std::vector<double> hr;
  std::vector<double> ndcg;
};

TaskScores score_task(const RankingTask& task, const std::vector<std::size_t>& cutoffs,
                      const ScoreFn& score) {
  std::vector<double> values(task.candidates.size(), 0.0);
  score(task.user, task.candidates, values);
  std::vector<ScoredItem> scored;
  scored.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) scored.push_back({task.candidates[k], values[k]});
  const std::vector<Id> ranked = rank_items(scored);
  TaskScores out;
  for (std::size_t n : cutoffs) {
    out.hr.push_back(hit_ratio_at_n(ranked, task.positives, n));
    out.ndcg.push_back(ndcg_at_n(ranked, task.positives, n));
  }
  return out;
}

}  // namespace

const char* to_string(EvalSplit split) {
  switch (split) {
    case EvalSplit::kTrain: return "train";
    case EvalSplit::kValidation: return "validation";
    case EvalSplit::kTest: return "test";
  }
  return "test";
}

void EvalConfig::validate() const {
  if (cutoffs.empty()) throw ConfigError("evaluation needs at least one cutoff");
  for (std::size_t n : cutoffs) {
    if (n == 0) throw ConfigError("evaluation cutoffs must be positive");
  }
  if (repetitions == 0) throw ConfigError("evaluation needs at least one repetition");
  if (workers == 0) throw ConfigError("workers must be positive");
}

std::vector<RankingTask> build_tasks(const DatasetBundle& bundle, EvalSplit split,
                                     std::size_t num_negatives, std::uint64_t seed,
                                     std::size_t repetition) {
  const InteractionMatrix& source = positives_of(bundle, split);
  std::vector<RankingTask> tasks;
  for (Id a = 0; a < source.num_users(); ++a) {
    auto positives = source.items_of(a);
    if (positives.empty()) continue;
    RankingTask task;
    task.user = a;
    task.positives.assign(positives.begin(), positives.end());

    std::vector<Id> pool = unrated_items(bundle, a);
    if (pool.size() > num_negatives) {
      Rng rng = make_rng({seed, kEvalStream, repetition, a});
      for (std::size_t k = 0; k < num_negatives; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, pool.size() - 1);
        std::swap(pool[k], pool[pick(rng)]);
      }
      pool.resize(num_negatives);
      std::sort(pool.begin(), pool.end());
    }
    task.candidates = task.positives;
    task.candidates.insert(task.candidates.end(), pool.begin(), pool.end());
    tasks.push_back(std::move(task));
  }
  return tasks;
}

double MetricReport::hr(std::size_t cutoff) const {
  auto it = std::find(cutoffs.begin(), cutoffs.end(), cutoff);
  if (it == cutoffs.end()) throw ConfigError("no HR@" + std::to_string(cutoff) + " in report");
  return hr_mean[static_cast<std::size_t>(it - cutoffs.begin())];
}

double MetricReport::ndcg(std::size_t cutoff) const {
  auto it = std::find(cutoffs.begin(), cutoffs.end(), cutoff);
  if (it == cutoffs.end()) throw ConfigError("no NDCG@" + std::to_string(cutoff) + " in report");
  return ndcg_mean[static_cast<std::size_t>(it - cutoffs.begin())];
}

MetricReport evaluate_scores(const DatasetBundle& bundle, const EvalConfig& config,
                             const ScoreFn& score) {
  config.validate();
  if (positives_of(bundle, config.split).empty()) {
    throw DataError(std::string("empty ") + to_string(config.split) + " split");
  }
  const std::size_t c = config.cutoffs.size();
  MetricReport report;
  report.cutoffs = config.cutoffs;
  report.repetitions = config.repetitions;
  report.num_negatives = config.num_negatives;
  report.seed = config.seed;
  report.split = config.split;
  report.hr_mean.assign(c, 0.0);
  report.ndcg_mean.assign(c, 0.0);

  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    const auto tasks =
        build_tasks(bundle, config.split, config.num_negatives, config.seed, rep);
    std::vector<TaskScores> results(tasks.size());
    const std::size_t workers = std::min<std::size_t>(config.workers, std::max<std::size_t>(tasks.size(), 1));
    if (workers <= 1) {
      for (std::size_t t = 0; t < tasks.size(); ++t) {
        results[t] = score_task(tasks[t], config.cutoffs, score);
      }
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t t = w; t < tasks.size(); t += workers) {
            results[t] = score_task(tasks[t], config.cutoffs, score);
          }
        });
      }
    }

    // Ordered reduction: identical for every worker count.
    std::vector<double> hr(c, 0.0), ndcg(c, 0.0);
    for (const TaskScores& r : results) {
      for (std::size_t k = 0; k < c; ++k) {
        hr[k] += r.hr[k];
        ndcg[k] += r.ndcg[k];
      }
    }
    for (std::size_t k = 0; k < c; ++k) {
      hr[k] /= static_cast<double>(results.size());
      ndcg[k] /= static_cast<double>(results.size());
      report.hr_mean[k] += hr[k];
      report.ndcg_mean[k] += ndcg[k];
    }
    report.num_tasks = tasks.size();
    report.hr_per_repetition.push_back(std::move(hr));
    report.ndcg_per_repetition.push_back(std::move(ndcg));
  }
  for (std::size_t k = 0; k < c; ++k) {
    report.hr_mean[k] /= static_cast<double>(config.repetitions);
    report.ndcg_mean[k] /= static_cast<double>(config.repetitions);
  }
  return report;
}

MetricReport evaluate(const ModelParams& params, const HyperParams& hypers,
                      const DatasetBundle& bundle, const EvalConfig& config) {
  const Embeddings embeddings = compute_embeddings(params, hypers, bundle);
  return evaluate_scores(bundle, config,
                         [&](Id user, std::span<const Id> candidates, std::span<double> out) {
                           const auto scored = score_candidates(embeddings, user, candidates);
                           for (std::size_t k = 0; k < scored.size(); ++k) {
                             out[k] = scored[k].score;
                           }
                         });
}

std::string format_report(const MetricReport& report,
                          const std::map<std::string, std::string>& metadata) {
  std::ostringstream out;
  for (const auto& [key, value] : metadata) out << key << '=' << value << '\n';
  out << "split=" << to_string(report.split) << '\n';
  out << "hr_convention=per_user_recall\n";
  out << "tie_break=ascending_item_id\n";
  out << "repetitions=" << report.repetitions << '\n';
  out << "num_negatives=" << report.num_negatives << '\n';
  out << "seed=" << report.seed << '\n';
  out << "tasks=" << report.num_tasks << '\n';
  for (std::size_t k = 0; k < report.cutoffs.size(); ++k) {
    out << "hr@" << report.cutoffs[k] << '=' << format_double(report.hr_mean[k]) << '\n';
    out << "ndcg@" << report.cutoffs[k] << '=' << format_double(report.ndcg_mean[k]) << '\n';
  }
  for (std::size_t r = 0; r < report.hr_per_repetition.size(); ++r) {
    for (std::size_t k = 0; k < report.cutoffs.size(); ++k) {
      out << "rep" << r << ".hr@" << report.cutoffs[k] << '='
          << format_double(report.hr_per_repetition[r][k]) << '\n';
      out << "rep" << r << ".ndcg@" << report.cutoffs[k] << '='
          << format_double(report.ndcg_per_repetition[r][k]) << '\n';
    }
  }
  return out.str();
}

std::string format_metric_table(
    const std::vector<std::pair<std::string, MetricReport>>& rows) {
  std::ostringstream out;
  if (rows.empty()) return {};
  const auto& cutoffs = rows.front().second.cutoffs;
  out << "model";
  for (std::size_t n : cutoffs) out << "\tHR@" << n;
  for (std::size_t n : cutoffs) out << "\tNDCG@" << n;
  out << '\n';
  char buf[32];
  for (const auto& [name, report] : rows) {
    out << name;
    for (double v : report.hr_mean) {
      std::snprintf(buf, sizeof(buf), "%.4f", v);
      out << '\t' << buf;
    }
    for (double v : report.ndcg_mean) {
      std::snprintf(buf, sizeof(buf), "%.4f", v);
      out << '\t' << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sgcn
