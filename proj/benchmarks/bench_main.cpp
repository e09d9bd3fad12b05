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


#include <benchmark/benchmark.h>

#include "socialgcn/evaluation.hpp"
#include "socialgcn/gradients.hpp"
#include "socialgcn/model.hpp"
#include "socialgcn/params.hpp"
#include "socialgcn/sampling.hpp"
#include "socialgcn/synthetic.hpp"

namespace {

struct Fixture {
  sgcn::DatasetBundle bundle;
  sgcn::HyperParams hypers;
  sgcn::ModelParams params;

  explicit Fixture(std::size_t users, std::size_t depth = 2) {
    sgcn::SyntheticSpec spec;
    spec.users = users;
    spec.items = users * 4 / 5;
    bundle = sgcn::generate_synthetic(spec);
    hypers.depth = depth;
    params = sgcn::init_params(hypers, sgcn::model_shape(hypers, bundle), 1);
  }
};

void BM_ForwardPass(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgcn::compute_embeddings(f.params, f.hypers, f.bundle));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ForwardPass)->Args({200, 1})->Args({200, 2})->Args({1000, 2});

void BM_BatchGradients(benchmark::State& state) {
  Fixture f(500);
  const auto pairs = sgcn::sample_pairs(f.bundle.train, 5, 1, 0).pairs;
  const std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(state.range(0)),
                                                  pairs.size());
  const std::span<const sgcn::PairwiseSample> span(pairs.data(), batch);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgcn::loss_and_gradients(f.params, f.hypers, f.bundle, span));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(batch));
}
BENCHMARK(BM_BatchGradients)->Arg(64)->Arg(512);

void BM_Evaluate(benchmark::State& state) {
  Fixture f(500);
  sgcn::EvalConfig config;
  config.repetitions = 1;
  config.num_negatives = 100;
  config.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgcn::evaluate(f.params, f.hypers, f.bundle, config));
  }
}
BENCHMARK(BM_Evaluate)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
