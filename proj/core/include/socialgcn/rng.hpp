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

#ifndef SOCIALGCN_RNG_HPP_
#define SOCIALGCN_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace sgcn {

using Rng = std::mt19937_64;

// Independent, reproducible streams keyed by (seed, purpose, index...).
inline Rng make_rng(std::initializer_list<std::uint64_t> key) {
  std::vector<std::uint32_t> words;
  words.reserve(key.size() * 2);
  for (std::uint64_t k : key) {
    words.push_back(static_cast<std::uint32_t>(k & 0xffffffffu));
    words.push_back(static_cast<std::uint32_t>(k >> 32));
  }
  std::seed_seq mixed(words.begin(), words.end());
  return Rng(mixed);
}

// Stream tags, so that e.g. epoch 3 of the sampler never collides with
// repetition 3 of the evaluator.
enum StreamTag : std::uint64_t {
  kSplitStream = 0x5350,
  kSyntheticStream = 0x5359,
  kInitStream = 0x494e,
  kSamplerStream = 0x5341,
  kShuffleStream = 0x5348,
  kEvalStream = 0x4556,
  kCheckStream = 0x434b,
};

}  // namespace sgcn

#endif  // SOCIALGCN_RNG_HPP_
