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

#ifndef SOCIALGCN_SPLIT_HPP_
#define SOCIALGCN_SPLIT_HPP_

#include <cstdint>

#include "socialgcn/dataset.hpp"

namespace sgcn {

struct SplitConfig {
  double test_fraction = 0.10;
  double validation_fraction_of_train = 0.10;
  std::uint64_t seed = 0;

  friend bool operator==(const SplitConfig&, const SplitConfig&) = default;
};

// Uniform edge-level split. |test| = floor(test_fraction * |E|) and
// |validation| = floor(validation_fraction * (|E| - |test|)); the remainder
// is train. The returned bundle has an empty social graph over the same
// users and no features. Throws DataError if the test split would be empty.
DatasetBundle split(const InteractionMatrix& interactions, const SplitConfig& config);

}  // namespace sgcn

#endif  // SOCIALGCN_SPLIT_HPP_
