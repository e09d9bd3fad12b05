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

#ifndef SOCIALGCN_CHECKPOINT_HPP_
#define SOCIALGCN_CHECKPOINT_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "socialgcn/params.hpp"

namespace sgcn {

// Binary layout, all integers little-endian:
//   magic    8 bytes "SGCNCKPT"
//   version  u32
//   blocks   u32 length + UTF-8 text, in order: "hyperparameters",
//            "shape", "fingerprint", "log_tail" (text blocks are key=value
//            lines except fingerprint and log_tail)
//   tensors  u32 count, then per tensor:
//              u32 name length, name, u64 rows, u64 cols, u8 element type
//              (1 = float64), rows*cols IEEE-754 doubles in column-major order
//   end      4 bytes "END\n"
inline constexpr std::uint32_t kCheckpointVersion = 1;

struct Checkpoint {
  HyperParams hypers;
  ModelShape shape;
  ModelParams params;
  std::string dataset_fingerprint;
  std::string log_tail;
};

std::string serialize_checkpoint(const Checkpoint& checkpoint);

// Throws CheckpointError naming the block that failed (bad magic, version
// mismatch, truncation, shape disagreement with the recorded hypers).
Checkpoint parse_checkpoint(std::string_view bytes);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace sgcn

#endif  // SOCIALGCN_CHECKPOINT_HPP_
