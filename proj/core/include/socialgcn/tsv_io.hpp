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

#ifndef SOCIALGCN_TSV_IO_HPP_
#define SOCIALGCN_TSV_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "socialgcn/dataset.hpp"

namespace sgcn {

// Text formats:
//   interactions  "user<TAB>item" per line
//   social        "follower<TAB>followee" per line (followee joins S_follower)
//   features      "id<TAB>v1,v2,...,vd" per line
// An optional first line "users=M items=N" (or "users=M" for social) fixes
// dimensions; otherwise they are 1 + the largest id seen. Lines starting
// with '#' and blank lines are ignored. Errors carry "<source>:<line>".

InteractionMatrix read_interactions(std::istream& in, const std::string& source);
SocialGraph read_social(std::istream& in, const std::string& source,
                        std::optional<std::size_t> num_users = std::nullopt);
FeatureTable read_features(std::istream& in, const std::string& source,
                           std::size_t expected_count);

InteractionMatrix load_interactions(const std::filesystem::path& path);
// num_users widens the graph when the file declares fewer users (isolated
// users at the tail have no edges to reveal them).
SocialGraph load_social(const std::filesystem::path& path,
                        std::optional<std::size_t> num_users = std::nullopt);
FeatureTable load_features(const std::filesystem::path& path,
                           std::size_t expected_count);

void write_interactions(std::ostream& out, const InteractionMatrix& m);
void write_social(std::ostream& out, const SocialGraph& g);
void write_features(std::ostream& out, const FeatureTable& t);

// Shortest round-trip decimal form of a double.
std::string format_double(double value);

// Writes through a sibling temp file and renames into place, so readers
// never observe a partial file.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

}  // namespace sgcn

#endif  // SOCIALGCN_TSV_IO_HPP_
