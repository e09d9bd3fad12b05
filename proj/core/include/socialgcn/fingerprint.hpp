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

#ifndef SOCIALGCN_FINGERPRINT_HPP_
#define SOCIALGCN_FINGERPRINT_HPP_

#include <string>
#include <string_view>

#include "socialgcn/dataset.hpp"

namespace sgcn {

// Canonical text form of a bundle: every split, the social graph and the
// feature tables in their TSV encodings, under section markers.
std::string canonical_bundle_text(const DatasetBundle& bundle);

// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);

std::string dataset_fingerprint(const DatasetBundle& bundle);

}  // namespace sgcn

#endif  // SOCIALGCN_FINGERPRINT_HPP_
