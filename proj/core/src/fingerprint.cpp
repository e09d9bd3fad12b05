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

#include "socialgcn/fingerprint.hpp"

#include <openssl/evp.h>

#include <sstream>

#include "socialgcn/errors.hpp"
#include "socialgcn/tsv_io.hpp"

namespace sgcn {

std::string canonical_bundle_text(const DatasetBundle& bundle) {
  std::ostringstream out;
  out << "[train]\n";
  write_interactions(out, bundle.train);
  out << "[validation]\n";
  write_interactions(out, bundle.validation);
  out << "[test]\n";
  write_interactions(out, bundle.test);
  out << "[social]\n";
  write_social(out, bundle.social);
  out << "[user_features]\n";
  if (bundle.user_features) write_features(out, *bundle.user_features);
  out << "[item_features]\n";
  if (bundle.item_features) write_features(out, *bundle.item_features);
  return out.str();
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw DataError("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::string dataset_fingerprint(const DatasetBundle& bundle) {
  return sha256_hex(canonical_bundle_text(bundle));
}

}  // namespace sgcn
