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

#ifndef SOCIALGCN_ERRORS_HPP_
#define SOCIALGCN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sgcn {

// Broad failure categories; the CLI maps each one to a distinct exit code.
enum class ErrorCategory { kConfig, kData, kNumeric, kCheckpoint, kShape };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCategory::kConfig, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what)
      : Error(ErrorCategory::kData, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what)
      : Error(ErrorCategory::kNumeric, what) {}
};

class CheckpointError : public Error {
 public:
  explicit CheckpointError(const std::string& what)
      : Error(ErrorCategory::kCheckpoint, what) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what)
      : Error(ErrorCategory::kShape, what) {}
};

const char* category_name(ErrorCategory category) noexcept;

}  // namespace sgcn

#endif  // SOCIALGCN_ERRORS_HPP_
