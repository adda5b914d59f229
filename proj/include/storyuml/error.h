// Copyright 2026 The storyuml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STORYUML_ERROR_H_
#define STORYUML_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace storyuml {

// Machine-readable error codes shared by every module. The service layer
// reports them verbatim in the `code` field of error bodies.
enum class ErrorCode {
  kEmptyInput,
  kUnassignedUseCase,
  kNoActorsFound,
  kDegenerateDataset,
  kUndefinedMetric,
  kUnknownActor,
  kUnknownUseCase,
  kDuplicateActor,
  kDuplicateUseCase,
  kNothingToUndo,
  kInvalidCommand,
  kVersionMismatch,
  kMalformedFile,
  kIoError,
};

// Returns the token used on the wire, e.g. "DuplicateActor".
std::string_view ErrorCodeName(ErrorCode code);

// Position of a token in a document.
struct Location {
  int sentence = 0;
  int token = 0;

  friend bool operator==(const Location&, const Location&) = default;
  friend auto operator<=>(const Location&, const Location&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<Location> location = std::nullopt)
      : std::runtime_error(message), code_(code), location_(location) {}

  ErrorCode code() const { return code_; }
  const std::optional<Location>& location() const { return location_; }

 private:
  ErrorCode code_;
  std::optional<Location> location_;
};

}  // namespace storyuml

#endif  // STORYUML_ERROR_H_
