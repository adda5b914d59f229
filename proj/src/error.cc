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

#include "storyuml/error.h"

namespace storyuml {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kUnassignedUseCase: return "UnassignedUseCase";
    case ErrorCode::kNoActorsFound: return "NoActorsFound";
    case ErrorCode::kDegenerateDataset: return "DegenerateDataset";
    case ErrorCode::kUndefinedMetric: return "UndefinedMetric";
    case ErrorCode::kUnknownActor: return "UnknownActor";
    case ErrorCode::kUnknownUseCase: return "UnknownUseCase";
    case ErrorCode::kDuplicateActor: return "DuplicateActor";
    case ErrorCode::kDuplicateUseCase: return "DuplicateUseCase";
    case ErrorCode::kNothingToUndo: return "NothingToUndo";
    case ErrorCode::kInvalidCommand: return "InvalidCommand";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kMalformedFile: return "MalformedFile";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace storyuml
