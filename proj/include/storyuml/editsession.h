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

#ifndef STORYUML_EDITSESSION_H_
#define STORYUML_EDITSESSION_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "storyuml/extract.h"

namespace storyuml::edit {

struct AddActor {
  std::string name;
};
struct RemoveActor {
  std::string key;
};
struct RenameActor {
  std::string key;
  std::string new_name;
};
struct AddUseCase {
  std::string actor_key;
  std::string phrase;
};
struct RemoveUseCase {
  std::string actor_key;
  std::string phrase;
};
struct RenameUseCase {
  std::string actor_key;
  std::string old_phrase;
  std::string new_phrase;
};
struct ReassignUseCase {
  std::string phrase;
  std::string from_key;
  std::string to_key;
};

// One manual edit of a UseCaseModel.
using EditCommand = std::variant<AddActor, RemoveActor, RenameActor,
                                 AddUseCase, RemoveUseCase, RenameUseCase,
                                 ReassignUseCase>;

// Inverse operations recorded on the undo stack. They carry positions and
// full values so that undo restores the exact prior model.
namespace inverse {
struct DropActor {
  std::string key;
};
struct RestoreActor {
  Actor actor;
  std::vector<UseCase> use_cases;
  std::size_t position = 0;
};
struct Rename {
  std::string key;
  std::string name;
};
struct DropUseCase {
  std::string actor_key;
  std::string phrase;
};
struct RestoreUseCase {
  std::string actor_key;
  UseCase use_case;
  std::size_t position = 0;
};
struct ReplaceUseCase {
  std::string actor_key;
  std::size_t position = 0;
  UseCase use_case;
};
struct MoveUseCase {
  std::string phrase;
  std::string from_key;
  std::string to_key;
  std::size_t position = 0;
};
}  // namespace inverse

using InverseEdit =
    std::variant<inverse::DropActor, inverse::RestoreActor, inverse::Rename,
                 inverse::DropUseCase, inverse::RestoreUseCase,
                 inverse::ReplaceUseCase, inverse::MoveUseCase>;

struct Session {
  UseCaseModel model;
  std::uint64_t revision = 0;
  std::vector<InverseEdit> undo_stack;
};

// Returns the edited session; `session` is left untouched on error.
// Errors: kUnknownActor, kUnknownUseCase, kDuplicateActor, kDuplicateUseCase,
// kInvalidCommand (blank fields).
Session ApplyEdit(const Session& session, const EditCommand& cmd);

// Throws Error(kNothingToUndo) on an empty stack.
Session Undo(const Session& session);

std::string CommandName(const EditCommand& cmd);

}  // namespace storyuml::edit

#endif  // STORYUML_EDITSESSION_H_
