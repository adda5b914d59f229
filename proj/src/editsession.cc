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

#include "storyuml/editsession.h"

#include <algorithm>
#include <optional>

#include "storyuml/error.h"
#include "storyuml/textnorm.h"

namespace storyuml::edit {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string Collapse(std::string_view s) {
  std::string out;
  bool pending = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += c;
  }
  return out;
}

std::string Required(std::string_view value, std::string_view field) {
  std::string v = Collapse(value);
  if (v.empty()) {
    throw Error(ErrorCode::kInvalidCommand,
                std::string(field) + " must not be blank");
  }
  return v;
}

std::string KeyOf(std::string_view value, std::string_view field) {
  return textnorm::ToLower(Required(value, field));
}

std::optional<std::size_t> FindPhrase(const std::vector<UseCase>& list,
                                      std::string_view phrase) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].phrase == phrase) return i;
  }
  return std::nullopt;
}

std::size_t RequirePhrase(const std::vector<UseCase>& list,
                          std::string_view phrase, std::string_view key) {
  auto i = FindPhrase(list, phrase);
  if (!i) {
    throw Error(ErrorCode::kUnknownUseCase,
                "actor '" + std::string(key) + "' has no use case '" +
                    std::string(phrase) + "'");
  }
  return *i;
}

void RejectDuplicatePhrase(const std::vector<UseCase>& list,
                           std::string_view phrase, std::string_view key) {
  if (FindPhrase(list, phrase)) {
    throw Error(ErrorCode::kDuplicateUseCase,
                "actor '" + std::string(key) + "' already has use case '" +
                    std::string(phrase) + "'");
  }
}

// Renames in place, keeping position, first_seen and use cases. Returns the
// previous display name.
std::string RenameInPlace(UseCaseModel& model, std::string_view key,
                          std::string_view new_name) {
  Actor renamed = Actor::Named(new_name, std::nullopt);
  const auto position = model.FindActor(key);
  if (!position) {
    throw Error(ErrorCode::kUnknownActor,
                "unknown actor '" + std::string(key) + "'");
  }
  if (renamed.key != key && model.FindActor(renamed.key)) {
    throw Error(ErrorCode::kDuplicateActor,
                "actor '" + renamed.key + "' already exists");
  }
  auto [actor, use_cases] = model.RemoveActor(key);
  std::string old_name = actor.name;
  actor.name = renamed.name;
  actor.key = renamed.key;
  model.InsertActor(std::move(actor), std::move(use_cases), *position);
  return old_name;
}

void ApplyInverse(UseCaseModel& model, const InverseEdit& op) {
  std::visit(
      Overloaded{
          [&](const inverse::DropActor& o) { model.RemoveActor(o.key); },
          [&](const inverse::RestoreActor& o) {
            model.InsertActor(o.actor, o.use_cases, o.position);
          },
          [&](const inverse::Rename& o) { RenameInPlace(model, o.key, o.name); },
          [&](const inverse::DropUseCase& o) {
            auto& list = model.MutableUseCasesOf(o.actor_key);
            list.erase(list.begin() +
                       RequirePhrase(list, o.phrase, o.actor_key));
          },
          [&](const inverse::RestoreUseCase& o) {
            auto& list = model.MutableUseCasesOf(o.actor_key);
            list.insert(list.begin() + std::min(o.position, list.size()),
                        o.use_case);
          },
          [&](const inverse::ReplaceUseCase& o) {
            auto& list = model.MutableUseCasesOf(o.actor_key);
            if (o.position >= list.size()) {
              throw Error(ErrorCode::kUnknownUseCase,
                          "undo position out of range");
            }
            list[o.position] = o.use_case;
          },
          [&](const inverse::MoveUseCase& o) {
            auto& from = model.MutableUseCasesOf(o.from_key);
            const std::size_t i = RequirePhrase(from, o.phrase, o.from_key);
            UseCase uc = std::move(from[i]);
            from.erase(from.begin() + i);
            auto& to = model.MutableUseCasesOf(o.to_key);
            to.insert(to.begin() + std::min(o.position, to.size()),
                      std::move(uc));
          },
      },
      op);
}

}  // namespace

Session ApplyEdit(const Session& session, const EditCommand& cmd) {
  Session next = session;
  UseCaseModel& model = next.model;
  InverseEdit inverse = std::visit(
      Overloaded{
          [&](const AddActor& c) -> InverseEdit {
            Actor actor = Actor::Named(Required(c.name, "name"));
            std::string key = actor.key;
            model.InsertActor(std::move(actor));
            return inverse::DropActor{key};
          },
          [&](const RemoveActor& c) -> InverseEdit {
            const std::string key = KeyOf(c.key, "key");
            const auto position = model.FindActor(key);
            auto [actor, use_cases] = model.RemoveActor(key);
            return inverse::RestoreActor{std::move(actor), std::move(use_cases),
                                         position.value_or(0)};
          },
          [&](const RenameActor& c) -> InverseEdit {
            const std::string key = KeyOf(c.key, "key");
            const std::string name = Required(c.new_name, "new_name");
            const std::string old_name = RenameInPlace(model, key, name);
            return inverse::Rename{textnorm::ToLower(name), old_name};
          },
          [&](const AddUseCase& c) -> InverseEdit {
            const std::string key = KeyOf(c.actor_key, "actor_key");
            UseCase uc = UseCase::FromPhrase(Required(c.phrase, "phrase"));
            auto& list = model.MutableUseCasesOf(key);
            RejectDuplicatePhrase(list, uc.phrase, key);
            std::string phrase = uc.phrase;
            list.push_back(std::move(uc));
            return inverse::DropUseCase{key, phrase};
          },
          [&](const RemoveUseCase& c) -> InverseEdit {
            const std::string key = KeyOf(c.actor_key, "actor_key");
            const std::string phrase = KeyOf(c.phrase, "phrase");
            auto& list = model.MutableUseCasesOf(key);
            const std::size_t i = RequirePhrase(list, phrase, key);
            UseCase removed = std::move(list[i]);
            list.erase(list.begin() + i);
            return inverse::RestoreUseCase{key, std::move(removed), i};
          },
          [&](const RenameUseCase& c) -> InverseEdit {
            const std::string key = KeyOf(c.actor_key, "actor_key");
            const std::string old_phrase = KeyOf(c.old_phrase, "old_phrase");
            UseCase renamed =
                UseCase::FromPhrase(Required(c.new_phrase, "new_phrase"));
            auto& list = model.MutableUseCasesOf(key);
            const std::size_t i = RequirePhrase(list, old_phrase, key);
            if (renamed.phrase != old_phrase) {
              RejectDuplicatePhrase(list, renamed.phrase, key);
            }
            UseCase original = std::move(list[i]);
            list[i] = std::move(renamed);
            return inverse::ReplaceUseCase{key, i, std::move(original)};
          },
          [&](const ReassignUseCase& c) -> InverseEdit {
            const std::string phrase = KeyOf(c.phrase, "phrase");
            const std::string from_key = KeyOf(c.from_key, "from_key");
            const std::string to_key = KeyOf(c.to_key, "to_key");
            auto& from = model.MutableUseCasesOf(from_key);
            const std::size_t i = RequirePhrase(from, phrase, from_key);
            auto& to = model.MutableUseCasesOf(to_key);
            RejectDuplicatePhrase(to, phrase, to_key);
            UseCase uc = std::move(from[i]);
            from.erase(from.begin() + i);
            to.push_back(std::move(uc));
            return inverse::MoveUseCase{phrase, to_key, from_key, i};
          },
      },
      cmd);
  next.undo_stack.push_back(std::move(inverse));
  ++next.revision;
  return next;
}

Session Undo(const Session& session) {
  if (session.undo_stack.empty()) {
    throw Error(ErrorCode::kNothingToUndo, "nothing to undo");
  }
  Session prev = session;
  ApplyInverse(prev.model, prev.undo_stack.back());
  prev.undo_stack.pop_back();
  --prev.revision;
  return prev;
}

std::string CommandName(const EditCommand& cmd) {
  static constexpr const char* kNames[] = {
      "AddActor",      "RemoveActor",   "RenameActor",     "AddUseCase",
      "RemoveUseCase", "RenameUseCase", "ReassignUseCase",
  };
  return kNames[cmd.index()];
}

}  // namespace storyuml::edit
