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

#ifndef STORYUML_EXTRACT_H_
#define STORYUML_EXTRACT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "storyuml/error.h"
#include "storyuml/lingpipe.h"

namespace storyuml {

// A verb + direct-object pair. Manually added use cases have no source.
struct UseCase {
  std::string verb_lemma;
  std::string object_lemma;
  std::string phrase;  // verb_lemma + ' ' + object_lemma
  std::optional<Location> source;

  static UseCase FromLemmas(std::string verb, std::string object,
                            std::optional<Location> source = std::nullopt);
  // Lowercases and collapses whitespace, then splits at the first space.
  // Throws Error(kInvalidCommand) for phrases with fewer than two words.
  static UseCase FromPhrase(std::string_view phrase);

  friend bool operator==(const UseCase&, const UseCase&) = default;
};

struct Actor {
  std::string name;  // display text
  std::string key;   // lowercase(name), unique within a model
  std::optional<Location> first_seen;

  static Actor Named(std::string_view name,
                     std::optional<Location> first_seen = std::nullopt);

  friend bool operator==(const Actor&, const Actor&) = default;
};

struct Association {
  std::string actor_key;
  std::vector<UseCase> use_cases;

  friend bool operator==(const Association&, const Association&) = default;
};

inline constexpr std::string_view kDefaultSystemName = "System";

// Actors in first-seen order, each owning an ordered list of use cases.
// `associations[i]` always belongs to `actors[i]`.
class UseCaseModel {
 public:
  UseCaseModel() = default;
  explicit UseCaseModel(std::string system_name)
      : system_name_(std::move(system_name)) {}

  const std::string& system_name() const { return system_name_; }
  void set_system_name(std::string name) { system_name_ = std::move(name); }

  const std::vector<Actor>& actors() const { return actors_; }
  const std::vector<Association>& associations() const {
    return associations_;
  }

  // Index of the actor with `key`, if any.
  std::optional<std::size_t> FindActor(std::string_view key) const;
  const std::vector<UseCase>& UseCasesOf(std::string_view key) const;
  std::vector<UseCase>& MutableUseCasesOf(std::string_view key);

  // Throws Error(kDuplicateActor) when the key is taken. `position` defaults
  // to the end.
  void InsertActor(Actor actor, std::vector<UseCase> use_cases = {},
                   std::optional<std::size_t> position = std::nullopt);
  // Removes and returns the actor with its use cases. Throws kUnknownActor.
  std::pair<Actor, std::vector<UseCase>> RemoveActor(std::string_view key);
  Actor& MutableActor(std::string_view key);

  // Appends unless the actor already owns the phrase. Returns whether it was
  // added. Throws kUnknownActor.
  bool AddUseCase(std::string_view key, UseCase use_case);

  std::size_t use_case_count() const;
  bool empty() const { return actors_.empty(); }

  friend bool operator==(const UseCaseModel&, const UseCaseModel&) = default;

 private:
  std::string system_name_{kDefaultSystemName};
  std::vector<Actor> actors_;
  std::vector<Association> associations_;
};

// Applies the extraction heuristics: non-pronoun NSUBJ tokens create or
// re-activate actors; every clause with a DOBJ yields a use case for the
// active actor. Throws Error(kNoActorsFound) when no sentence has a nominal
// subject and Error(kUnassignedUseCase) for a use case that precedes every
// actor.
UseCaseModel ExtractModel(std::span<const lingpipe::TaggedSentence> sentences,
                          std::string system_name = std::string(
                              kDefaultSystemName));

struct ModelStats {
  std::size_t actor_count = 0;
  std::size_t use_case_count = 0;

  friend bool operator==(const ModelStats&, const ModelStats&) = default;
};
ModelStats GetModelStats(const UseCaseModel& model);

// Clauses whose verb follows a form of "be" as a participle; the subject
// rule turns their patient into an actor.
std::vector<Location> FindPassiveClauses(
    std::span<const lingpipe::TaggedSentence> sentences);

// "customer" -> "Customer", "front-desk" -> "Front-Desk".
std::string TitleCase(std::string_view lemma);

}  // namespace storyuml

#endif  // STORYUML_EXTRACT_H_
