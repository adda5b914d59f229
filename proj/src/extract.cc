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

#include "storyuml/extract.h"

#include <algorithm>

#include "storyuml/textnorm.h"

namespace storyuml {
namespace {

using lingpipe::TaggedSentence;
using lingpipe::Token;

std::string CollapseSpaces(std::string_view s) {
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

bool IsNominal(PosTag t) { return t == PosTag::kNoun || t == PosTag::kPropn; }

}  // namespace

// ----- Model types ----- //

UseCase UseCase::FromLemmas(std::string verb, std::string object,
                            std::optional<Location> source) {
  UseCase uc;
  uc.phrase = verb + " " + object;
  uc.verb_lemma = std::move(verb);
  uc.object_lemma = std::move(object);
  uc.source = source;
  return uc;
}

UseCase UseCase::FromPhrase(std::string_view phrase) {
  const std::string clean = CollapseSpaces(textnorm::ToLower(phrase));
  const std::size_t space = clean.find(' ');
  if (space == std::string::npos) {
    throw Error(ErrorCode::kInvalidCommand,
                "use case phrase needs a verb and an object: '" + clean + "'");
  }
  return FromLemmas(clean.substr(0, space), clean.substr(space + 1));
}

Actor Actor::Named(std::string_view name, std::optional<Location> first_seen) {
  Actor a;
  a.name = CollapseSpaces(name);
  if (a.name.empty()) {
    throw Error(ErrorCode::kInvalidCommand, "actor name is empty");
  }
  a.key = textnorm::ToLower(a.name);
  a.first_seen = first_seen;
  return a;
}

std::optional<std::size_t> UseCaseModel::FindActor(std::string_view key) const {
  for (std::size_t i = 0; i < actors_.size(); ++i) {
    if (actors_[i].key == key) return i;
  }
  return std::nullopt;
}

const std::vector<UseCase>& UseCaseModel::UseCasesOf(
    std::string_view key) const {
  auto i = FindActor(key);
  if (!i) {
    throw Error(ErrorCode::kUnknownActor,
                "unknown actor '" + std::string(key) + "'");
  }
  return associations_[*i].use_cases;
}

std::vector<UseCase>& UseCaseModel::MutableUseCasesOf(std::string_view key) {
  return const_cast<std::vector<UseCase>&>(
      static_cast<const UseCaseModel&>(*this).UseCasesOf(key));
}

Actor& UseCaseModel::MutableActor(std::string_view key) {
  auto i = FindActor(key);
  if (!i) {
    throw Error(ErrorCode::kUnknownActor,
                "unknown actor '" + std::string(key) + "'");
  }
  return actors_[*i];
}

void UseCaseModel::InsertActor(Actor actor, std::vector<UseCase> use_cases,
                               std::optional<std::size_t> position) {
  if (FindActor(actor.key)) {
    throw Error(ErrorCode::kDuplicateActor,
                "actor '" + actor.key + "' already exists");
  }
  const std::size_t at = std::min(position.value_or(actors_.size()),
                                  actors_.size());
  associations_.insert(associations_.begin() + at,
                       Association{actor.key, std::move(use_cases)});
  actors_.insert(actors_.begin() + at, std::move(actor));
}

std::pair<Actor, std::vector<UseCase>> UseCaseModel::RemoveActor(
    std::string_view key) {
  auto i = FindActor(key);
  if (!i) {
    throw Error(ErrorCode::kUnknownActor,
                "unknown actor '" + std::string(key) + "'");
  }
  std::pair<Actor, std::vector<UseCase>> removed{
      std::move(actors_[*i]), std::move(associations_[*i].use_cases)};
  actors_.erase(actors_.begin() + *i);
  associations_.erase(associations_.begin() + *i);
  return removed;
}

bool UseCaseModel::AddUseCase(std::string_view key, UseCase use_case) {
  auto& list = MutableUseCasesOf(key);
  for (const UseCase& uc : list) {
    if (uc.phrase == use_case.phrase) return false;
  }
  list.push_back(std::move(use_case));
  return true;
}

std::size_t UseCaseModel::use_case_count() const {
  std::size_t n = 0;
  for (const auto& a : associations_) n += a.use_cases.size();
  return n;
}

// ----- Extraction ----- //

std::string TitleCase(std::string_view lemma) {
  std::string out(lemma);
  bool start = true;
  for (char& c : out) {
    if (start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    start = (c == ' ' || c == '-');
  }
  return out;
}

UseCaseModel ExtractModel(std::span<const TaggedSentence> sentences,
                          std::string system_name) {
  const bool any_actor = std::any_of(
      sentences.begin(), sentences.end(), [](const TaggedSentence& s) {
        return std::any_of(s.tokens.begin(), s.tokens.end(),
                           [](const Token& t) {
                             return t.dep == DepLabel::kNsubj &&
                                    IsNominal(t.pos);
                           });
      });
  if (!any_actor) {
    throw Error(ErrorCode::kNoActorsFound,
                "no nominal subject found; pronoun subjects never become "
                "actors");
  }

  UseCaseModel model(std::move(system_name));
  std::optional<std::string> active;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const TaggedSentence& sentence = sentences[s];
    for (const Token& tok : sentence.tokens) {
      const Location here{static_cast<int>(s), tok.index};
      if (tok.dep == DepLabel::kNsubj && IsNominal(tok.pos)) {
        if (!model.FindActor(tok.lemma)) {
          Actor actor;
          actor.name = TitleCase(tok.lemma);
          actor.key = tok.lemma;
          actor.first_seen = here;
          model.InsertActor(std::move(actor));
        }
        active = tok.lemma;
      }
      for (const lingpipe::Clause& clause : sentence.clauses) {
        if (clause.verb != tok.index || !clause.object) continue;
        const Token& object = sentence.tokens[*clause.object];
        UseCase uc = UseCase::FromLemmas(tok.lemma, object.lemma, here);
        if (!active) {
          throw Error(ErrorCode::kUnassignedUseCase,
                      "use case '" + uc.phrase + "' precedes every actor",
                      here);
        }
        model.AddUseCase(*active, std::move(uc));
      }
    }
  }
  return model;
}

ModelStats GetModelStats(const UseCaseModel& model) {
  return {model.actors().size(), model.use_case_count()};
}

std::vector<Location> FindPassiveClauses(
    std::span<const TaggedSentence> sentences) {
  std::vector<Location> out;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const auto& toks = sentences[s].tokens;
    for (const lingpipe::Clause& clause : sentences[s].clauses) {
      const Token& verb = toks[clause.verb];
      const std::string lower = textnorm::ToLower(verb.text);
      const bool participle = lower.size() > 2 &&
                              (lower.ends_with("ed") || lower.ends_with("en") ||
                               verb.lemma != lower);
      if (!participle) continue;
      int i = clause.verb - 1;
      while (i >= 0 && toks[i].pos == PosTag::kAdv) --i;
      if (i >= 0 && toks[i].pos == PosTag::kAux && toks[i].lemma == "be") {
        out.push_back({static_cast<int>(s), clause.verb});
      }
    }
  }
  return out;
}

}  // namespace storyuml
