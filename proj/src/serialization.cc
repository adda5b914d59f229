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

#include "storyuml/serialization.h"

#include <string>

namespace storyuml {
namespace {

template <class T>
void OptionalTo(Json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <class T>
std::optional<T> OptionalFrom(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

void to_json(Json& j, PosTag tag) { j = std::string(PosTagName(tag)); }

void from_json(const Json& j, PosTag& tag) {
  auto parsed = ParsePosTag(j.get<std::string>());
  if (!parsed) {
    throw Error(ErrorCode::kMalformedFile,
                "unknown POS tag " + j.get<std::string>());
  }
  tag = *parsed;
}

void to_json(Json& j, DepLabel label) {
  j = std::string(DepLabelName(label));
}

void from_json(const Json& j, DepLabel& label) {
  auto parsed = ParseDepLabel(j.get<std::string>());
  if (!parsed) {
    throw Error(ErrorCode::kMalformedFile,
                "unknown dependency label " + j.get<std::string>());
  }
  label = *parsed;
}

void to_json(Json& j, const Location& loc) {
  j = Json{{"sentence", loc.sentence}, {"token", loc.token}};
}

void from_json(const Json& j, Location& loc) {
  loc.sentence = j.at("sentence").get<int>();
  loc.token = j.at("token").get<int>();
}

void to_json(Json& j, const UseCase& uc) {
  j = Json{{"verb", uc.verb_lemma},
           {"object", uc.object_lemma},
           {"phrase", uc.phrase}};
  OptionalTo(j, "source", uc.source);
}

void from_json(const Json& j, UseCase& uc) {
  uc.verb_lemma = j.at("verb").get<std::string>();
  uc.object_lemma = j.at("object").get<std::string>();
  uc.phrase = j.at("phrase").get<std::string>();
  uc.source = OptionalFrom<Location>(j, "source");
}

void to_json(Json& j, const Actor& actor) {
  j = Json{{"name", actor.name}, {"key", actor.key}};
  OptionalTo(j, "first_seen", actor.first_seen);
}

void from_json(const Json& j, Actor& actor) {
  actor.name = j.at("name").get<std::string>();
  actor.key = j.at("key").get<std::string>();
  actor.first_seen = OptionalFrom<Location>(j, "first_seen");
}

void to_json(Json& j, const UseCaseModel& model) {
  Json actors = Json::array();
  for (std::size_t i = 0; i < model.actors().size(); ++i) {
    Json a = model.actors()[i];
    a["use_cases"] = model.associations()[i].use_cases;
    actors.push_back(std::move(a));
  }
  j = Json{{"system_name", model.system_name()}, {"actors", std::move(actors)}};
}

void from_json(const Json& j, UseCaseModel& model) {
  UseCaseModel out(j.at("system_name").get<std::string>());
  for (const Json& a : j.at("actors")) {
    out.InsertActor(a.get<Actor>(),
                    a.at("use_cases").get<std::vector<UseCase>>());
  }
  model = std::move(out);
}

Json ErrorToJson(const Error& error) {
  Json j{{"code", std::string(ErrorCodeName(error.code()))},
         {"message", error.what()}};
  if (error.location()) j["location"] = *error.location();
  return j;
}

}  // namespace storyuml

namespace storyuml::textnorm {

void to_json(Json& j, const Replacement& r) {
  j = Json{{"original", r.original},
           {"corrected", r.corrected},
           {"offset", r.offset},
           {"distance", r.distance}};
}

void from_json(const Json& j, Replacement& r) {
  r.original = j.at("original").get<std::string>();
  r.corrected = j.at("corrected").get<std::string>();
  r.offset = j.at("offset").get<std::size_t>();
  r.distance = j.at("distance").get<int>();
}

void to_json(Json& j, const CorrectionReport& report) {
  j = Json{{"replacements", report.replacements},
           {"untouched_unknown", report.untouched_unknown}};
}

void from_json(const Json& j, CorrectionReport& report) {
  report.replacements = j.at("replacements").get<std::vector<Replacement>>();
  report.untouched_unknown =
      j.at("untouched_unknown").get<std::vector<std::string>>();
}

}  // namespace storyuml::textnorm

namespace storyuml::lingpipe {

void to_json(Json& j, const Token& token) {
  j = Json{{"index", token.index},   {"text", token.text},
           {"lemma", token.lemma},   {"pos", token.pos},
           {"dep", token.dep},       {"sentence", token.sentence_index},
           {"offset", token.offset}};
}

void from_json(const Json& j, Token& token) {
  token.index = j.at("index").get<int>();
  token.text = j.at("text").get<std::string>();
  token.lemma = j.at("lemma").get<std::string>();
  token.pos = j.at("pos").get<PosTag>();
  token.dep = j.at("dep").get<DepLabel>();
  token.sentence_index = j.at("sentence").get<int>();
  token.offset = j.at("offset").get<std::size_t>();
}

void to_json(Json& j, const Clause& clause) {
  j = Json{{"verb", clause.verb},
           {"subject_inherited", clause.subject_inherited},
           {"finite", clause.finite}};
  OptionalTo(j, "subject", clause.subject);
  OptionalTo(j, "object", clause.object);
}

void from_json(const Json& j, Clause& clause) {
  clause.verb = j.at("verb").get<int>();
  clause.subject = OptionalFrom<int>(j, "subject");
  clause.object = OptionalFrom<int>(j, "object");
  clause.subject_inherited = j.at("subject_inherited").get<bool>();
  clause.finite = j.at("finite").get<bool>();
}

void to_json(Json& j, const TaggedSentence& sentence) {
  j = Json{{"text", sentence.text},
           {"tokens", sentence.tokens},
           {"clauses", sentence.clauses}};
}

void from_json(const Json& j, TaggedSentence& sentence) {
  sentence.text = j.at("text").get<std::string>();
  sentence.tokens = j.at("tokens").get<std::vector<Token>>();
  sentence.clauses = j.at("clauses").get<std::vector<Clause>>();
}

}  // namespace storyuml::lingpipe

namespace storyuml::edit {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string Field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw Error(ErrorCode::kInvalidCommand,
                std::string("command field '") + key +
                    "' is missing or not a string");
  }
  return it->get<std::string>();
}

}  // namespace

Json CommandToJson(const EditCommand& cmd) {
  Json j = std::visit(
      Overloaded{
          [](const AddActor& c) { return Json{{"name", c.name}}; },
          [](const RemoveActor& c) { return Json{{"key", c.key}}; },
          [](const RenameActor& c) {
            return Json{{"key", c.key}, {"new_name", c.new_name}};
          },
          [](const AddUseCase& c) {
            return Json{{"actor_key", c.actor_key}, {"phrase", c.phrase}};
          },
          [](const RemoveUseCase& c) {
            return Json{{"actor_key", c.actor_key}, {"phrase", c.phrase}};
          },
          [](const RenameUseCase& c) {
            return Json{{"actor_key", c.actor_key},
                        {"old_phrase", c.old_phrase},
                        {"new_phrase", c.new_phrase}};
          },
          [](const ReassignUseCase& c) {
            return Json{{"phrase", c.phrase},
                        {"from_key", c.from_key},
                        {"to_key", c.to_key}};
          },
      },
      cmd);
  j["type"] = CommandName(cmd);
  return j;
}

EditCommand CommandFromJson(const Json& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidCommand, "command must be an object");
  }
  const std::string type = Field(j, "type");
  if (type == "AddActor") return AddActor{Field(j, "name")};
  if (type == "RemoveActor") return RemoveActor{Field(j, "key")};
  if (type == "RenameActor") {
    return RenameActor{Field(j, "key"), Field(j, "new_name")};
  }
  if (type == "AddUseCase") {
    return AddUseCase{Field(j, "actor_key"), Field(j, "phrase")};
  }
  if (type == "RemoveUseCase") {
    return RemoveUseCase{Field(j, "actor_key"), Field(j, "phrase")};
  }
  if (type == "RenameUseCase") {
    return RenameUseCase{Field(j, "actor_key"), Field(j, "old_phrase"),
                         Field(j, "new_phrase")};
  }
  if (type == "ReassignUseCase") {
    return ReassignUseCase{Field(j, "phrase"), Field(j, "from_key"),
                           Field(j, "to_key")};
  }
  throw Error(ErrorCode::kInvalidCommand, "unknown command type " + type);
}

Json InverseToJson(const InverseEdit& op) {
  return std::visit(
      Overloaded{
          [](const inverse::DropActor& o) {
            return Json{{"op", "DropActor"}, {"key", o.key}};
          },
          [](const inverse::RestoreActor& o) {
            return Json{{"op", "RestoreActor"},
                        {"actor", o.actor},
                        {"use_cases", o.use_cases},
                        {"position", o.position}};
          },
          [](const inverse::Rename& o) {
            return Json{{"op", "Rename"}, {"key", o.key}, {"name", o.name}};
          },
          [](const inverse::DropUseCase& o) {
            return Json{{"op", "DropUseCase"},
                        {"actor_key", o.actor_key},
                        {"phrase", o.phrase}};
          },
          [](const inverse::RestoreUseCase& o) {
            return Json{{"op", "RestoreUseCase"},
                        {"actor_key", o.actor_key},
                        {"use_case", o.use_case},
                        {"position", o.position}};
          },
          [](const inverse::ReplaceUseCase& o) {
            return Json{{"op", "ReplaceUseCase"},
                        {"actor_key", o.actor_key},
                        {"position", o.position},
                        {"use_case", o.use_case}};
          },
          [](const inverse::MoveUseCase& o) {
            return Json{{"op", "MoveUseCase"},
                        {"phrase", o.phrase},
                        {"from_key", o.from_key},
                        {"to_key", o.to_key},
                        {"position", o.position}};
          },
      },
      op);
}

InverseEdit InverseFromJson(const Json& j) {
  const std::string op = j.at("op").get<std::string>();
  auto str = [&](const char* k) { return j.at(k).get<std::string>(); };
  auto pos = [&] { return j.at("position").get<std::size_t>(); };
  if (op == "DropActor") return inverse::DropActor{str("key")};
  if (op == "RestoreActor") {
    return inverse::RestoreActor{j.at("actor").get<Actor>(),
                                 j.at("use_cases").get<std::vector<UseCase>>(),
                                 pos()};
  }
  if (op == "Rename") return inverse::Rename{str("key"), str("name")};
  if (op == "DropUseCase") {
    return inverse::DropUseCase{str("actor_key"), str("phrase")};
  }
  if (op == "RestoreUseCase") {
    return inverse::RestoreUseCase{str("actor_key"),
                                   j.at("use_case").get<UseCase>(), pos()};
  }
  if (op == "ReplaceUseCase") {
    return inverse::ReplaceUseCase{str("actor_key"), pos(),
                                   j.at("use_case").get<UseCase>()};
  }
  if (op == "MoveUseCase") {
    return inverse::MoveUseCase{str("phrase"), str("from_key"), str("to_key"),
                                pos()};
  }
  throw Error(ErrorCode::kMalformedFile, "unknown undo operation " + op);
}

void to_json(Json& j, const Session& session) {
  Json stack = Json::array();
  for (const auto& op : session.undo_stack) stack.push_back(InverseToJson(op));
  j = Json{{"model", session.model},
           {"revision", session.revision},
           {"undo_stack", std::move(stack)}};
}

void from_json(const Json& j, Session& session) {
  session.model = j.at("model").get<UseCaseModel>();
  session.revision = j.at("revision").get<std::uint64_t>();
  session.undo_stack.clear();
  for (const Json& op : j.at("undo_stack")) {
    session.undo_stack.push_back(InverseFromJson(op));
  }
}

}  // namespace storyuml::edit
