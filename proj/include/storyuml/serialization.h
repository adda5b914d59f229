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

#ifndef STORYUML_SERIALIZATION_H_
#define STORYUML_SERIALIZATION_H_

// JSON mappings for the domain types. Object keys are emitted in sorted
// order, so dumps of equal values are byte-identical.

#include <json.hpp>

#include "storyuml/editsession.h"
#include "storyuml/extract.h"
#include "storyuml/lingpipe.h"
#include "storyuml/tags.h"
#include "storyuml/textnorm.h"

namespace storyuml {

using Json = nlohmann::json;

void to_json(Json& j, PosTag tag);
void from_json(const Json& j, PosTag& tag);
void to_json(Json& j, DepLabel label);
void from_json(const Json& j, DepLabel& label);
void to_json(Json& j, const Location& loc);
void from_json(const Json& j, Location& loc);
void to_json(Json& j, const UseCase& uc);
void from_json(const Json& j, UseCase& uc);
void to_json(Json& j, const Actor& actor);
void from_json(const Json& j, Actor& actor);
void to_json(Json& j, const UseCaseModel& model);
void from_json(const Json& j, UseCaseModel& model);

// {"code": "...", "message": "...", "location": {...}?}
Json ErrorToJson(const Error& error);

}  // namespace storyuml

namespace storyuml::textnorm {
void to_json(Json& j, const Replacement& r);
void from_json(const Json& j, Replacement& r);
void to_json(Json& j, const CorrectionReport& report);
void from_json(const Json& j, CorrectionReport& report);
}  // namespace storyuml::textnorm

namespace storyuml::lingpipe {
void to_json(Json& j, const Token& token);
void from_json(const Json& j, Token& token);
void to_json(Json& j, const Clause& clause);
void from_json(const Json& j, Clause& clause);
void to_json(Json& j, const TaggedSentence& sentence);
void from_json(const Json& j, TaggedSentence& sentence);
}  // namespace storyuml::lingpipe

namespace storyuml::edit {

// {"type": "RenameActor", "key": "...", "new_name": "..."}. Field names match
// the command structs. Unknown types and missing or non-string fields throw
// Error(kInvalidCommand).
Json CommandToJson(const EditCommand& cmd);
EditCommand CommandFromJson(const Json& j);

Json InverseToJson(const InverseEdit& op);
InverseEdit InverseFromJson(const Json& j);

void to_json(Json& j, const Session& session);
void from_json(const Json& j, Session& session);

}  // namespace storyuml::edit

#endif  // STORYUML_SERIALIZATION_H_
