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

#ifndef STORYUML_DIAGRAM_H_
#define STORYUML_DIAGRAM_H_

#include <string>
#include <string_view>
#include <vector>

#include "storyuml/extract.h"

namespace storyuml::diagram {

struct ActorAlias {
  std::string actor_key;
  std::string alias;
};

struct UseCaseAlias {
  std::string actor_key;
  std::string phrase;
  std::string alias;
};

// PlantUML identifiers for every actor and use case, in model order.
struct AliasMap {
  std::vector<ActorAlias> actors;
  std::vector<UseCaseAlias> use_cases;

  const std::string& ActorAliasOf(std::string_view key) const;
};

// Actor alias: first two alphanumerics of the display name, upper then
// lower ("Customer" -> "Cu"); clashes get the smallest free suffix from 2.
// Use cases are numbered UC1..UCn across actors in model order.
AliasMap MakeAliases(const UseCaseModel& model);

// PlantUML source. Layout matches this template exactly:
//
//   @startuml
//       left to right direction
//       actor "Customer" as Cu
//       rectangle {
//         usecase "buy product" as UC1
//       }
//       Cu --> UC1
//   @enduml
//
// The rectangle is named only when the system name is not "System".
std::string EmitPlantUml(const UseCaseModel& model, const AliasMap& aliases);
std::string EmitPlantUml(const UseCaseModel& model);

// Doubles embedded double quotes.
std::string QuoteName(std::string_view name);

}  // namespace storyuml::diagram

#endif  // STORYUML_DIAGRAM_H_
