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

#include "storyuml/diagram.h"

#include <cctype>
#include <set>
#include <stdexcept>

namespace storyuml::diagram {
namespace {

constexpr std::string_view kIndent = "    ";
constexpr std::string_view kInnerIndent = "      ";

std::string BaseAlias(std::string_view name) {
  std::string letters;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) letters += c;
    if (letters.size() == 2) break;
  }
  if (letters.empty()) return "A";
  letters[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(letters[0])));
  if (letters.size() == 2) {
    letters[1] = static_cast<char>(std::tolower(static_cast<unsigned char>(letters[1])));
  }
  return letters;
}

}  // namespace

const std::string& AliasMap::ActorAliasOf(std::string_view key) const {
  for (const ActorAlias& a : actors) {
    if (a.actor_key == key) return a.alias;
  }
  throw std::out_of_range("no alias for actor '" + std::string(key) + "'");
}

AliasMap MakeAliases(const UseCaseModel& model) {
  AliasMap map;
  std::set<std::string> taken;
  int uc = 0;
  for (std::size_t i = 0; i < model.actors().size(); ++i) {
    for (const UseCase& u : model.associations()[i].use_cases) {
      std::string alias = "UC" + std::to_string(++uc);
      taken.insert(alias);
      map.use_cases.push_back({model.actors()[i].key, u.phrase, alias});
    }
  }
  for (const Actor& actor : model.actors()) {
    const std::string base = BaseAlias(actor.name);
    std::string alias = base;
    for (int k = 2; taken.contains(alias); ++k) alias = base + std::to_string(k);
    taken.insert(alias);
    map.actors.push_back({actor.key, alias});
  }
  return map;
}

std::string QuoteName(std::string_view name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string EmitPlantUml(const UseCaseModel& model, const AliasMap& aliases) {
  std::string out = "@startuml\n";
  out.append(kIndent).append("left to right direction\n");
  for (const Actor& actor : model.actors()) {
    out.append(kIndent)
        .append("actor ")
        .append(QuoteName(actor.name))
        .append(" as ")
        .append(aliases.ActorAliasOf(actor.key))
        .append("\n");
  }
  out.append(kIndent).append("rectangle ");
  if (model.system_name() != kDefaultSystemName) {
    out.append(QuoteName(model.system_name())).append(" ");
  }
  out.append("{\n");
  for (const UseCaseAlias& uc : aliases.use_cases) {
    out.append(kInnerIndent)
        .append("usecase ")
        .append(QuoteName(uc.phrase))
        .append(" as ")
        .append(uc.alias)
        .append("\n");
  }
  out.append(kIndent).append("}\n");
  for (const UseCaseAlias& uc : aliases.use_cases) {
    out.append(kIndent)
        .append(aliases.ActorAliasOf(uc.actor_key))
        .append(" --> ")
        .append(uc.alias)
        .append("\n");
  }
  out.append("@enduml\n");
  return out;
}

std::string EmitPlantUml(const UseCaseModel& model) {
  return EmitPlantUml(model, MakeAliases(model));
}

}  // namespace storyuml::diagram
