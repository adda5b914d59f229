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

#include "storyuml/tags.h"

#include <array>
#include <utility>

namespace storyuml {
namespace {

constexpr std::array<std::pair<PosTag, std::string_view>, 15> kPosNames = {{
    {PosTag::kNoun, "NOUN"},   {PosTag::kPropn, "PROPN"},
    {PosTag::kVerb, "VERB"},   {PosTag::kAux, "AUX"},
    {PosTag::kAdj, "ADJ"},     {PosTag::kAdv, "ADV"},
    {PosTag::kPron, "PRON"},   {PosTag::kDet, "DET"},
    {PosTag::kAdp, "ADP"},     {PosTag::kConj, "CONJ"},
    {PosTag::kNum, "NUM"},     {PosTag::kPart, "PART"},
    {PosTag::kIntj, "INTJ"},   {PosTag::kPunct, "PUNCT"},
    {PosTag::kX, "X"},
}};

constexpr std::array<std::pair<DepLabel, std::string_view>, 3> kDepNames = {{
    {DepLabel::kNone, "NONE"},
    {DepLabel::kNsubj, "NSUBJ"},
    {DepLabel::kDobj, "DOBJ"},
}};

}  // namespace

std::string_view PosTagName(PosTag tag) {
  for (const auto& [t, name] : kPosNames) {
    if (t == tag) return name;
  }
  return "X";
}

std::optional<PosTag> ParsePosTag(std::string_view name) {
  for (const auto& [t, n] : kPosNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::string_view DepLabelName(DepLabel label) {
  for (const auto& [l, name] : kDepNames) {
    if (l == label) return name;
  }
  return "NONE";
}

std::optional<DepLabel> ParseDepLabel(std::string_view name) {
  for (const auto& [l, n] : kDepNames) {
    if (n == name) return l;
  }
  return std::nullopt;
}

}  // namespace storyuml
