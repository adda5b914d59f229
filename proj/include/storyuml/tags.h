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

#ifndef STORYUML_TAGS_H_
#define STORYUML_TAGS_H_

#include <optional>
#include <string_view>

namespace storyuml {

// Part-of-speech tagset. Maps the nine traditional English word classes
// (article -> DET, preposition -> ADP, numeral -> NUM) and adds AUX, PART,
// PUNCT, PROPN, ADV and X. PART is used only for infinitival "to".
enum class PosTag {
  kNoun,
  kPropn,
  kVerb,
  kAux,
  kAdj,
  kAdv,
  kPron,
  kDet,
  kAdp,
  kConj,
  kNum,
  kPart,
  kIntj,
  kPunct,
  kX,
};

// Dependency labels produced by the shallow labeler.
enum class DepLabel { kNone, kNsubj, kDobj };

std::string_view PosTagName(PosTag tag);
std::optional<PosTag> ParsePosTag(std::string_view name);

std::string_view DepLabelName(DepLabel label);
std::optional<DepLabel> ParseDepLabel(std::string_view name);

}  // namespace storyuml

#endif  // STORYUML_TAGS_H_
