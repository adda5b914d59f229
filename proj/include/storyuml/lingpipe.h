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

#ifndef STORYUML_LINGPIPE_H_
#define STORYUML_LINGPIPE_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "storyuml/tags.h"
#include "storyuml/textnorm.h"

namespace storyuml::lingpipe {

struct Token {
  int index = 0;  // position within the sentence
  std::string text;
  std::string lemma;
  PosTag pos = PosTag::kX;
  DepLabel dep = DepLabel::kNone;
  int sentence_index = 0;
  std::size_t offset = 0;  // byte offset of `text` within the sentence

  friend bool operator==(const Token&, const Token&) = default;
};

// A verb that opens a clause segment, with the token indices of its subject
// and direct object. An inherited subject points at the token labelled NSUBJ
// in an earlier clause of the same sentence.
struct Clause {
  int verb = 0;
  std::optional<int> subject;
  std::optional<int> object;
  bool subject_inherited = false;
  bool finite = true;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct TaggedSentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<Clause> clauses;

  friend bool operator==(const TaggedSentence&,
                         const TaggedSentence&) = default;
};

// Irregular lemmas keyed by (lowercase word, tag). File format:
// word<TAB>pos<TAB>lemma.
class LemmaExceptions {
 public:
  static LemmaExceptions Load(const std::filesystem::path& path);

  void Add(std::string_view word, PosTag pos, std::string_view lemma);
  std::optional<std::string> Find(std::string_view lowercase_word,
                                  PosTag pos) const;

 private:
  std::map<std::pair<std::string, PosTag>, std::string> table_;
};

// Everything the analysis stages read. Loaded once, then shared read-only.
struct Resources {
  textnorm::Lexicon lexicon;
  LemmaExceptions exceptions;
  textnorm::Abbreviations abbreviations;

  // Loads lexicon.tsv, closed_class.tsv, proper_nouns.txt,
  // lemma_exceptions.tsv and abbreviations.txt from `dir`.
  static Resources Load(const std::filesystem::path& dir);
  // STORYUML_RESOURCES from the environment, else the compiled-in data dir.
  static std::filesystem::path DefaultDir();
};

struct SurfaceToken {
  std::string text;
  std::size_t offset = 0;

  friend bool operator==(const SurfaceToken&, const SurfaceToken&) = default;
};

struct DepOptions {
  // Let verbs after infinitival "to" open object-only clauses.
  bool include_infinitives = false;
};

// Splits at '.', '!' or '?' followed by whitespace and a capital letter, or
// at the end of the text. Abbreviations never end a sentence. Throws
// Error(kEmptyInput) for blank text.
std::vector<std::string> SegmentSentences(
    std::string_view text,
    const textnorm::Abbreviations& abbreviations =
        textnorm::Abbreviations::Default());

// Whitespace split; leading and trailing punctuation become separate tokens,
// hyphenated words stay whole and possessive "'s" is split off.
std::vector<SurfaceToken> Tokenize(
    std::string_view sentence,
    const textnorm::Abbreviations& abbreviations =
        textnorm::Abbreviations::Default());

// Inverse of Tokenize for single-spaced text.
std::string Detokenize(std::span<const SurfaceToken> tokens);

std::vector<std::pair<std::string, PosTag>> PosTagTokens(
    std::span<const std::string> tokens, const textnorm::Lexicon& lexicon,
    const LemmaExceptions& exceptions);

std::string Lemmatize(std::string_view token, PosTag pos,
                      const textnorm::Lexicon& lexicon,
                      const LemmaExceptions& exceptions);

// Labels NSUBJ/DOBJ and fills `clauses`. Existing labels are reset.
TaggedSentence DepLite(TaggedSentence sentence, DepOptions options = {});

// Segment, tokenize, tag, lemmatize and label a normalized text.
std::vector<TaggedSentence> Analyze(std::string_view text,
                                    const Resources& resources,
                                    DepOptions options = {});

}  // namespace storyuml::lingpipe

#endif  // STORYUML_LINGPIPE_H_
