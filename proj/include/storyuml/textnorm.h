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

#ifndef STORYUML_TEXTNORM_H_
#define STORYUML_TEXTNORM_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "storyuml/tags.h"

namespace storyuml::textnorm {

// Word list used for spelling correction and tagging. Immutable once loaded;
// share it freely between threads.
//
// Three tables feed it:
//   lexicon.tsv       word<TAB>frequency[<TAB>TAG]
//   closed_class.tsv  word<TAB>TAG
//   proper_nouns.txt  one name per line
// All words are lowercase. Lines starting with '#' are comments. The optional
// third lexicon column is the word's most frequent open-class tag.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon Load(const std::filesystem::path& words,
                      const std::filesystem::path& closed_class,
                      const std::filesystem::path& proper_nouns = {});

  // Builders. Each throws std::invalid_argument for words that are empty,
  // contain whitespace or uppercase letters.
  void AddWord(std::string_view word, std::int64_t frequency,
               std::optional<PosTag> tag = std::nullopt);
  void AddClosedClass(std::string_view word, PosTag tag);
  void AddProperNoun(std::string_view name);

  bool Contains(std::string_view lowercase_word) const;
  std::int64_t Frequency(std::string_view lowercase_word) const;
  std::optional<PosTag> ClosedClassTag(std::string_view lowercase_word) const;
  std::optional<PosTag> MostFrequentTag(std::string_view lowercase_word) const;
  bool IsProperNoun(std::string_view lowercase_word) const;

  const std::set<std::string, std::less<>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::set<std::string, std::less<>> entries_;
  std::map<std::string, std::int64_t, std::less<>> frequencies_;
  std::map<std::string, PosTag, std::less<>> closed_class_;
  std::map<std::string, PosTag, std::less<>> open_tags_;
  std::set<std::string, std::less<>> proper_nouns_;
};

// Tokens that end in a period without ending a sentence ("mr.", "e.g.").
class Abbreviations {
 public:
  Abbreviations() = default;
  explicit Abbreviations(std::set<std::string, std::less<>> entries)
      : entries_(std::move(entries)) {}

  static Abbreviations Load(const std::filesystem::path& path);
  // Small built-in list used when no file is configured.
  static const Abbreviations& Default();

  // Case-insensitive; `token` includes its trailing period.
  bool Contains(std::string_view token) const;

 private:
  std::set<std::string, std::less<>> entries_;
};

struct Replacement {
  std::string original;
  std::string corrected;
  std::size_t offset = 0;  // byte offset of `original` in the input text
  int distance = 0;

  friend bool operator==(const Replacement&, const Replacement&) = default;
};

struct CorrectionReport {
  std::vector<Replacement> replacements;   // offsets strictly increasing
  std::vector<std::string> untouched_unknown;

  friend bool operator==(const CorrectionReport&,
                         const CorrectionReport&) = default;
};

struct CorrectionResult {
  std::string text;
  CorrectionReport report;
};

// Maps typographic quotes and dashes to ASCII, collapses whitespace, trims,
// and appends a period when the text lacks sentence-final punctuation.
// Throws Error(kEmptyInput) when nothing is left.
std::string NormalizeText(std::string_view raw);

// Dictionary-lookup spelling correction. Unknown alphabetic words are
// replaced by the closest lexicon entry within Damerau-Levenshtein distance
// 2, ranked by (distance, frequency descending, word). Capitalized unknown
// words inside a sentence and gazetteer names are presumed proper nouns and
// left alone. The first letter's case is carried over to the replacement.
CorrectionResult CorrectSpelling(
    std::string_view text, const Lexicon& lexicon,
    const Abbreviations& abbreviations = Abbreviations::Default());

// Unrestricted Damerau-Levenshtein distance (adjacent transpositions).
int DamerauLevenshtein(std::string_view a, std::string_view b);

// Lowercases ASCII letters.
std::string ToLower(std::string_view s);

}  // namespace storyuml::textnorm

#endif  // STORYUML_TEXTNORM_H_
