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

#include "storyuml/textnorm.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <tuple>

#include "storyuml/error.h"

namespace storyuml::textnorm {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsAlpha(char c) { return (c >= 'a' && c <= 'z') || IsUpper(c); }
bool IsAlnum(char c) { return IsAlpha(c) || (c >= '0' && c <= '9'); }

void CheckWord(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("empty lexicon word");
  for (char c : word) {
    if (IsSpace(c) || IsUpper(c)) {
      throw std::invalid_argument("lexicon word must be lowercase without "
                                  "whitespace: '" + std::string(word) + "'");
    }
  }
}

// Splits a table file into tab-separated fields, skipping blanks and '#'.
template <typename Fn>
void ForEachRecord(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    try {
      fn(fields);
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::kMalformedFile, path.string() + ":" +
                                                 std::to_string(line_no) +
                                                 ": " + e.what());
    }
  }
}

PosTag RequireTag(const std::string& name) {
  auto tag = ParsePosTag(name);
  if (!tag) throw std::invalid_argument("unknown tag '" + name + "'");
  return *tag;
}

// Strips trailing closing quotes and brackets.
std::string_view StripClosers(std::string_view s) {
  while (!s.empty() &&
         (s.back() == '"' || s.back() == '\'' || s.back() == ')' ||
          s.back() == ']')) {
    s.remove_suffix(1);
  }
  return s;
}

bool EndsSentence(std::string_view chunk, const Abbreviations& abbreviations) {
  std::string_view core = StripClosers(chunk);
  if (core.empty()) return false;
  char last = core.back();
  if (last != '.' && last != '!' && last != '?') return false;
  return !(last == '.' && abbreviations.Contains(core));
}

}  // namespace

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (IsUpper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// ----- Lexicon ----- //

Lexicon Lexicon::Load(const std::filesystem::path& words,
                      const std::filesystem::path& closed_class,
                      const std::filesystem::path& proper_nouns) {
  Lexicon lexicon;
  ForEachRecord(words, [&](const std::vector<std::string>& f) {
    if (f.size() < 2 || f.size() > 3) {
      throw std::invalid_argument("expected word<TAB>frequency[<TAB>TAG]");
    }
    std::int64_t freq = 0;
    auto [ptr, ec] =
        std::from_chars(f[1].data(), f[1].data() + f[1].size(), freq);
    if (ec != std::errc() || ptr != f[1].data() + f[1].size() || freq < 0) {
      throw std::invalid_argument("bad frequency '" + f[1] + "'");
    }
    std::optional<PosTag> tag;
    if (f.size() == 3 && !f[2].empty()) tag = RequireTag(f[2]);
    lexicon.AddWord(f[0], freq, tag);
  });
  ForEachRecord(closed_class, [&](const std::vector<std::string>& f) {
    if (f.size() != 2) throw std::invalid_argument("expected word<TAB>TAG");
    lexicon.AddClosedClass(f[0], RequireTag(f[1]));
  });
  if (!proper_nouns.empty()) {
    ForEachRecord(proper_nouns, [&](const std::vector<std::string>& f) {
      lexicon.AddProperNoun(f[0]);
    });
  }
  return lexicon;
}

void Lexicon::AddWord(std::string_view word, std::int64_t frequency,
                      std::optional<PosTag> tag) {
  CheckWord(word);
  if (frequency < 0) throw std::invalid_argument("negative frequency");
  std::string w(word);
  entries_.insert(w);
  frequencies_[w] = frequency;
  if (tag) open_tags_[w] = *tag;
}

void Lexicon::AddClosedClass(std::string_view word, PosTag tag) {
  CheckWord(word);
  std::string w(word);
  entries_.insert(w);
  closed_class_[w] = tag;
}

void Lexicon::AddProperNoun(std::string_view name) {
  CheckWord(name);
  proper_nouns_.insert(std::string(name));
}

bool Lexicon::Contains(std::string_view lowercase_word) const {
  return entries_.find(lowercase_word) != entries_.end();
}

std::int64_t Lexicon::Frequency(std::string_view lowercase_word) const {
  auto it = frequencies_.find(lowercase_word);
  return it == frequencies_.end() ? 0 : it->second;
}

std::optional<PosTag> Lexicon::ClosedClassTag(
    std::string_view lowercase_word) const {
  auto it = closed_class_.find(lowercase_word);
  if (it == closed_class_.end()) return std::nullopt;
  return it->second;
}

std::optional<PosTag> Lexicon::MostFrequentTag(
    std::string_view lowercase_word) const {
  auto it = open_tags_.find(lowercase_word);
  if (it == open_tags_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::IsProperNoun(std::string_view lowercase_word) const {
  return proper_nouns_.find(lowercase_word) != proper_nouns_.end();
}

// ----- Abbreviations ----- //

Abbreviations Abbreviations::Load(const std::filesystem::path& path) {
  std::set<std::string, std::less<>> entries;
  ForEachRecord(path, [&](const std::vector<std::string>& f) {
    if (f[0].empty() || f[0].back() != '.') {
      throw std::invalid_argument("abbreviation must end with '.'");
    }
    entries.insert(ToLower(f[0]));
  });
  return Abbreviations(std::move(entries));
}

const Abbreviations& Abbreviations::Default() {
  static const Abbreviations kDefault({"mr.", "mrs.", "ms.", "dr.", "prof.",
                                       "st.", "e.g.", "i.e.", "vs.", "no.",
                                       "inc.", "ltd.", "a.m.", "p.m."});
  return kDefault;
}

bool Abbreviations::Contains(std::string_view token) const {
  return entries_.find(ToLower(token)) != entries_.end();
}

// ----- Normalization ----- //

std::string NormalizeText(std::string_view raw) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 9>
      kMap = {{
          {"\xE2\x80\x98", "'"},    // left single quote
          {"\xE2\x80\x99", "'"},    // right single quote
          {"\xE2\x80\x9C", "\""},   // left double quote
          {"\xE2\x80\x9D", "\""},   // right double quote
          {"\xE2\x80\x93", "-"},    // en dash
          {"\xE2\x80\x94", "-"},    // em dash
          {"\xE2\x88\x92", "-"},    // minus sign
          {"\xE2\x80\xA6", "..."},  // ellipsis
          {"\xC2\xA0", " "},        // no-break space
      }};

  std::string mapped;
  mapped.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    bool replaced = false;
    for (const auto& [from, to] : kMap) {
      if (raw.substr(i, from.size()) == from) {
        mapped += to;
        i += from.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) mapped += raw[i++];
  }

  std::string out;
  out.reserve(mapped.size() + 1);
  bool pending_space = false;
  for (char c : mapped) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyInput, "input is empty after normalization");
  }
  std::string_view core = StripClosers(out);
  if (core.empty() || (core.back() != '.' && core.back() != '!' &&
                       core.back() != '?')) {
    out += '.';
  }
  return out;
}

// ----- Spelling correction ----- //

int DamerauLevenshtein(std::string_view a, std::string_view b) {
  // Lowrance-Wagner with a last-row-seen table over bytes.
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  const int inf = n + m;
  std::vector<int> d((n + 2) * (m + 2), 0);
  auto at = [&](int i, int j) -> int& { return d[i * (m + 2) + j]; };
  at(0, 0) = inf;
  for (int i = 0; i <= n; ++i) {
    at(i + 1, 0) = inf;
    at(i + 1, 1) = i;
  }
  for (int j = 0; j <= m; ++j) {
    at(0, j + 1) = inf;
    at(1, j + 1) = j;
  }
  std::array<int, 256> last_row{};
  for (int i = 1; i <= n; ++i) {
    int last_match_col = 0;
    for (int j = 1; j <= m; ++j) {
      const int i1 = last_row[static_cast<unsigned char>(b[j - 1])];
      const int j1 = last_match_col;
      int cost = 1;
      if (a[i - 1] == b[j - 1]) {
        cost = 0;
        last_match_col = j;
      }
      at(i + 1, j + 1) = std::min({at(i, j) + cost, at(i + 1, j) + 1,
                                   at(i, j + 1) + 1,
                                   at(i1, j1) + (i - i1 - 1) + 1 + (j - j1 - 1)});
    }
    last_row[static_cast<unsigned char>(a[i - 1])] = i;
  }
  return at(n + 1, m + 1);
}

CorrectionResult CorrectSpelling(std::string_view text, const Lexicon& lexicon,
                                 const Abbreviations& abbreviations) {
  constexpr int kMaxDistance = 2;
  CorrectionResult result;
  result.text.reserve(text.size());

  std::size_t copied = 0;  // input bytes already emitted
  bool sentence_initial = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !IsSpace(text[end])) ++end;
    std::string_view chunk = text.substr(pos, end - pos);

    std::size_t lead = 0;
    while (lead < chunk.size() && !IsAlnum(chunk[lead])) ++lead;
    std::size_t trail = chunk.size();
    while (trail > lead && !IsAlnum(chunk[trail - 1])) --trail;
    std::string_view core = chunk.substr(lead, trail - lead);

    const bool alphabetic =
        !core.empty() && std::all_of(core.begin(), core.end(), IsAlpha);
    const bool abbreviation =
        chunk.back() == '.' && abbreviations.Contains(StripClosers(chunk));
    if (alphabetic && !abbreviation) {
      const std::string lower = ToLower(core);
      if (!lexicon.Contains(lower)) {
        const bool capitalized = IsUpper(core.front());
        if (lexicon.IsProperNoun(lower) || (capitalized && !sentence_initial)) {
          result.report.untouched_unknown.emplace_back(core);
        } else {
          // Brute-force scan; the lexicon holds a few thousand words.
          const std::string* best = nullptr;
          int best_distance = kMaxDistance + 1;
          std::int64_t best_freq = 0;
          for (const std::string& candidate : lexicon.entries()) {
            const int len_gap = static_cast<int>(candidate.size()) -
                                static_cast<int>(lower.size());
            if (len_gap > kMaxDistance || -len_gap > kMaxDistance) continue;
            const int d = DamerauLevenshtein(lower, candidate);
            if (d > kMaxDistance) continue;
            const std::int64_t freq = lexicon.Frequency(candidate);
            // Entries iterate in lexicographic order, so ties keep the first.
            if (d < best_distance ||
                (d == best_distance && freq > best_freq)) {
              best = &candidate;
              best_distance = d;
              best_freq = freq;
            }
          }
          if (best == nullptr) {
            result.report.untouched_unknown.emplace_back(core);
          } else {
            std::string corrected = *best;
            if (capitalized && IsAlpha(corrected.front())) {
              corrected.front() =
                  static_cast<char>(corrected.front() - 'a' + 'A');
            }
            const std::size_t offset = pos + lead;
            result.text.append(text.substr(copied, offset - copied));
            result.text += corrected;
            copied = offset + core.size();
            result.report.replacements.push_back(
                {std::string(core), corrected, offset, best_distance});
          }
        }
      }
    }
    sentence_initial = EndsSentence(chunk, abbreviations);
    pos = end;
  }
  result.text.append(text.substr(copied));
  return result;
}

}  // namespace storyuml::textnorm
