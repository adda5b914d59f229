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

#include "storyuml/lingpipe.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "storyuml/error.h"

namespace storyuml::lingpipe {
namespace {

using textnorm::ToLower;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAlpha(char c) { return (c >= 'a' && c <= 'z') || IsUpper(c); }
bool IsAlnum(char c) { return IsAlpha(c) || IsDigit(c); }
bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsOpener(char c) { return c == '"' || c == '\'' || c == '(' || c == '['; }
bool IsCloser(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

bool EndsSentence(std::string_view chunk,
                  const textnorm::Abbreviations& abbreviations) {
  while (!chunk.empty() && IsCloser(chunk.back())) chunk.remove_suffix(1);
  if (chunk.empty()) return false;
  const char last = chunk.back();
  if (last == '!' || last == '?') return true;
  return last == '.' && !abbreviations.Contains(chunk);
}

bool StartsCapitalized(std::string_view chunk) {
  while (!chunk.empty() && IsOpener(chunk.front())) chunk.remove_prefix(1);
  return !chunk.empty() && IsUpper(chunk.front());
}

bool InNounPhrase(PosTag t) {
  return t == PosTag::kDet || t == PosTag::kAdj || t == PosTag::kNum ||
         t == PosTag::kNoun || t == PosTag::kPropn || t == PosTag::kPron;
}

bool IsHead(PosTag t) {
  return t == PosTag::kNoun || t == PosTag::kPropn || t == PosTag::kPron;
}

// Object search stops at these.
bool IsClauseStop(PosTag t) {
  return t == PosTag::kVerb || t == PosTag::kAux || t == PosTag::kPart ||
         t == PosTag::kConj || t == PosTag::kPunct;
}

// Head of the first noun phrase in [begin, end), scanning rightwards.
std::optional<int> FirstHead(const std::vector<Token>& toks, int begin,
                             int end) {
  int i = begin;
  while (i < end) {
    if (!InNounPhrase(toks[i].pos)) {
      ++i;
      continue;
    }
    int j = i;
    std::optional<int> head;
    while (j < end && InNounPhrase(toks[j].pos)) {
      if (IsHead(toks[j].pos)) head = j;
      ++j;
    }
    if (head) return head;
    i = j;
  }
  return std::nullopt;
}

// Head of the noun phrase nearest to `end` within [begin, end).
std::optional<int> LastHead(const std::vector<Token>& toks, int begin,
                            int end) {
  int j = end - 1;
  while (j >= begin) {
    if (!InNounPhrase(toks[j].pos)) {
      --j;
      continue;
    }
    // The run ends at j; its head is the last head-capable token in it.
    std::optional<int> head;
    int i = j;
    while (i >= begin && InNounPhrase(toks[i].pos)) {
      if (!head && IsHead(toks[i].pos)) head = i;
      --i;
    }
    if (head) return head;
    j = i;
  }
  return std::nullopt;
}

// Tries each candidate in order and returns the first one the lexicon knows.
std::optional<std::string> FirstKnown(
    const textnorm::Lexicon& lexicon,
    std::initializer_list<std::string> candidates) {
  for (const auto& c : candidates) {
    if (!c.empty() && lexicon.Contains(c)) return c;
  }
  return std::nullopt;
}

bool EndsDoubled(std::string_view stem) {
  const std::size_t n = stem.size();
  return n >= 2 && stem[n - 1] == stem[n - 2] && !IsVowel(stem[n - 1]);
}

// Undoes -ing / -ed / -er / -est given the bare stem.
std::optional<std::string> RestoreStem(const textnorm::Lexicon& lexicon,
                                       const std::string& stem) {
  if (stem.empty()) return std::nullopt;
  if (EndsDoubled(stem)) {
    return FirstKnown(lexicon, {stem, stem.substr(0, stem.size() - 1)});
  }
  return FirstKnown(lexicon, {stem + "e", stem});
}

std::string Strip(std::string_view w, std::size_t n) {
  return std::string(w.substr(0, w.size() - n));
}

std::optional<std::string> NounLemma(const textnorm::Lexicon& lexicon,
                                     std::string_view w) {
  if (EndsWith(w, "ies") && w.size() > 3) {
    if (auto l = FirstKnown(lexicon, {Strip(w, 3) + "y"})) return l;
  }
  if (EndsWith(w, "es") && w.size() > 2) {
    const std::string stem = Strip(w, 2);
    if (EndsWith(stem, "s") || EndsWith(stem, "x") || EndsWith(stem, "z") ||
        EndsWith(stem, "ch") || EndsWith(stem, "sh")) {
      if (auto l = FirstKnown(lexicon, {stem})) return l;
    }
  }
  // "bookings" is a plural gerund, not a third-person form of "booking".
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && !EndsWith(w, "ings") &&
      w.size() > 1) {
    if (auto l = FirstKnown(lexicon, {Strip(w, 1)})) return l;
  }
  return std::nullopt;
}

std::optional<std::string> VerbLemma(const textnorm::Lexicon& lexicon,
                                     std::string_view w) {
  if (EndsWith(w, "ies") && w.size() > 3) {
    if (auto l = FirstKnown(lexicon, {Strip(w, 3) + "y"})) return l;
  }
  if (EndsWith(w, "ing") && w.size() > 4) {
    if (auto l = RestoreStem(lexicon, Strip(w, 3))) return l;
  }
  if (EndsWith(w, "ed") && w.size() > 3) {
    if (EndsWith(w, "ied")) {
      if (auto l = FirstKnown(lexicon, {Strip(w, 3) + "y"})) return l;
    }
    if (auto l = RestoreStem(lexicon, Strip(w, 2))) return l;
  }
  // "bookings" is a plural gerund, not a third-person form of "booking".
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && !EndsWith(w, "ings") &&
      w.size() > 1) {
    if (auto l = FirstKnown(lexicon, {Strip(w, 1)})) return l;
    if (EndsWith(w, "es")) {
      if (auto l = FirstKnown(lexicon, {Strip(w, 2)})) return l;
    }
  }
  return std::nullopt;
}

std::optional<std::string> AdjLemma(const textnorm::Lexicon& lexicon,
                                    std::string_view w) {
  for (std::string_view suffix : {"est", "er"}) {
    if (!EndsWith(w, suffix) || w.size() <= suffix.size() + 1) continue;
    const std::string stem = Strip(w, suffix.size());
    if (stem.back() == 'i') {
      if (auto l = FirstKnown(lexicon, {stem.substr(0, stem.size() - 1) + "y"}))
        return l;
    }
    if (auto l = RestoreStem(lexicon, stem)) return l;
  }
  return std::nullopt;
}

std::optional<PosTag> SuffixTag(std::string_view w) {
  struct Rule {
    std::string_view suffix;
    PosTag tag;
  };
  static constexpr Rule kRules[] = {
      {"ly", PosTag::kAdv},    {"tion", PosTag::kNoun}, {"ment", PosTag::kNoun},
      {"ness", PosTag::kNoun}, {"ity", PosTag::kNoun},  {"ize", PosTag::kVerb},
      {"ise", PosTag::kVerb},  {"ous", PosTag::kAdj},   {"ful", PosTag::kAdj},
      {"able", PosTag::kAdj},  {"ive", PosTag::kAdj},   {"izes", PosTag::kVerb},
      {"ate", PosTag::kVerb},  {"ates", PosTag::kVerb}, {"ify", PosTag::kVerb},
      {"ifies", PosTag::kVerb},
  };
  for (const Rule& r : kRules) {
    if (w.size() > r.suffix.size() + 1 && EndsWith(w, r.suffix)) return r.tag;
  }
  return std::nullopt;
}

}  // namespace

// ----- Resources ----- //

LemmaExceptions LemmaExceptions::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  LemmaExceptions table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 =
        t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    std::optional<PosTag> pos;
    if (t2 != std::string::npos) {
      pos = ParsePosTag(line.substr(t1 + 1, t2 - t1 - 1));
    }
    if (!pos || t2 + 1 >= line.size() || t1 == 0) {
      throw Error(ErrorCode::kMalformedFile,
                  path.string() + ":" + std::to_string(line_no) +
                      ": expected word<TAB>pos<TAB>lemma");
    }
    table.Add(line.substr(0, t1), *pos, line.substr(t2 + 1));
  }
  return table;
}

void LemmaExceptions::Add(std::string_view word, PosTag pos,
                          std::string_view lemma) {
  table_[{ToLower(word), pos}] = ToLower(lemma);
}

std::optional<std::string> LemmaExceptions::Find(
    std::string_view lowercase_word, PosTag pos) const {
  auto it = table_.find({std::string(lowercase_word), pos});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

Resources Resources::Load(const std::filesystem::path& dir) {
  Resources r;
  r.lexicon = textnorm::Lexicon::Load(dir / "lexicon.tsv",
                                      dir / "closed_class.tsv",
                                      dir / "proper_nouns.txt");
  r.exceptions = LemmaExceptions::Load(dir / "lemma_exceptions.tsv");
  r.abbreviations = textnorm::Abbreviations::Load(dir / "abbreviations.txt");
  return r;
}

std::filesystem::path Resources::DefaultDir() {
  if (const char* env = std::getenv("STORYUML_RESOURCES"); env && *env) {
    return env;
  }
  return STORYUML_RESOURCE_DIR;
}

// ----- Segmentation and tokenization ----- //

std::vector<std::string> SegmentSentences(
    std::string_view text, const textnorm::Abbreviations& abbreviations) {
  std::vector<std::string> sentences;
  std::size_t sentence_start = std::string_view::npos;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !IsSpace(text[end])) ++end;
    if (sentence_start == std::string_view::npos) sentence_start = pos;

    std::size_t next = end;
    while (next < text.size() && IsSpace(text[next])) ++next;
    const bool at_end = next >= text.size();
    std::size_t next_end = next;
    while (next_end < text.size() && !IsSpace(text[next_end])) ++next_end;

    const std::string_view chunk = text.substr(pos, end - pos);
    if (EndsSentence(chunk, abbreviations) &&
        (at_end ||
         StartsCapitalized(text.substr(next, next_end - next)))) {
      sentences.emplace_back(
          text.substr(sentence_start, end - sentence_start));
      sentence_start = std::string_view::npos;
    }
    pos = end;
  }
  if (sentence_start != std::string_view::npos) {
    std::string_view rest = text.substr(sentence_start);
    while (!rest.empty() && IsSpace(rest.back())) rest.remove_suffix(1);
    sentences.emplace_back(rest);
  }
  if (sentences.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no sentences in input");
  }
  return sentences;
}

std::vector<SurfaceToken> Tokenize(
    std::string_view sentence, const textnorm::Abbreviations& abbreviations) {
  std::vector<SurfaceToken> out;
  std::size_t pos = 0;
  while (pos < sentence.size()) {
    while (pos < sentence.size() && IsSpace(sentence[pos])) ++pos;
    if (pos >= sentence.size()) break;
    std::size_t end = pos;
    while (end < sentence.size() && !IsSpace(sentence[end])) ++end;

    std::size_t b = pos;
    std::size_t e = end;
    auto is_punct = [&](std::size_t i) {
      return !IsAlnum(sentence[i]) &&
             (static_cast<unsigned char>(sentence[i]) < 0x80);
    };
    while (b < e && is_punct(b)) {
      out.push_back({std::string(1, sentence[b]), b});
      ++b;
    }
    std::vector<SurfaceToken> trailing;
    while (e > b && !abbreviations.Contains(sentence.substr(b, e - b)) &&
           is_punct(e - 1)) {
      --e;
      trailing.push_back({std::string(1, sentence[e]), e});
    }
    if (e > b) {
      std::string_view word = sentence.substr(b, e - b);
      if (word.size() > 2 && (EndsWith(word, "'s") || EndsWith(word, "'S"))) {
        out.push_back({std::string(word.substr(0, word.size() - 2)), b});
        out.push_back({std::string(word.substr(word.size() - 2)),
                       b + word.size() - 2});
      } else {
        out.push_back({std::string(word), b});
      }
    }
    out.insert(out.end(), trailing.rbegin(), trailing.rend());
    pos = end;
  }
  return out;
}

std::string Detokenize(std::span<const SurfaceToken> tokens) {
  std::string out;
  for (const SurfaceToken& t : tokens) {
    if (out.size() < t.offset) out.append(t.offset - out.size(), ' ');
    out += t.text;
  }
  return out;
}

// ----- Tagging ----- //

std::vector<std::pair<std::string, PosTag>> PosTagTokens(
    std::span<const std::string> tokens, const textnorm::Lexicon& lexicon,
    const LemmaExceptions& exceptions) {
  std::vector<std::pair<std::string, PosTag>> out;
  out.reserve(tokens.size());
  bool seen_word = false;
  for (const std::string& text : tokens) {
    const bool has_alnum = std::any_of(text.begin(), text.end(), IsAlnum);
    if (!has_alnum) {
      out.emplace_back(text, PosTag::kPunct);
      continue;
    }
    const bool sentence_initial = !seen_word;
    seen_word = true;
    if (IsDigit(text.front())) {
      out.emplace_back(text, PosTag::kNum);
      continue;
    }
    if (text == "'s" || text == "'S") {
      out.emplace_back(text, PosTag::kDet);
      continue;
    }
    const std::string lower = ToLower(text);
    const bool capitalized = IsUpper(text.front());

    PosTag tag = PosTag::kNoun;
    if (auto closed = lexicon.ClosedClassTag(lower)) {
      tag = *closed;
    } else if (auto open = lexicon.MostFrequentTag(
                   sentence_initial || !capitalized ? lower : text)) {
      tag = *open;
    } else if (lexicon.IsProperNoun(lower) && capitalized) {
      tag = PosTag::kPropn;
    } else if (auto suffix = SuffixTag(lower)) {
      tag = *suffix;
    } else if (capitalized && !sentence_initial) {
      tag = PosTag::kPropn;
    }
    out.emplace_back(text, tag);
  }

  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].second == PosTag::kVerb && out[i - 1].second == PosTag::kDet) {
      out[i].second = PosTag::kNoun;
    }
  }
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (ToLower(out[i].first) != "to" || out[i + 1].second != PosTag::kVerb) {
      continue;
    }
    const std::string next = ToLower(out[i + 1].first);
    if (Lemmatize(next, PosTag::kVerb, lexicon, exceptions) == next) {
      out[i].second = PosTag::kPart;
    }
  }
  return out;
}

std::string Lemmatize(std::string_view token, PosTag pos,
                      const textnorm::Lexicon& lexicon,
                      const LemmaExceptions& exceptions) {
  std::string lower = ToLower(token);
  if (auto irregular = exceptions.Find(lower, pos)) return *irregular;
  if (!std::all_of(lower.begin(), lower.end(), IsAlpha)) return lower;
  std::optional<std::string> lemma;
  switch (pos) {
    case PosTag::kNoun:
      lemma = NounLemma(lexicon, lower);
      break;
    case PosTag::kVerb:
      lemma = VerbLemma(lexicon, lower);
      break;
    case PosTag::kAdj:
      lemma = AdjLemma(lexicon, lower);
      break;
    default:
      break;
  }
  return lemma.value_or(lower);
}

// ----- Shallow dependencies ----- //

TaggedSentence DepLite(TaggedSentence sentence, DepOptions options) {
  std::vector<Token>& toks = sentence.tokens;
  const int n = static_cast<int>(toks.size());
  for (Token& t : toks) t.dep = DepLabel::kNone;
  sentence.clauses.clear();

  auto is_finite = [&](int i) {
    return toks[i].pos == PosTag::kVerb &&
           !(i > 0 && toks[i - 1].pos == PosTag::kPart);
  };

  std::optional<int> last_subject;  // NSUBJ carried into coordinated clauses
  for (int v = 0; v < n; ++v) {
    if (toks[v].pos != PosTag::kVerb) continue;
    const bool finite = is_finite(v);
    if (!finite && !options.include_infinitives) continue;

    Clause clause;
    clause.verb = v;
    clause.finite = finite;

    if (finite) {
      // The subject is searched between the previous clause's material and
      // the verb; a CONJ or PUNCT in between starts a fresh region.
      int region_begin = 0;
      if (!sentence.clauses.empty()) {
        const Clause& prev = sentence.clauses.back();
        region_begin = prev.object ? *prev.object + 1 : prev.verb + 1;
        for (int i = v - 1; i > prev.verb; --i) {
          if (toks[i].pos == PosTag::kConj || toks[i].pos == PosTag::kPunct) {
            region_begin = std::max(region_begin, i + 1);
            break;
          }
        }
      }
      if (auto subject = LastHead(toks, region_begin, v)) {
        clause.subject = subject;
        toks[*subject].dep = DepLabel::kNsubj;
        last_subject = subject;
      } else if (last_subject) {
        clause.subject = last_subject;
        clause.subject_inherited = true;
      }
    } else if (last_subject) {
      clause.subject = last_subject;
      clause.subject_inherited = true;
    }

    int region_end = v + 1;
    while (region_end < n && !IsClauseStop(toks[region_end].pos)) ++region_end;
    if (auto object = FirstHead(toks, v + 1, region_end)) {
      clause.object = object;
      toks[*object].dep = DepLabel::kDobj;
    }
    sentence.clauses.push_back(clause);
  }
  return sentence;
}

std::vector<TaggedSentence> Analyze(std::string_view text,
                                    const Resources& resources,
                                    DepOptions options) {
  std::vector<TaggedSentence> out;
  const auto sentences = SegmentSentences(text, resources.abbreviations);
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const auto surface = Tokenize(sentences[s], resources.abbreviations);
    std::vector<std::string> words;
    words.reserve(surface.size());
    for (const auto& t : surface) words.push_back(t.text);
    const auto tagged =
        PosTagTokens(words, resources.lexicon, resources.exceptions);

    TaggedSentence sentence;
    sentence.text = sentences[s];
    for (std::size_t i = 0; i < surface.size(); ++i) {
      Token tok;
      tok.index = static_cast<int>(i);
      tok.text = surface[i].text;
      tok.offset = surface[i].offset;
      tok.pos = tagged[i].second;
      tok.lemma = Lemmatize(tok.text, tok.pos, resources.lexicon,
                            resources.exceptions);
      tok.sentence_index = static_cast<int>(s);
      sentence.tokens.push_back(std::move(tok));
    }
    out.push_back(DepLite(std::move(sentence), options));
  }
  return out;
}

}  // namespace storyuml::lingpipe
