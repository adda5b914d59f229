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

#include <doctest.h>

#include <random>

#include "storyuml/error.h"
#include "storyuml/textnorm.h"
#include "test_support.h"

namespace storyuml {
namespace {

using testing::TestResources;

TEST_SUITE("textnorm") {

TEST_CASE("normalize maps typography and terminates the text") {
  CHECK(textnorm::NormalizeText("  A “customer”  buys\n\ta product")
        == "A \"customer\" buys a product.");
  CHECK(textnorm::NormalizeText("It’s done – really!") ==
        "It's done - really!");
  CHECK(textnorm::NormalizeText("Is it?") == "Is it?");
  CHECK(textnorm::NormalizeText("He said \"stop.\"") == "He said \"stop.\"");
}

TEST_CASE("normalize rejects blank input") {
  for (const char* blank : {"", "   ", "\n\t ", " "}) {
    try {
      textnorm::NormalizeText(blank);
      FAIL("expected EmptyInput for '" << blank << "'");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kEmptyInput);
    }
  }
}

TEST_CASE("damerau-levenshtein known values") {
  using textnorm::DamerauLevenshtein;
  CHECK(DamerauLevenshtein("", "") == 0);
  CHECK(DamerauLevenshtein("", "abc") == 3);
  CHECK(DamerauLevenshtein("kitten", "sitting") == 3);
  CHECK(DamerauLevenshtein("ab", "ba") == 1);
  // Unrestricted: the transposed pair may be edited again.
  CHECK(DamerauLevenshtein("ca", "abc") == 2);
  CHECK(DamerauLevenshtein("custmer", "customer") == 1);
  CHECK(DamerauLevenshtein("prodcut", "product") == 1);
}

TEST_CASE("damerau-levenshtein agrees with edit enumeration up to two") {
  const std::string alphabet = "abc";
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> letter(0, 2);
  auto word = [&] {
    std::string w(static_cast<std::size_t>(len(rng)), 'a');
    for (char& c : w) c = alphabet[static_cast<std::size_t>(letter(rng))];
    return w;
  };
  for (int i = 0; i < 400; ++i) {
    const std::string a = word();
    const std::string b = word();
    const int got = textnorm::DamerauLevenshtein(a, b);
    const int want = testing::CappedEditDistance(a, b, alphabet);
    INFO(a << " vs " << b);
    CHECK(std::min(got, 3) == want);
    CHECK(got == textnorm::DamerauLevenshtein(b, a));
  }
}

TEST_CASE("spelling correction fixes near misses") {
  const auto& r = TestResources();
  auto result = textnorm::CorrectSpelling("A custmer buys a prodcut.",
                                          r.lexicon, r.abbreviations);
  CHECK(result.text == "A customer buys a product.");
  REQUIRE(result.report.replacements.size() == 2);
  CHECK(result.report.replacements[0].original == "custmer");
  CHECK(result.report.replacements[0].corrected == "customer");
  CHECK(result.report.replacements[0].offset == 2);
  CHECK(result.report.replacements[0].distance == 1);
  CHECK(result.report.replacements[1].original == "prodcut");
  CHECK(result.report.replacements[1].offset == 17);
  CHECK(result.report.untouched_unknown.empty());
}

TEST_CASE("spelling correction keeps the first letter's case") {
  const auto& r = TestResources();
  auto result = textnorm::CorrectSpelling("Custmer pays.", r.lexicon,
                                          r.abbreviations);
  CHECK(result.text == "Customer pays.");
}

TEST_CASE("proper nouns are left alone") {
  const auto& r = TestResources();
  auto result = textnorm::CorrectSpelling("Alice buys a product.", r.lexicon,
                                          r.abbreviations);
  CHECK(result.text == "Alice buys a product.");
  CHECK(result.report.replacements.empty());
  CHECK(result.report.untouched_unknown ==
        std::vector<std::string>{"Alice"});

  auto mid = textnorm::CorrectSpelling("The clerk calls Zorblat.", r.lexicon,
                                       r.abbreviations);
  CHECK(mid.text == "The clerk calls Zorblat.");
  CHECK(mid.report.untouched_unknown == std::vector<std::string>{"Zorblat"});
}

TEST_CASE("words beyond distance two are reported, not replaced") {
  const auto& r = TestResources();
  auto result = textnorm::CorrectSpelling("The qqqqqq waits.", r.lexicon,
                                          r.abbreviations);
  CHECK(result.text == "The qqqqqq waits.");
  CHECK(result.report.untouched_unknown ==
        std::vector<std::string>{"qqqqqq"});
}

TEST_CASE("candidate ranking matches a brute-force search") {
  const auto& lex = TestResources().lexicon;
  for (const std::string typo :
       {"custmer", "recieve", "schedle", "apointment", "availabilty",
        "paiment", "ordr", "shp", "bok", "mecanic"}) {
    // Brute force over every entry with the enumeration oracle.
    std::string best;
    int best_d = 3;
    std::int64_t best_f = -1;
    const std::string alphabet = "abcdefghijklmnopqrstuvwxyz-";
    const auto e1 = testing::Edits1(typo, alphabet);
    std::set<std::string> e2;
    for (const auto& x : e1) {
      auto more = testing::Edits1(x, alphabet);
      e2.insert(more.begin(), more.end());
    }
    for (const std::string& w : lex.entries()) {
      int d = 3;
      if (e1.count(w)) {
        d = 1;
      } else if (e2.count(w)) {
        d = 2;
      }
      if (d > 2) continue;
      const std::int64_t f = lex.Frequency(w);
      if (d < best_d || (d == best_d && (f > best_f ||
                                          (f == best_f && w < best)))) {
        best = w;
        best_d = d;
        best_f = f;
      }
    }
    auto result = textnorm::CorrectSpelling("the " + typo + ".", lex);
    INFO(typo);
    if (best.empty()) {
      CHECK(result.report.replacements.empty());
    } else {
      REQUIRE(result.report.replacements.size() == 1);
      CHECK(result.report.replacements[0].corrected == best);
      CHECK(result.report.replacements[0].distance == best_d);
    }
  }
}

TEST_CASE("correction is idempotent") {
  const auto& r = TestResources();
  for (const char* text :
       {"A custmer buys a prodcut.", testing::kCarRepairStory,
        "Teh librarain isues books to membres. Alice pays the fien."}) {
    auto once = textnorm::CorrectSpelling(text, r.lexicon, r.abbreviations);
    auto twice =
        textnorm::CorrectSpelling(once.text, r.lexicon, r.abbreviations);
    CHECK(twice.text == once.text);
    CHECK(twice.report.replacements.empty());
  }
}

TEST_CASE("abbreviations and digits are not corrected") {
  const auto& r = TestResources();
  auto result = textnorm::CorrectSpelling(
      "Mr. Smith pays 20 dollars, e.g. cash.", r.lexicon, r.abbreviations);
  CHECK(result.text == "Mr. Smith pays 20 dollars, e.g. cash.");
  CHECK(result.report.replacements.empty());
}

TEST_CASE("lexicon builders validate words") {
  textnorm::Lexicon lex;
  lex.AddWord("order", 10, PosTag::kVerb);
  CHECK(lex.Contains("order"));
  CHECK(lex.Frequency("order") == 10);
  CHECK(lex.MostFrequentTag("order") == PosTag::kVerb);
  CHECK_THROWS_AS(lex.AddWord("", 1), std::invalid_argument);
  CHECK_THROWS_AS(lex.AddWord("Order", 1), std::invalid_argument);
  CHECK_THROWS_AS(lex.AddWord("two words", 1), std::invalid_argument);
}

TEST_CASE("missing lexicon file is an io error") {
  try {
    textnorm::Lexicon::Load("/nonexistent/lexicon.tsv",
                            testing::DataPath("closed_class.tsv"));
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIoError);
  }
}

TEST_CASE("abbreviation lookup is case-insensitive") {
  const auto& a = TestResources().abbreviations;
  CHECK(a.Contains("Mr."));
  CHECK(a.Contains("e.g."));
  CHECK(a.Contains("DR."));
  CHECK_FALSE(a.Contains("car."));
}

}  // TEST_SUITE

}  // namespace
}  // namespace storyuml
