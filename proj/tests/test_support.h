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

#ifndef STORYUML_TESTS_TEST_SUPPORT_H_
#define STORYUML_TESTS_TEST_SUPPORT_H_

// Shared fixtures and independent reference implementations used as test
// oracles. Nothing here calls into the code under test except the resource
// loader.

#include <array>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "storyuml/classifier.h"
#include "storyuml/editsession.h"
#include "storyuml/extract.h"
#include "storyuml/lingpipe.h"

namespace storyuml::testing {

inline const lingpipe::Resources& TestResources() {
  static const lingpipe::Resources r =
      lingpipe::Resources::Load(STORYUML_RESOURCE_DIR);
  return r;
}

inline std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(STORYUML_RESOURCE_DIR) / name;
}

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("storyuml-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline constexpr const char* kCustomerStory = "A customer buys a product.";

inline constexpr const char* kCustomerPlantUml =
    "@startuml\n"
    "    left to right direction\n"
    "    actor \"Customer\" as Cu\n"
    "    rectangle {\n"
    "      usecase \"buy product\" as UC1\n"
    "    }\n"
    "    Cu --> UC1\n"
    "@enduml\n";

inline constexpr const char* kCarRepairStory =
    "A customer calls a car repair shop to make an appointment for an oil "
    "change. The receptionist checks the availability of the mechanic and "
    "schedules the appointment for the next available time slot.";

// Norvig-style edit enumeration: every string one delete, transpose,
// replace or insert away from `w`.
inline std::set<std::string> Edits1(const std::string& w,
                                    const std::string& alphabet) {
  std::set<std::string> out;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    const std::string l = w.substr(0, i);
    const std::string r = w.substr(i);
    if (!r.empty()) out.insert(l + r.substr(1));
    if (r.size() > 1) out.insert(l + r[1] + r[0] + r.substr(2));
    for (char c : alphabet) {
      if (!r.empty()) out.insert(l + c + r.substr(1));
      out.insert(l + c + r);
    }
  }
  return out;
}

// Edit distance capped at 3 ("more than two") by explicit enumeration.
inline int CappedEditDistance(const std::string& a, const std::string& b,
                              const std::string& alphabet) {
  if (a == b) return 0;
  const auto e1 = Edits1(a, alphabet);
  if (e1.count(b)) return 1;
  for (const auto& w : e1) {
    if (Edits1(w, alphabet).count(b)) return 2;
  }
  return 3;
}

// Direct evaluation of the smoothed multinomial NB joint log-probability
// from raw (phrase, label) pairs.
struct BruteForceNb {
  std::vector<std::pair<std::vector<std::string>, bool>> docs;
  double alpha = 1.0;

  static std::vector<std::string> Split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
      if (ch == ' ') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  }

  std::array<double, 2> LogJoint(const std::string& phrase) const {
    std::set<std::string> vocab;
    for (const auto& [words, label] : docs) {
      vocab.insert(words.begin(), words.end());
    }
    std::array<double, 2> out{};
    for (int c = 0; c < 2; ++c) {
      double n_docs = 0;
      double n_tokens = 0;
      for (const auto& [words, label] : docs) {
        if (static_cast<int>(label) != c) continue;
        n_docs += 1;
        n_tokens += static_cast<double>(words.size());
      }
      double lp = std::log(n_docs / static_cast<double>(docs.size()));
      for (const std::string& t : Split(phrase)) {
        if (!vocab.count(t)) continue;
        double count = 0;
        for (const auto& [words, label] : docs) {
          if (static_cast<int>(label) != c) continue;
          for (const auto& w : words) count += (w == t);
        }
        lp += std::log((count + alpha) /
                       (n_tokens + alpha * static_cast<double>(vocab.size())));
      }
      out[c] = lp;
    }
    return out;
  }
};

inline std::vector<classifier::LabeledPhrase> ToyDataset() {
  return {{"buy product", true},  {"place order", true},
          {"cancel order", true}, {"repair shop", false},
          {"time slot", false},   {"oil change", false}};
}

struct MetricValues {
  double accuracy, precision, recall, f1;
};

inline MetricValues ReferenceMetrics(double tp, double fp, double fn,
                                     double tn) {
  const double p = tp / (tp + fp);
  const double r = tp / (tp + fn);
  return {(tp + tn) / (tp + tn + fp + fn), p, r, 2 * tp / (2 * tp + fp + fn)};
}

inline bool RelClose(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)});
}


// Random small models and edit commands. Names and phrases come from short
// pools so commands hit existing entries often, and from time to time use
// odd casing, blanks or unknown keys to exercise the error paths.
class EditFuzzer {
 public:
  explicit EditFuzzer(std::uint32_t seed) : rng_(seed) {}

  UseCaseModel Model() {
    UseCaseModel m(Pick({"System", "Shop", "Library"}));
    const int actors = Int(0, 4);
    for (int i = 0; i < actors; ++i) {
      Actor a = Actor::Named(Pick(kActors));
      if (m.FindActor(a.key)) continue;
      if (Int(0, 1)) a.first_seen = Location{Int(0, 5), Int(0, 9)};
      std::vector<UseCase> ucs;
      const int n = Int(0, 4);
      for (int k = 0; k < n; ++k) {
        UseCase uc = UseCase::FromLemmas(Pick(kVerbs), Pick(kObjects));
        if (Int(0, 1)) uc.source = Location{Int(0, 5), Int(0, 9)};
        bool dup = false;
        for (const auto& u : ucs) dup = dup || u.phrase == uc.phrase;
        if (!dup) ucs.push_back(uc);
      }
      m.InsertActor(std::move(a), std::move(ucs));
    }
    return m;
  }

  edit::EditCommand Command(const UseCaseModel& m) {
    switch (Int(0, 6)) {
      case 0:
        return edit::AddActor{Name()};
      case 1:
        return edit::RemoveActor{Key(m)};
      case 2:
        return edit::RenameActor{Key(m), Name()};
      case 3:
        return edit::AddUseCase{Key(m), Phrase(m)};
      case 4:
        return edit::RemoveUseCase{Key(m), Phrase(m)};
      case 5:
        return edit::RenameUseCase{Key(m), Phrase(m), Phrase(m)};
      default:
        return edit::ReassignUseCase{Phrase(m), Key(m), Key(m)};
    }
  }

  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

 private:
  static inline const std::vector<std::string> kActors{
      "Customer", "Clerk", "Admin", "Front Desk", "Guest", "Courier"};
  static inline const std::vector<std::string> kVerbs{"buy", "pay", "ship",
                                                      "check"};
  static inline const std::vector<std::string> kObjects{"product", "bill",
                                                        "order"};

  std::string Pick(const std::vector<std::string>& pool) {
    return pool[static_cast<std::size_t>(
        Int(0, static_cast<int>(pool.size()) - 1))];
  }

  std::string Name() {
    switch (Int(0, 9)) {
      case 0:
        return "  ";
      case 1:
        return "GUEST";
      default:
        return Pick(kActors);
    }
  }

  std::string Key(const UseCaseModel& m) {
    if (m.actors().empty() || Int(0, 5) == 0) {
      return Int(0, 3) == 0 ? "" : "nobody";
    }
    const auto& a = m.actors()[static_cast<std::size_t>(
        Int(0, static_cast<int>(m.actors().size()) - 1))];
    return Int(0, 4) == 0 ? a.name : a.key;
  }

  std::string Phrase(const UseCaseModel& m) {
    const int r = Int(0, 9);
    if (r == 0) return "pay";
    if (r < 4 || m.use_case_count() == 0) {
      return Pick(kVerbs) + " " + Pick(kObjects);
    }
    std::vector<std::string> all;
    for (const auto& assoc : m.associations()) {
      for (const auto& uc : assoc.use_cases) all.push_back(uc.phrase);
    }
    std::string p = all[static_cast<std::size_t>(
        Int(0, static_cast<int>(all.size()) - 1))];
    if (r == 4) p[0] = static_cast<char>(std::toupper(p[0]));
    return p;
  }

  std::mt19937 rng_;
};

}  // namespace storyuml::testing

#endif  // STORYUML_TESTS_TEST_SUPPORT_H_
