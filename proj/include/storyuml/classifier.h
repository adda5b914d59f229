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

#ifndef STORYUML_CLASSIFIER_H_
#define STORYUML_CLASSIFIER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "storyuml/extract.h"

namespace storyuml::classifier {

struct LabeledPhrase {
  std::string phrase;
  bool label = false;  // true: genuine use case

  friend bool operator==(const LabeledPhrase&, const LabeledPhrase&) = default;
};

// Reads a `phrase,label` CSV (RFC 4180 quoting, label true|false).
std::vector<LabeledPhrase> LoadDataset(const std::filesystem::path& path);
std::vector<LabeledPhrase> ParseDataset(std::string_view csv);

// Multinomial Naive Bayes over lowercase whitespace unigrams. Index 0 holds
// the "drop" class, index 1 the "keep" class.
struct NBModel {
  double alpha = 1.0;
  std::array<std::int64_t, 2> class_doc_counts{};
  std::array<std::map<std::string, std::int64_t>, 2> class_token_counts;
  std::array<std::int64_t, 2> class_total_tokens{};
  std::set<std::string> vocabulary;

  friend bool operator==(const NBModel&, const NBModel&) = default;
};

inline constexpr int kModelFormatVersion = 1;

std::vector<std::string> Features(std::string_view phrase);

// Throws Error(kDegenerateDataset) unless both labels occur, and
// std::invalid_argument for alpha <= 0.
NBModel Train(const std::vector<LabeledPhrase>& dataset, double alpha = 1.0);

struct Prediction {
  bool label = true;
  // Unnormalized log joint per class: log prior + sum of log likelihoods.
  std::array<double, 2> log_posteriors{};
};

// Out-of-vocabulary tokens are skipped; ties keep the phrase.
Prediction Predict(const NBModel& model, std::string_view phrase);

// exp-normalized posteriors, summing to one.
std::array<double, 2> NormalizedPosteriors(const Prediction& prediction);

struct FilterResult {
  UseCaseModel model;
  std::vector<std::pair<std::string, UseCase>> dropped;  // extraction order
};

// Removes every use case predicted false. Actors are kept even if emptied.
FilterResult FilterModel(const NBModel& model, const UseCaseModel& ucm);

struct ConfusionMatrix {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;

  std::int64_t total() const { return tp + fp + fn + tn; }
  friend bool operator==(const ConfusionMatrix&,
                         const ConfusionMatrix&) = default;
};

struct Metrics {
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// Each throws Error(kUndefinedMetric) naming the metric when its
// denominator is zero.
double Accuracy(const ConfusionMatrix& cm);
double Precision(const ConfusionMatrix& cm);
double Recall(const ConfusionMatrix& cm);
double F1(const ConfusionMatrix& cm);
Metrics ComputeMetrics(const ConfusionMatrix& cm);

struct Evaluation {
  ConfusionMatrix matrix;
  Metrics metrics;
};

// Throws std::invalid_argument for an empty test set.
ConfusionMatrix Confusion(const NBModel& model,
                          const std::vector<LabeledPhrase>& test);
Evaluation Evaluate(const NBModel& model,
                    const std::vector<LabeledPhrase>& test);

// JSON model file carrying `format_version`; see README for the layout.
void SaveModel(const NBModel& model, const std::filesystem::path& path);
NBModel LoadModel(const std::filesystem::path& path);
std::string ModelToString(const NBModel& model);
NBModel ModelFromString(std::string_view text);

}  // namespace storyuml::classifier

#endif  // STORYUML_CLASSIFIER_H_
