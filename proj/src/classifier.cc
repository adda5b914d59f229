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

#include "storyuml/classifier.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "storyuml/error.h"
#include "storyuml/textnorm.h"

namespace storyuml::classifier {
namespace {

using json = nlohmann::json;

constexpr int kDrop = 0;
constexpr int kKeep = 1;

// Splits one CSV record starting at `pos`; advances `pos` past the newline.
std::vector<std::string> ReadRecord(std::string_view csv, std::size_t& pos,
                                    int line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  bool field_started = false;
  while (pos < csv.size()) {
    const char c = csv[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < csv.size() && csv[pos] == '"') {
          fields.back() += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      fields.emplace_back();
      field_started = false;
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      fields.back() += c;
      field_started = true;
    }
  }
  if (quoted) {
    throw Error(ErrorCode::kMalformedFile,
                "line " + std::to_string(line_no) + ": unterminated quote");
  }
  return fields;
}

}  // namespace

std::vector<LabeledPhrase> ParseDataset(std::string_view csv) {
  std::size_t pos = 0;
  int line_no = 1;
  const auto header = ReadRecord(csv, pos, line_no);
  if (header.size() != 2 || header[0] != "phrase" || header[1] != "label") {
    throw Error(ErrorCode::kMalformedFile,
                "dataset header must be 'phrase,label'");
  }
  std::vector<LabeledPhrase> out;
  while (pos < csv.size()) {
    ++line_no;
    const auto fields = ReadRecord(csv, pos, line_no);
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 2) {
      throw Error(ErrorCode::kMalformedFile,
                  "line " + std::to_string(line_no) + ": expected 2 fields");
    }
    std::string label = textnorm::ToLower(fields[1]);
    label.erase(label.find_last_not_of(" \t\r") + 1);
    label.erase(0, label.find_first_not_of(" \t"));
    if (label != "true" && label != "false") {
      throw Error(ErrorCode::kMalformedFile,
                  "line " + std::to_string(line_no) +
                      ": label must be true or false");
    }
    if (Features(fields[0]).empty()) {
      throw Error(ErrorCode::kMalformedFile,
                  "line " + std::to_string(line_no) + ": empty phrase");
    }
    out.push_back({fields[0], label == "true"});
  }
  return out;
}

std::vector<LabeledPhrase> LoadDataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseDataset(buf.str());
}

std::vector<std::string> Features(std::string_view phrase) {
  std::vector<std::string> out;
  std::istringstream in{textnorm::ToLower(phrase)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

NBModel Train(const std::vector<LabeledPhrase>& dataset, double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  NBModel model;
  model.alpha = alpha;
  for (const LabeledPhrase& row : dataset) {
    const int c = row.label ? kKeep : kDrop;
    ++model.class_doc_counts[c];
    for (std::string& tok : Features(row.phrase)) {
      ++model.class_token_counts[c][tok];
      ++model.class_total_tokens[c];
      model.vocabulary.insert(std::move(tok));
    }
  }
  if (model.class_doc_counts[kDrop] == 0 ||
      model.class_doc_counts[kKeep] == 0) {
    throw Error(ErrorCode::kDegenerateDataset,
                "training data must contain both labels");
  }
  return model;
}

Prediction Predict(const NBModel& model, std::string_view phrase) {
  const double total_docs = static_cast<double>(model.class_doc_counts[0] +
                                                model.class_doc_counts[1]);
  const double vocab = static_cast<double>(model.vocabulary.size());
  Prediction p;
  for (int c = 0; c < 2; ++c) {
    p.log_posteriors[c] =
        std::log(static_cast<double>(model.class_doc_counts[c]) / total_docs);
  }
  for (const std::string& tok : Features(phrase)) {
    if (!model.vocabulary.contains(tok)) continue;
    for (int c = 0; c < 2; ++c) {
      auto it = model.class_token_counts[c].find(tok);
      const double count =
          it == model.class_token_counts[c].end() ? 0.0 : it->second;
      p.log_posteriors[c] +=
          std::log((count + model.alpha) /
                   (static_cast<double>(model.class_total_tokens[c]) +
                    model.alpha * vocab));
    }
  }
  p.label = p.log_posteriors[kKeep] >= p.log_posteriors[kDrop];
  return p;
}

std::array<double, 2> NormalizedPosteriors(const Prediction& prediction) {
  const double m =
      std::max(prediction.log_posteriors[0], prediction.log_posteriors[1]);
  const double e0 = std::exp(prediction.log_posteriors[0] - m);
  const double e1 = std::exp(prediction.log_posteriors[1] - m);
  return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

FilterResult FilterModel(const NBModel& model, const UseCaseModel& ucm) {
  FilterResult result{UseCaseModel(ucm.system_name()), {}};
  for (std::size_t i = 0; i < ucm.actors().size(); ++i) {
    const Actor& actor = ucm.actors()[i];
    std::vector<UseCase> kept;
    for (const UseCase& uc : ucm.associations()[i].use_cases) {
      if (Predict(model, uc.phrase).label) {
        kept.push_back(uc);
      } else {
        result.dropped.emplace_back(actor.key, uc);
      }
    }
    result.model.InsertActor(actor, std::move(kept));
  }
  return result;
}

// ----- Metrics ----- //

double Accuracy(const ConfusionMatrix& cm) {
  if (cm.total() == 0) {
    throw Error(ErrorCode::kUndefinedMetric, "accuracy: empty matrix");
  }
  return static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
}

double Precision(const ConfusionMatrix& cm) {
  if (cm.tp + cm.fp == 0) {
    throw Error(ErrorCode::kUndefinedMetric, "precision: tp + fp = 0");
  }
  return static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
}

double Recall(const ConfusionMatrix& cm) {
  if (cm.tp + cm.fn == 0) {
    throw Error(ErrorCode::kUndefinedMetric, "recall: tp + fn = 0");
  }
  return static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
}

double F1(const ConfusionMatrix& cm) {
  const double p = Precision(cm);
  const double r = Recall(cm);
  if (p + r == 0) {
    throw Error(ErrorCode::kUndefinedMetric, "f1: precision + recall = 0");
  }
  return 2 * p * r / (p + r);
}

Metrics ComputeMetrics(const ConfusionMatrix& cm) {
  return {Accuracy(cm), Precision(cm), Recall(cm), F1(cm)};
}

ConfusionMatrix Confusion(const NBModel& model,
                          const std::vector<LabeledPhrase>& test) {
  if (test.empty()) throw std::invalid_argument("empty test set");
  ConfusionMatrix cm;
  for (const LabeledPhrase& row : test) {
    const bool predicted = Predict(model, row.phrase).label;
    if (predicted && row.label) ++cm.tp;
    else if (predicted && !row.label) ++cm.fp;
    else if (!predicted && row.label) ++cm.fn;
    else ++cm.tn;
  }
  return cm;
}

Evaluation Evaluate(const NBModel& model,
                    const std::vector<LabeledPhrase>& test) {
  ConfusionMatrix cm = Confusion(model, test);
  return {cm, ComputeMetrics(cm)};
}

// ----- Persistence ----- //

std::string ModelToString(const NBModel& model) {
  json j;
  j["format"] = "storyuml-naive-bayes";
  j["format_version"] = kModelFormatVersion;
  j["alpha"] = model.alpha;
  const char* names[2] = {"false", "true"};
  for (int c = 0; c < 2; ++c) {
    j["classes"][names[c]]["documents"] = model.class_doc_counts[c];
    j["classes"][names[c]]["token_counts"] = model.class_token_counts[c];
  }
  return j.dump(2) + "\n";
}

NBModel ModelFromString(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedFile,
                std::string("model file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format_version")) {
    throw Error(ErrorCode::kMalformedFile, "model file lacks format_version");
  }
  if (j["format_version"] != kModelFormatVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "unsupported model format_version " +
                    j["format_version"].dump());
  }
  NBModel model;
  try {
    model.alpha = j.at("alpha").get<double>();
    const char* names[2] = {"false", "true"};
    for (int c = 0; c < 2; ++c) {
      const json& cls = j.at("classes").at(names[c]);
      model.class_doc_counts[c] = cls.at("documents").get<std::int64_t>();
      model.class_token_counts[c] =
          cls.at("token_counts").get<std::map<std::string, std::int64_t>>();
      for (const auto& [tok, n] : model.class_token_counts[c]) {
        if (n < 0) throw std::invalid_argument("negative count");
        model.class_total_tokens[c] += n;
        model.vocabulary.insert(tok);
      }
    }
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kMalformedFile,
                std::string("bad model file: ") + e.what());
  }
  if (!(model.alpha > 0) || model.class_doc_counts[0] <= 0 ||
      model.class_doc_counts[1] <= 0) {
    throw Error(ErrorCode::kMalformedFile,
                "model needs alpha > 0 and documents in both classes");
  }
  return model;
}

void SaveModel(const NBModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << ModelToString(model);
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

NBModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ModelFromString(buf.str());
}

}  // namespace storyuml::classifier
