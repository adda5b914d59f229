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

#ifndef STORYUML_PROJECT_H_
#define STORYUML_PROJECT_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "storyuml/classifier.h"
#include "storyuml/editsession.h"
#include "storyuml/extract.h"
#include "storyuml/lingpipe.h"
#include "storyuml/serialization.h"
#include "storyuml/textnorm.h"

namespace storyuml {

struct PipelineConfig {
  std::filesystem::path resource_dir;  // empty: Resources::DefaultDir()
  std::filesystem::path model_path;    // empty: train on training_data
  std::filesystem::path training_data;  // empty: <resource_dir>/seed_usecases.csv
  double alpha = 1.0;
  bool filter = true;
  bool include_infinitives = false;
  std::string system_name{kDefaultSystemName};
};

// JSON object with any of the keys "resources", "model", "training_data",
// "alpha", "filter", "include_infinitives", "system_name". Relative paths
// are resolved against the config file's directory.
PipelineConfig LoadConfig(const std::filesystem::path& path);

enum class Severity { kInfo, kWarning, kError };
std::string_view SeverityName(Severity severity);

struct Diagnostic {
  Severity severity = Severity::kInfo;
  std::string code;
  std::string message;
  std::optional<Location> location;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct PipelineResult {
  std::string story;
  std::string corrected_text;
  textnorm::CorrectionReport report;
  std::vector<lingpipe::TaggedSentence> sentences;
  UseCaseModel raw_model;
  UseCaseModel filtered_model;
  std::vector<std::pair<std::string, UseCase>> dropped;
  std::string plantuml;
  std::vector<Diagnostic> diagnostics;

  friend bool operator==(const PipelineResult&,
                         const PipelineResult&) = default;
};

// Loaded resources plus the classifier, shared read-only across runs.
class Pipeline {
 public:
  static Pipeline Create(const PipelineConfig& config);

  // Throws Error(kEmptyInput) only; extraction failures become error
  // diagnostics with an empty model.
  PipelineResult Run(std::string_view story) const;
  PipelineResult Run(std::string_view story, std::string_view system_name,
                     bool filter) const;

  const PipelineConfig& config() const { return config_; }
  const lingpipe::Resources& resources() const { return *resources_; }
  // Null when filtering is disabled by config.
  const classifier::NBModel* model() const { return model_.get(); }

 private:
  PipelineConfig config_;
  std::shared_ptr<const lingpipe::Resources> resources_;
  std::shared_ptr<const classifier::NBModel> model_;
};

PipelineResult RunPipeline(std::string_view story,
                           const PipelineConfig& config);

// Starting edit session over the filtered model.
edit::Session NewSession(const PipelineResult& result);

inline constexpr int kProjectSchemaVersion = 1;

void to_json(Json& j, const Diagnostic& d);
void from_json(const Json& j, Diagnostic& d);
void to_json(Json& j, const PipelineResult& result);
void from_json(const Json& j, PipelineResult& result);

std::string ProjectToString(const PipelineResult& result,
                            const edit::Session& session);
// Throws Error(kVersionMismatch) or Error(kMalformedFile).
std::pair<PipelineResult, edit::Session> ProjectFromString(
    std::string_view text);

// Writes to a temporary sibling, then renames over `path`.
void SaveProject(const PipelineResult& result, const edit::Session& session,
                 const std::filesystem::path& path);
std::pair<PipelineResult, edit::Session> LoadProject(
    const std::filesystem::path& path);

struct GoldStory {
  std::string story;
  std::vector<std::string> actors;     // lowercase keys
  std::vector<std::string> use_cases;  // lowercase "verb object"
};

// One JSON object per line: {"story", "actors", "use_cases"}. Blank lines
// are skipped. Throws Error(kMalformedFile) with the line number.
std::vector<GoldStory> LoadGoldCorpus(const std::filesystem::path& path);
std::vector<GoldStory> ParseGoldCorpus(std::string_view ndjson);

struct ExtractionReport {
  std::size_t story_count = 0;
  std::size_t actual_actors = 0;
  std::size_t actual_use_cases = 0;
  std::size_t identified_actors = 0;
  std::size_t identified_use_cases = 0;
  double actor_pct = 0;
  double use_case_pct = 0;
};

// Exact-set matching: actors by key, use cases by phrase across all actors.
// Throws std::invalid_argument for an empty corpus.
ExtractionReport EvaluateCorpus(const std::vector<GoldStory>& corpus,
                                const Pipeline& pipeline);

}  // namespace storyuml

#endif  // STORYUML_PROJECT_H_
