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

#include "storyuml/project.h"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "storyuml/diagram.h"
#include "storyuml/error.h"

namespace storyuml {
namespace fs = std::filesystem;

namespace {

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path Resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_relative() ? base / path : path;
}

}  // namespace

PipelineConfig LoadConfig(const fs::path& path) {
  const std::string text = ReadFile(path);
  PipelineConfig config;
  const fs::path base = path.parent_path();
  try {
    const Json j = Json::parse(text);
    if (!j.is_object()) {
      throw Error(ErrorCode::kMalformedFile,
                  path.string() + ": config must be a JSON object");
    }
    if (j.contains("resources")) {
      config.resource_dir = Resolve(base, j["resources"].get<std::string>());
    }
    if (j.contains("model")) {
      config.model_path = Resolve(base, j["model"].get<std::string>());
    }
    if (j.contains("training_data")) {
      config.training_data =
          Resolve(base, j["training_data"].get<std::string>());
    }
    config.alpha = j.value("alpha", config.alpha);
    config.filter = j.value("filter", config.filter);
    config.include_infinitives =
        j.value("include_infinitives", config.include_infinitives);
    config.system_name = j.value("system_name", config.system_name);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedFile, path.string() + ": " + e.what());
  }
  return config;
}

std::string_view SeverityName(Severity severity) {
  switch (severity) {
    case Severity::kInfo:
      return "info";
    case Severity::kWarning:
      return "warning";
    case Severity::kError:
      return "error";
  }
  return "info";
}

Pipeline Pipeline::Create(const PipelineConfig& config) {
  Pipeline p;
  p.config_ = config;
  if (p.config_.resource_dir.empty()) {
    p.config_.resource_dir = lingpipe::Resources::DefaultDir();
  }
  p.resources_ = std::make_shared<const lingpipe::Resources>(
      lingpipe::Resources::Load(p.config_.resource_dir));
  if (!p.config_.model_path.empty()) {
    p.model_ = std::make_shared<const classifier::NBModel>(
        classifier::LoadModel(p.config_.model_path));
  } else if (p.config_.filter) {
    fs::path data = p.config_.training_data;
    if (data.empty()) data = p.config_.resource_dir / "seed_usecases.csv";
    p.model_ = std::make_shared<const classifier::NBModel>(
        classifier::Train(classifier::LoadDataset(data), p.config_.alpha));
  }
  return p;
}

PipelineResult Pipeline::Run(std::string_view story) const {
  return Run(story, config_.system_name, config_.filter);
}

PipelineResult Pipeline::Run(std::string_view story,
                             std::string_view system_name,
                             bool filter) const {
  if (filter && !model_) {
    throw std::logic_error("filtering requested but no classifier loaded");
  }
  PipelineResult r;
  r.story = std::string(story);
  const std::string normalized = textnorm::NormalizeText(story);
  auto corrected = textnorm::CorrectSpelling(normalized, resources_->lexicon,
                                             resources_->abbreviations);
  r.corrected_text = std::move(corrected.text);
  r.report = std::move(corrected.report);
  for (const auto& rep : r.report.replacements) {
    r.diagnostics.push_back(
        {Severity::kInfo, "SpellingCorrected",
         "'" + rep.original + "' corrected to '" + rep.corrected + "'",
         std::nullopt});
  }

  lingpipe::DepOptions options;
  options.include_infinitives = config_.include_infinitives;
  r.sentences = lingpipe::Analyze(r.corrected_text, *resources_, options);

  try {
    r.raw_model = ExtractModel(r.sentences, std::string(system_name));
  } catch (const Error& e) {
    r.raw_model = UseCaseModel(std::string(system_name));
    r.diagnostics.push_back({Severity::kError,
                             std::string(ErrorCodeName(e.code())), e.what(),
                             e.location()});
  }
  for (const Location& loc : FindPassiveClauses(r.sentences)) {
    r.diagnostics.push_back(
        {Severity::kWarning, "PassiveClause",
         "passive clause; its agent is not extracted as an actor", loc});
  }

  if (filter) {
    auto filtered = classifier::FilterModel(*model_, r.raw_model);
    r.filtered_model = std::move(filtered.model);
    r.dropped = std::move(filtered.dropped);
  } else {
    r.filtered_model = r.raw_model;
  }
  r.plantuml = diagram::EmitPlantUml(r.filtered_model);
  return r;
}

PipelineResult RunPipeline(std::string_view story,
                           const PipelineConfig& config) {
  return Pipeline::Create(config).Run(story);
}

edit::Session NewSession(const PipelineResult& result) {
  edit::Session s;
  s.model = result.filtered_model;
  return s;
}

void to_json(Json& j, const Diagnostic& d) {
  j = Json{{"severity", SeverityName(d.severity)},
           {"code", d.code},
           {"message", d.message}};
  if (d.location) {
    j["location"] = *d.location;
  } else {
    j["location"] = nullptr;
  }
}

void from_json(const Json& j, Diagnostic& d) {
  const std::string sev = j.at("severity").get<std::string>();
  if (sev == "info") {
    d.severity = Severity::kInfo;
  } else if (sev == "warning") {
    d.severity = Severity::kWarning;
  } else if (sev == "error") {
    d.severity = Severity::kError;
  } else {
    throw Error(ErrorCode::kMalformedFile, "unknown severity " + sev);
  }
  d.code = j.at("code").get<std::string>();
  d.message = j.at("message").get<std::string>();
  if (j.at("location").is_null()) {
    d.location.reset();
  } else {
    d.location = j.at("location").get<Location>();
  }
}

void to_json(Json& j, const PipelineResult& r) {
  Json dropped = Json::array();
  for (const auto& [key, uc] : r.dropped) {
    dropped.push_back(Json{{"actor_key", key}, {"use_case", uc}});
  }
  j = Json{{"story", r.story},
           {"corrected_text", r.corrected_text},
           {"report", r.report},
           {"sentences", r.sentences},
           {"raw_model", r.raw_model},
           {"filtered_model", r.filtered_model},
           {"dropped", std::move(dropped)},
           {"plantuml", r.plantuml},
           {"diagnostics", r.diagnostics}};
}

void from_json(const Json& j, PipelineResult& r) {
  r.story = j.at("story").get<std::string>();
  r.corrected_text = j.at("corrected_text").get<std::string>();
  r.report = j.at("report").get<textnorm::CorrectionReport>();
  r.sentences = j.at("sentences").get<std::vector<lingpipe::TaggedSentence>>();
  r.raw_model = j.at("raw_model").get<UseCaseModel>();
  r.filtered_model = j.at("filtered_model").get<UseCaseModel>();
  r.dropped.clear();
  for (const Json& d : j.at("dropped")) {
    r.dropped.emplace_back(d.at("actor_key").get<std::string>(),
                           d.at("use_case").get<UseCase>());
  }
  r.plantuml = j.at("plantuml").get<std::string>();
  r.diagnostics = j.at("diagnostics").get<std::vector<Diagnostic>>();
}

std::string ProjectToString(const PipelineResult& result,
                            const edit::Session& session) {
  Json j{{"schema_version", kProjectSchemaVersion},
         {"result", result},
         {"session", session}};
  return j.dump(2) + "\n";
}

std::pair<PipelineResult, edit::Session> ProjectFromString(
    std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedFile,
                std::string("project is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version") ||
      !j["schema_version"].is_number_integer()) {
    throw Error(ErrorCode::kMalformedFile, "project lacks schema_version");
  }
  const auto version = j["schema_version"].get<std::int64_t>();
  if (version != kProjectSchemaVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "project schema version " + std::to_string(version) +
                    ", expected " + std::to_string(kProjectSchemaVersion));
  }
  try {
    return {j.at("result").get<PipelineResult>(),
            j.at("session").get<edit::Session>()};
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedFile,
                std::string("bad project field: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedFile) throw;
    throw Error(ErrorCode::kMalformedFile,
                std::string("inconsistent project: ") + e.what());
  }
}

void SaveProject(const PipelineResult& result, const edit::Session& session,
                 const fs::path& path) {
  const std::string text = ProjectToString(result, session);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::kIoError, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::pair<PipelineResult, edit::Session> LoadProject(const fs::path& path) {
  return ProjectFromString(ReadFile(path));
}

std::vector<GoldStory> ParseGoldCorpus(std::string_view ndjson) {
  std::vector<GoldStory> out;
  std::istringstream in{std::string(ndjson)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::kMalformedFile,
                   "line " + std::to_string(line_no) + ": " + why);
    };
    GoldStory g;
    try {
      const Json j = Json::parse(line);
      g.story = j.at("story").get<std::string>();
      g.actors = j.at("actors").get<std::vector<std::string>>();
      g.use_cases = j.at("use_cases").get<std::vector<std::string>>();
    } catch (const Json::exception& e) {
      throw fail(e.what());
    }
    if (g.story.empty() || g.actors.empty() || g.use_cases.empty()) {
      throw fail("story, actors and use_cases must be nonempty");
    }
    if (std::set<std::string>(g.actors.begin(), g.actors.end()).size() !=
            g.actors.size() ||
        std::set<std::string>(g.use_cases.begin(), g.use_cases.end())
                .size() != g.use_cases.size()) {
      throw fail("duplicate gold entry");
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GoldStory> LoadGoldCorpus(const fs::path& path) {
  try {
    return ParseGoldCorpus(ReadFile(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kMalformedFile) throw;
    throw Error(ErrorCode::kMalformedFile, path.string() + ": " + e.what());
  }
}

ExtractionReport EvaluateCorpus(const std::vector<GoldStory>& corpus,
                                const Pipeline& pipeline) {
  if (corpus.empty()) throw std::invalid_argument("empty gold corpus");
  ExtractionReport rep;
  for (const GoldStory& g : corpus) {
    const PipelineResult r = pipeline.Run(g.story);
    std::set<std::string> actors;
    std::set<std::string> phrases;
    const UseCaseModel& m = r.filtered_model;
    for (std::size_t i = 0; i < m.actors().size(); ++i) {
      actors.insert(m.actors()[i].key);
      for (const UseCase& uc : m.associations()[i].use_cases) {
        phrases.insert(uc.phrase);
      }
    }
    ++rep.story_count;
    rep.actual_actors += g.actors.size();
    rep.actual_use_cases += g.use_cases.size();
    for (const auto& a : g.actors) rep.identified_actors += actors.count(a);
    for (const auto& u : g.use_cases) {
      rep.identified_use_cases += phrases.count(u);
    }
  }
  rep.actor_pct = 100.0 * static_cast<double>(rep.identified_actors) /
                  static_cast<double>(rep.actual_actors);
  rep.use_case_pct = 100.0 * static_cast<double>(rep.identified_use_cases) /
                     static_cast<double>(rep.actual_use_cases);
  return rep;
}

}  // namespace storyuml
