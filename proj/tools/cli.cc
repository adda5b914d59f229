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

#include "cli.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "storyuml/classifier.h"
#include "storyuml/diagram.h"
#include "storyuml/editsession.h"
#include "storyuml/error.h"
#include "storyuml/project.h"
#include "storyuml/serialization.h"
#include "storyuml/service.h"

namespace storyuml::cli {
namespace fs = std::filesystem;

namespace {

// Flags shared by the commands that run the pipeline.
struct PipelineFlags {
  std::string config;
  std::string resources;
  std::string model;
  std::string training_data;
  double alpha = 1.0;
  std::string system;
  bool no_filter = false;
  bool include_infinitives = false;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* system_opt = nullptr;

  void Register(CLI::App* app) {
    app->add_option("--config", config, "JSON pipeline config file");
    app->add_option("--resources", resources,
                    "Directory with lexicon and tables");
    app->add_option("--model", model, "Trained classifier model file");
    app->add_option("--training-data", training_data,
                    "CSV to train the classifier on when --model is absent");
    alpha_opt = app->add_option("--alpha", alpha, "Laplace smoothing");
    system_opt = app->add_option("--system", system, "System boundary name");
    app->add_flag("--no-filter", no_filter, "Skip the use-case classifier");
    app->add_flag("--include-infinitives", include_infinitives,
                  "Extract use cases from verbs after infinitival 'to'");
  }

  PipelineConfig Build() const {
    PipelineConfig c = config.empty() ? PipelineConfig{} : LoadConfig(config);
    if (!resources.empty()) c.resource_dir = resources;
    if (!model.empty()) c.model_path = model;
    if (!training_data.empty()) c.training_data = training_data;
    if (alpha_opt->count() > 0) c.alpha = alpha;
    if (system_opt->count() > 0) c.system_name = system;
    if (no_filter) c.filter = false;
    if (include_infinitives) c.include_infinitives = true;
    return c;
  }
};

std::string ReadAll(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return ReadAll(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return ReadAll(file);
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path);
  file << text;
}

std::string Describe(const Diagnostic& d) {
  std::string s = std::string(SeverityName(d.severity)) + ": " + d.code;
  if (d.location) {
    s += " (sentence " + std::to_string(d.location->sentence + 1) +
         ", token " + std::to_string(d.location->token + 1) + ")";
  }
  return s + ": " + d.message;
}

std::string Describe(const Error& e) {
  return std::string(ErrorCodeName(e.code())) + ": " + e.what();
}

std::string Percent(double v) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << v << "%";
  return ss.str();
}

void Row(std::ostream& out, const std::string& label, const std::string& v) {
  out << std::left << std::setw(24) << label << std::right << std::setw(10)
      << v << "\n";
}

int Generate(const PipelineFlags& flags, const std::string& input,
             const std::string& out_path, bool json, std::istream& in,
             std::ostream& out, std::ostream& err) {
  const Pipeline pipeline = Pipeline::Create(flags.Build());
  const PipelineResult result = pipeline.Run(ReadInput(input, in));
  bool failed = false;
  for (const Diagnostic& d : result.diagnostics) {
    if (d.severity == Severity::kInfo) continue;
    err << Describe(d) << "\n";
    failed = failed || d.severity == Severity::kError;
  }
  WriteOutput(out_path, json ? Json(result).dump(2) + "\n" : result.plantuml,
              out);
  return failed ? kExitInput : kExitOk;
}

int Train(const std::string& data, double alpha, const std::string& out_path,
          std::ostream& out) {
  fs::path path = data;
  if (path.empty()) {
    path = lingpipe::Resources::DefaultDir() / "seed_usecases.csv";
  }
  const auto dataset = classifier::LoadDataset(path);
  const classifier::NBModel model = classifier::Train(dataset, alpha);
  classifier::SaveModel(model, out_path);
  out << "trained on " << dataset.size() << " phrases ("
      << model.class_doc_counts[1] << " keep, " << model.class_doc_counts[0]
      << " drop), vocabulary " << model.vocabulary.size() << ", wrote "
      << out_path << "\n";
  return kExitOk;
}

void PrintMetrics(const classifier::Evaluation& ev, std::ostream& out) {
  out << "\nclassifier on held-out phrases\n";
  Row(out, "true positives", std::to_string(ev.matrix.tp));
  Row(out, "false positives", std::to_string(ev.matrix.fp));
  Row(out, "false negatives", std::to_string(ev.matrix.fn));
  Row(out, "true negatives", std::to_string(ev.matrix.tn));
  using Fn = double (*)(const classifier::ConfusionMatrix&);
  const std::pair<const char*, Fn> metrics[] = {
      {"accuracy", classifier::Accuracy},
      {"precision", classifier::Precision},
      {"recall", classifier::Recall},
      {"f1", classifier::F1},
  };
  for (const auto& [name, fn] : metrics) {
    std::string value;
    try {
      value = Percent(100.0 * fn(ev.matrix));
    } catch (const Error&) {
      value = "undefined";
    }
    Row(out, name, value);
  }
}

int Evaluate(const PipelineFlags& flags, const std::string& corpus_path,
             const std::string& ml_test, std::ostream& out) {
  PipelineConfig config = flags.Build();
  const Pipeline pipeline = Pipeline::Create(config);
  fs::path corpus = corpus_path;
  if (corpus.empty()) {
    corpus = pipeline.config().resource_dir / "gold_corpus.ndjson";
  }
  const ExtractionReport rep =
      EvaluateCorpus(LoadGoldCorpus(corpus), pipeline);
  out << "extraction on " << corpus.string() << "\n";
  Row(out, "stories", std::to_string(rep.story_count));
  Row(out, "actual actors", std::to_string(rep.actual_actors));
  Row(out, "identified actors", std::to_string(rep.identified_actors));
  Row(out, "actor accuracy", Percent(rep.actor_pct));
  Row(out, "actual use cases", std::to_string(rep.actual_use_cases));
  Row(out, "identified use cases", std::to_string(rep.identified_use_cases));
  Row(out, "use case accuracy", Percent(rep.use_case_pct));

  if (!ml_test.empty()) {
    classifier::NBModel model;
    if (pipeline.model()) {
      model = *pipeline.model();
    } else {
      fs::path data = config.training_data;
      if (data.empty()) {
        data = pipeline.config().resource_dir / "seed_usecases.csv";
      }
      model = classifier::Train(classifier::LoadDataset(data), config.alpha);
    }
    PrintMetrics(classifier::Evaluate(model, classifier::LoadDataset(ml_test)),
                 out);
  }
  return kExitOk;
}

int Serve(const PipelineFlags& flags, const std::string& host, int port,
          std::string data_dir, const std::string& static_dir,
          std::ostream& out) {
  if (data_dir.empty()) {
    const char* env = std::getenv("STORYUML_DATA_DIR");
    data_dir = env && *env ? env : "storyuml-data";
  }
  ServiceOptions options;
  options.config = flags.Build();
  options.data_dir = data_dir;
  options.static_dir = static_dir;
  Service service(std::move(options));
  const int bound = service.Bind(host, port);
  out << "listening on http://" << host << ":" << bound << " (data in "
      << data_dir << ")" << std::endl;
  service.Run();
  return kExitOk;
}

constexpr const char* kEditHelp =
    "commands:\n"
    "  add-actor NAME\n"
    "  remove-actor KEY\n"
    "  rename-actor KEY NEW_NAME\n"
    "  add-usecase ACTOR \"VERB OBJECT\"\n"
    "  remove-usecase ACTOR \"VERB OBJECT\"\n"
    "  rename-usecase ACTOR \"OLD PHRASE\" \"NEW PHRASE\"\n"
    "  reassign \"VERB OBJECT\" FROM TO\n"
    "  undo | show | model | save [PATH] | help | quit\n";

std::optional<edit::EditCommand> ParseEdit(const std::vector<std::string>& w) {
  auto need = [&](std::size_t n) {
    if (w.size() != n + 1) {
      throw Error(ErrorCode::kInvalidCommand,
                  w[0] + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  const std::string& c = w[0];
  if (c == "add-actor") {
    need(1);
    return edit::AddActor{w[1]};
  }
  if (c == "remove-actor") {
    need(1);
    return edit::RemoveActor{w[1]};
  }
  if (c == "rename-actor") {
    need(2);
    return edit::RenameActor{w[1], w[2]};
  }
  if (c == "add-usecase") {
    need(2);
    return edit::AddUseCase{w[1], w[2]};
  }
  if (c == "remove-usecase") {
    need(2);
    return edit::RemoveUseCase{w[1], w[2]};
  }
  if (c == "rename-usecase") {
    need(3);
    return edit::RenameUseCase{w[1], w[2], w[3]};
  }
  if (c == "reassign") {
    need(3);
    return edit::ReassignUseCase{w[1], w[2], w[3]};
  }
  return std::nullopt;
}

void PrintModel(const UseCaseModel& m, std::ostream& out) {
  if (m.empty()) out << "(no actors)\n";
  for (std::size_t i = 0; i < m.actors().size(); ++i) {
    out << m.actors()[i].name << " [" << m.actors()[i].key << "]\n";
    for (const UseCase& uc : m.associations()[i].use_cases) {
      out << "  - " << uc.phrase << "\n";
    }
  }
}

int EditLoop(const PipelineFlags& flags, const std::string& project_path,
             const std::string& story_path, std::istream& in,
             std::ostream& out, std::ostream& err) {
  PipelineResult result;
  edit::Session session;
  if (!story_path.empty()) {
    result = Pipeline::Create(flags.Build()).Run(ReadInput(story_path, in));
    session = NewSession(result);
    for (const Diagnostic& d : result.diagnostics) {
      if (d.severity != Severity::kInfo) err << Describe(d) << "\n";
    }
  } else if (!project_path.empty()) {
    std::tie(result, session) = LoadProject(project_path);
  } else {
    throw Error(ErrorCode::kInvalidCommand,
                "edit needs a project file or --story");
  }
  out << "revision " << session.revision << "; type 'help' for commands\n";

  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> words;
    try {
      words = SplitWords(line);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      continue;
    }
    if (words.empty()) continue;
    const std::string& c = words[0];
    try {
      if (c == "quit" || c == "exit") break;
      if (c == "help") {
        out << kEditHelp;
      } else if (c == "show") {
        out << diagram::EmitPlantUml(session.model);
      } else if (c == "model") {
        PrintModel(session.model, out);
      } else if (c == "undo") {
        session = edit::Undo(session);
        out << "ok revision " << session.revision << "\n";
      } else if (c == "save") {
        std::string path = words.size() > 1 ? words[1] : project_path;
        if (path.empty()) {
          throw Error(ErrorCode::kInvalidCommand, "save needs a path");
        }
        SaveProject(result, session, path);
        out << "saved " << path << "\n";
      } else if (auto cmd = ParseEdit(words)) {
        session = edit::ApplyEdit(session, *cmd);
        out << "ok revision " << session.revision << "\n";
      } else {
        err << "error: unknown command '" << c << "'\n";
      }
    } catch (const Error& e) {
      err << "error: " << Describe(e) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

std::vector<std::string> SplitWords(const std::string& line) {
  std::vector<std::string> words;
  std::string cur;
  bool in_word = false;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (ch == '\\' && i + 1 < line.size()) {
      cur += line[++i];
      in_word = true;
    } else if (ch == '"') {
      quoted = !quoted;
      in_word = true;
    } else if (!quoted && (ch == ' ' || ch == '\t' || ch == '\r')) {
      if (in_word) words.push_back(std::move(cur));
      cur.clear();
      in_word = false;
    } else {
      cur += ch;
      in_word = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote");
  if (in_word) words.push_back(std::move(cur));
  return words;
}

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"User stories to PlantUML use case diagrams", "storyuml"};
  app.require_subcommand(1);

  PipelineFlags gen_flags;
  std::string gen_input, gen_out;
  bool gen_json = false;
  auto* gen = app.add_subcommand("generate", "Story to PlantUML");
  gen->add_option("input", gen_input, "Story file, '-' or absent for stdin");
  gen->add_option("--out,-o", gen_out, "Write output here");
  gen->add_flag("--json", gen_json, "Emit the full pipeline result as JSON");
  gen_flags.Register(gen);

  std::string train_data, train_out;
  double train_alpha = 1.0;
  auto* train = app.add_subcommand("train", "Train the use-case classifier");
  train->add_option("--data", train_data, "Labelled CSV (phrase,label)");
  train->add_option("--alpha", train_alpha, "Laplace smoothing")
      ->check(CLI::PositiveNumber);
  train->add_option("--out,-o", train_out, "Model file to write")
      ->required();

  PipelineFlags eval_flags;
  std::string eval_corpus, eval_ml_test;
  auto* evaluate = app.add_subcommand("evaluate", "Score extraction on a corpus");
  evaluate->add_option("--corpus", eval_corpus, "Gold corpus (NDJSON)");
  evaluate->add_option("--ml-test", eval_ml_test,
                       "Labelled CSV for classifier metrics");
  eval_flags.Register(evaluate);

  PipelineFlags serve_flags;
  std::string serve_host = "127.0.0.1", serve_data, serve_static;
  int serve_port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--host", serve_host, "Address to bind");
  serve->add_option("--port", serve_port, "Port, 0 for any")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--data-dir", serve_data,
                    "Project store (default $STORYUML_DATA_DIR)");
  serve->add_option("--static-dir", serve_static, "Web UI assets for /");
  serve_flags.Register(serve);

  PipelineFlags edit_flags;
  std::string edit_project, edit_story;
  auto* edit_cmd = app.add_subcommand("edit", "Edit a model interactively");
  edit_cmd->add_option("project", edit_project, "Project file");
  edit_cmd->add_option("--story", edit_story, "Start from a story file");
  edit_flags.Register(edit_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0 && dynamic_cast<const CLI::CallForHelp*>(&e) == nullptr) {
      err << app.help();
    }
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      return Generate(gen_flags, gen_input, gen_out, gen_json, in, out, err);
    }
    if (*train) return Train(train_data, train_alpha, train_out, out);
    if (*evaluate) return Evaluate(eval_flags, eval_corpus, eval_ml_test, out);
    if (*serve) {
      return Serve(serve_flags, serve_host, serve_port, serve_data,
                   serve_static, out);
    }
    if (*edit_cmd) {
      return EditLoop(edit_flags, edit_project, edit_story, in, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << Describe(e) << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace storyuml::cli
