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

#include "storyuml/service.h"

#include <httplib.h>

#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <thread>

#include "storyuml/diagram.h"
#include "storyuml/error.h"
#include "storyuml/serialization.h"

namespace storyuml {
namespace fs = std::filesystem;

namespace {

constexpr const char* kJson = "application/json";

constexpr const char* kPlaceholderPage =
    "<!doctype html>\n<html><head><meta charset=\"utf-8\">"
    "<title>storyuml</title></head>\n<body><h1>storyuml</h1>"
    "<p>The web UI is not installed. The JSON API is available under "
    "<code>/api/projects</code>.</p></body></html>\n";

struct Project {
  std::mutex mu;
  PipelineResult result;
  edit::Session session;
};

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError:
    case ErrorCode::kMalformedFile:
    case ErrorCode::kVersionMismatch:
    case ErrorCode::kDegenerateDataset:
    case ErrorCode::kUndefinedMetric:
      return 500;
    default:
      return 422;
  }
}

void SendJson(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void SendError(httplib::Response& res, int status, std::string code,
               std::string message) {
  SendJson(res, status, Json{{"code", std::move(code)},
                             {"message", std::move(message)}});
}

void SendError(httplib::Response& res, const Error& e) {
  SendJson(res, StatusFor(e.code()), ErrorToJson(e));
}

// Parses a JSON object body or answers 400.
std::optional<Json> ParseBody(const httplib::Request& req,
                              httplib::Response& res, bool allow_empty) {
  if (allow_empty && req.body.find_first_not_of(" \t\r\n") ==
                         std::string::npos) {
    return Json::object();
  }
  Json j = Json::parse(req.body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    SendError(res, 400, "InvalidCommand", "request body must be a JSON object");
    return std::nullopt;
  }
  return j;
}

Json ModelView(const Project& p) {
  return Json{{"model", p.session.model},
              {"plantuml", diagram::EmitPlantUml(p.session.model)},
              {"revision", p.session.revision}};
}

}  // namespace

struct Service::Impl {
  ServiceOptions options;
  Pipeline pipeline;
  httplib::Server server;
  std::thread thread;

  mutable std::shared_mutex projects_mu;
  std::map<std::string, std::shared_ptr<Project>> projects;
  std::mt19937_64 rng{std::random_device{}()};
  std::mutex rng_mu;

  explicit Impl(ServiceOptions opts)
      : options(std::move(opts)), pipeline(Pipeline::Create(options.config)) {
    LoadExisting();
    Routes();
  }

  fs::path PathOf(const std::string& id) const {
    return options.data_dir / (id + ".json");
  }

  void Persist(const std::string& id, const PipelineResult& result,
               const edit::Session& session) const {
    if (options.data_dir.empty()) return;
    fs::create_directories(options.data_dir);
    SaveProject(result, session, PathOf(id));
  }

  void LoadExisting() {
    if (options.data_dir.empty() || !fs::is_directory(options.data_dir)) {
      return;
    }
    for (const auto& entry : fs::directory_iterator(options.data_dir)) {
      if (entry.path().extension() != ".json") continue;
      auto [result, session] = LoadProject(entry.path());
      auto p = std::make_shared<Project>();
      p->result = std::move(result);
      p->session = std::move(session);
      projects.emplace(entry.path().stem().string(), std::move(p));
    }
  }

  std::string NewId() {
    std::lock_guard lock(rng_mu);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string id;
    std::uint64_t v = rng();
    for (int i = 0; i < 16; ++i, v >>= 4) id += kHex[v & 15];
    return id;
  }

  std::shared_ptr<Project> Find(const std::string& id) const {
    std::shared_lock lock(projects_mu);
    auto it = projects.find(id);
    return it == projects.end() ? nullptr : it->second;
  }

  std::shared_ptr<Project> FindOr404(const httplib::Request& req,
                                     httplib::Response& res) const {
    auto p = Find(req.matches[1]);
    if (!p) {
      SendError(res, 404, "UnknownProject",
                "no project with id " + std::string(req.matches[1]));
    }
    return p;
  }

  void Create(const httplib::Request& req, httplib::Response& res) {
    auto body = ParseBody(req, res, false);
    if (!body) return;
    if (!body->contains("story") || !(*body)["story"].is_string()) {
      SendError(res, 422, "InvalidCommand", "field 'story' must be a string");
      return;
    }
    std::string system_name = options.config.system_name;
    bool filter = options.config.filter;
    if (body->contains("system_name")) {
      const Json& s = (*body)["system_name"];
      if (!s.is_string() || s.get<std::string>().empty()) {
        SendError(res, 422, "InvalidCommand",
                  "field 'system_name' must be a nonempty string");
        return;
      }
      system_name = s.get<std::string>();
    }
    if (body->contains("filter")) {
      if (!(*body)["filter"].is_boolean()) {
        SendError(res, 422, "InvalidCommand", "field 'filter' must be boolean");
        return;
      }
      filter = (*body)["filter"].get<bool>();
    }
    if (filter && !pipeline.model()) {
      SendError(res, 422, "InvalidCommand",
                "filtering requested but the service has no classifier");
      return;
    }
    auto p = std::make_shared<Project>();
    p->result = pipeline.Run((*body)["story"].get<std::string>(), system_name,
                             filter);
    p->session = NewSession(p->result);
    const std::string id = NewId();
    Persist(id, p->result, p->session);
    Json out = ModelView(*p);
    out["project_id"] = id;
    out["result"] = p->result;
    {
      std::unique_lock lock(projects_mu);
      projects.emplace(id, std::move(p));
    }
    SendJson(res, 201, out);
  }

  void Get(const httplib::Request& req, httplib::Response& res) {
    auto p = FindOr404(req, res);
    if (!p) return;
    std::lock_guard lock(p->mu);
    Json out = ModelView(*p);
    out["project_id"] = std::string(req.matches[1]);
    out["result"] = p->result;
    SendJson(res, 200, out);
  }

  // Checks "expected_revision" when present or required. Answers and returns
  // false on failure.
  static bool CheckRevision(const Json& body, const Project& p, bool required,
                            httplib::Response& res) {
    if (!body.contains("expected_revision")) {
      if (!required) return true;
      SendError(res, 422, "InvalidCommand",
                "field 'expected_revision' is required");
      return false;
    }
    const Json& r = body["expected_revision"];
    if (!r.is_number_unsigned() && !r.is_number_integer()) {
      SendError(res, 422, "InvalidCommand",
                "field 'expected_revision' must be an integer");
      return false;
    }
    if (r.get<std::int64_t>() < 0 ||
        r.get<std::uint64_t>() != p.session.revision) {
      SendJson(res, 409,
               Json{{"code", "RevisionConflict"},
                    {"message", "project is at revision " +
                                    std::to_string(p.session.revision)},
                    {"revision", p.session.revision}});
      return false;
    }
    return true;
  }

  void Edit(const httplib::Request& req, httplib::Response& res) {
    auto p = FindOr404(req, res);
    if (!p) return;
    auto body = ParseBody(req, res, false);
    if (!body) return;
    std::lock_guard lock(p->mu);
    if (!CheckRevision(*body, *p, true, res)) return;
    if (!body->contains("command")) {
      SendError(res, 422, "InvalidCommand", "field 'command' is required");
      return;
    }
    edit::Session next =
        edit::ApplyEdit(p->session, edit::CommandFromJson((*body)["command"]));
    Persist(req.matches[1], p->result, next);
    p->session = std::move(next);
    SendJson(res, 200, ModelView(*p));
  }

  void UndoEdit(const httplib::Request& req, httplib::Response& res) {
    auto p = FindOr404(req, res);
    if (!p) return;
    auto body = ParseBody(req, res, true);
    if (!body) return;
    std::lock_guard lock(p->mu);
    if (!CheckRevision(*body, *p, false, res)) return;
    edit::Session prev = edit::Undo(p->session);
    Persist(req.matches[1], p->result, prev);
    p->session = std::move(prev);
    SendJson(res, 200, ModelView(*p));
  }

  void PlantUml(const httplib::Request& req, httplib::Response& res) {
    auto p = FindOr404(req, res);
    if (!p) return;
    std::lock_guard lock(p->mu);
    res.status = 200;
    res.set_content(diagram::EmitPlantUml(p->session.model),
                    "text/plain; charset=utf-8");
  }

  void Delete(const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.matches[1];
    std::shared_ptr<Project> p;
    {
      std::unique_lock lock(projects_mu);
      auto it = projects.find(id);
      if (it != projects.end()) {
        p = it->second;
        projects.erase(it);
      }
    }
    if (!p) {
      SendError(res, 404, "UnknownProject", "no project with id " + id);
      return;
    }
    std::lock_guard lock(p->mu);
    if (!options.data_dir.empty()) {
      std::error_code ec;
      fs::remove(PathOf(id), ec);
    }
    res.status = 204;
  }

  void Routes() {
    using httplib::Request;
    using httplib::Response;
    const std::string id = R"(/api/projects/([0-9a-f]+))";
    server.Post("/api/projects",
                [this](const Request& q, Response& r) { Create(q, r); });
    server.Get(id, [this](const Request& q, Response& r) { Get(q, r); });
    server.Delete(id, [this](const Request& q, Response& r) { Delete(q, r); });
    server.Post(id + "/edits",
                [this](const Request& q, Response& r) { Edit(q, r); });
    server.Post(id + "/undo",
                [this](const Request& q, Response& r) { UndoEdit(q, r); });
    server.Get(id + "/plantuml",
               [this](const Request& q, Response& r) { PlantUml(q, r); });

    server.set_exception_handler(
        [](const Request&, Response& res, std::exception_ptr ep) {
          try {
            std::rethrow_exception(ep);
          } catch (const Error& e) {
            SendError(res, e);
          } catch (const std::exception& e) {
            SendError(res, 500, "Internal", e.what());
          } catch (...) {
            SendError(res, 500, "Internal", "unknown failure");
          }
        });
    server.set_error_handler([](const Request& req, Response& res) {
      if (res.status == 404 && req.path.rfind("/api/", 0) == 0 &&
          res.body.empty()) {
        SendError(res, 404, "NotFound", "no route for " + req.path);
      }
    });

    if (!options.static_dir.empty() && fs::is_directory(options.static_dir)) {
      server.set_mount_point("/", options.static_dir.string());
    } else {
      server.Get("/", [](const Request&, Response& res) {
        res.set_content(kPlaceholderPage, "text/html; charset=utf-8");
      });
    }
  }
};

Service::Service(ServiceOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}

Service::~Service() { Stop(); }

int Service::Bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorCode::kIoError, "cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error(ErrorCode::kIoError,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void Service::Run() { impl_->server.listen_after_bind(); }

int Service::Start(const std::string& host, int port) {
  const int bound = Bind(host, port);
  impl_->thread = std::thread([this] { Run(); });
  impl_->server.wait_until_ready();
  return bound;
}

void Service::Stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

std::size_t Service::project_count() const {
  std::shared_lock lock(impl_->projects_mu);
  return impl_->projects.size();
}

}  // namespace storyuml
