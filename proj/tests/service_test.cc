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
#include <httplib.h>

#include <atomic>
#include <thread>

#include "storyuml/serialization.h"
#include "storyuml/service.h"
#include "test_support.h"

namespace storyuml {
namespace {

struct Running {
  explicit Running(const std::filesystem::path& data_dir)
      : service([&] {
          ServiceOptions o;
          o.data_dir = data_dir;
          return o;
        }()),
        port(service.Start("127.0.0.1", 0)),
        client("127.0.0.1", port) {}

  Json PostJson(const std::string& path, const Json& body, int expect) {
    auto res = client.Post(path, body.dump(), "application/json");
    REQUIRE(res);
    INFO(res->body);
    CHECK(res->status == expect);
    return res->body.empty() ? Json() : Json::parse(res->body);
  }

  Json GetJson(const std::string& path, int expect) {
    auto res = client.Get(path);
    REQUIRE(res);
    CHECK(res->status == expect);
    return Json::parse(res->body);
  }

  std::string Create(const std::string& story) {
    Json body = PostJson("/api/projects",
                         Json{{"story", story}, {"filter", false}}, 201);
    return body["project_id"].get<std::string>();
  }

  Service service;
  int port;
  httplib::Client client;
};

Json Command(Json cmd, std::uint64_t revision) {
  return Json{{"expected_revision", revision}, {"command", std::move(cmd)}};
}

TEST_SUITE("service") {

TEST_CASE("create and fetch a project") {
  testing::TempDir dir;
  Running s(dir.path());
  const Json created = s.PostJson(
      "/api/projects",
      Json{{"story", testing::kCustomerStory}, {"filter", false}}, 201);
  const std::string id = created["project_id"];
  CHECK(created["result"]["plantuml"] == testing::kCustomerPlantUml);
  CHECK(created["plantuml"] == testing::kCustomerPlantUml);
  CHECK(created["revision"] == 0);

  const Json got = s.GetJson("/api/projects/" + id, 200);
  CHECK(got["revision"] == 0);
  CHECK(got["result"] == created["result"]);
  CHECK(got["model"]["actors"][0]["name"] == "Customer");

  auto uml = s.client.Get("/api/projects/" + id + "/plantuml");
  REQUIRE(uml);
  CHECK(uml->status == 200);
  CHECK(uml->body == testing::kCustomerPlantUml);
  CHECK(std::filesystem::exists(dir / (id + ".json")));
}

TEST_CASE("default filtering uses the bundled classifier") {
  testing::TempDir dir;
  Running s(dir.path());
  const Json created = s.PostJson(
      "/api/projects", Json{{"story", testing::kCarRepairStory}}, 201);
  const auto& result = created["result"];
  CHECK(result["raw_model"]["actors"].size() == 2);
  CHECK(result["filtered_model"]["actors"].size() == 2);
}

TEST_CASE("edits, conflicts and undo") {
  testing::TempDir dir;
  Running s(dir.path());
  const std::string id = s.Create(testing::kCarRepairStory);
  const std::string base = "/api/projects/" + id;

  Json r = s.PostJson(base + "/edits",
                      Command({{"type", "ReassignUseCase"},
                               {"phrase", "schedule appointment"},
                               {"from_key", "receptionist"},
                               {"to_key", "customer"}},
                              0),
                      200);
  CHECK(r["revision"] == 1);
  const std::string uml = r["plantuml"];
  CHECK(uml.find("    Cu --> UC2\n") != std::string::npos);
  auto fetched = s.client.Get(base + "/plantuml");
  REQUIRE(fetched);
  CHECK(fetched->body == uml);

  // Stale revision.
  r = s.PostJson(base + "/edits",
                 Command({{"type", "RenameActor"},
                          {"key", "customer"},
                          {"new_name", "Client"}},
                         0),
                 409);
  CHECK(r["code"] == "RevisionConflict");
  CHECK(r["revision"] == 1);

  // Missing revision and module errors are validation failures.
  r = s.PostJson(base + "/edits",
                 Json{{"command", {{"type", "AddActor"}, {"name", "X"}}}},
                 422);
  CHECK(r["code"] == "InvalidCommand");
  r = s.PostJson(base + "/edits",
                 Command({{"type", "AddActor"}, {"name", "Customer"}}, 1),
                 422);
  CHECK(r["code"] == "DuplicateActor");
  r = s.PostJson(base + "/edits", Command({{"type", "Explode"}}, 1), 422);
  CHECK(r["code"] == "InvalidCommand");

  r = s.PostJson(base + "/edits",
                 Command({{"type", "RenameActor"},
                          {"key", "customer"},
                          {"new_name", "Client"}},
                         1),
                 200);
  CHECK(r["revision"] == 2);
  CHECK(r["model"]["actors"][0]["name"] == "Client");

  r = s.PostJson(base + "/undo", Json::object(), 200);
  CHECK(r["revision"] == 1);
  CHECK(r["model"]["actors"][0]["name"] == "Customer");
  r = s.PostJson(base + "/undo", Json{{"expected_revision", 5}}, 409);
  s.PostJson(base + "/undo", Json::object(), 200);
  r = s.PostJson(base + "/undo", Json::object(), 422);
  CHECK(r["code"] == "NothingToUndo");

  // GET never changes the revision.
  for (int i = 0; i < 3; ++i) CHECK(s.GetJson(base, 200)["revision"] == 0);
}

TEST_CASE("request validation") {
  testing::TempDir dir;
  Running s(dir.path());
  auto res = s.client.Post("/api/projects", "not json", "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);
  Json r = s.PostJson("/api/projects", Json{{"story", 5}}, 422);
  CHECK(r["code"] == "InvalidCommand");
  r = s.PostJson("/api/projects", Json{{"story", "   "}}, 422);
  CHECK(r["code"] == "EmptyInput");
  r = s.PostJson("/api/projects",
                 Json{{"story", "He buys a product."}, {"filter", false}},
                 201);
  CHECK(r["result"]["diagnostics"][0]["code"] == "NoActorsFound");
  CHECK(r["model"]["actors"].empty());
}

TEST_CASE("unknown projects and deletion") {
  testing::TempDir dir;
  Running s(dir.path());
  Json r = s.GetJson("/api/projects/00ff", 404);
  CHECK(r["code"] == "UnknownProject");
  const std::string id = s.Create(testing::kCustomerStory);
  auto del = s.client.Delete("/api/projects/" + id);
  REQUIRE(del);
  CHECK(del->status == 204);
  s.GetJson("/api/projects/" + id, 404);
  CHECK_FALSE(std::filesystem::exists(dir / (id + ".json")));
  del = s.client.Delete("/api/projects/" + id);
  REQUIRE(del);
  CHECK(del->status == 404);
}

TEST_CASE("projects survive a restart") {
  testing::TempDir dir;
  std::string id;
  {
    Running s(dir.path());
    id = s.Create(testing::kCarRepairStory);
    s.PostJson("/api/projects/" + id + "/edits",
               Command({{"type", "AddActor"}, {"name", "Mechanic"}}, 0), 200);
  }
  Running again(dir.path());
  CHECK(again.service.project_count() == 1);
  const Json got = again.GetJson("/api/projects/" + id, 200);
  CHECK(got["revision"] == 1);
  CHECK(got["model"]["actors"].size() == 3);
  again.PostJson("/api/projects/" + id + "/undo", Json::object(), 200);
}

TEST_CASE("concurrent edits on one project are serialized") {
  testing::TempDir dir;
  Running s(dir.path());
  const std::string id = s.Create(testing::kCustomerStory);
  const std::string path = "/api/projects/" + id + "/edits";
  std::atomic<int> ok{0};
  std::atomic<int> conflicts{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 6; ++t) {
    threads.emplace_back([&, t] {
      httplib::Client c("127.0.0.1", s.port);
      for (int k = 0; k < 5; ++k) {
        // Read the revision, then race the other writers for it.
        auto got = c.Get("/api/projects/" + id);
        if (!got) continue;
        const auto rev = Json::parse(got->body)["revision"].get<int>();
        const Json body = Command(
            {{"type", "AddActor"},
             {"name", "A" + std::to_string(t) + "x" + std::to_string(k)}},
            static_cast<std::uint64_t>(rev));
        auto res = c.Post(path, body.dump(), "application/json");
        if (!res) continue;
        if (res->status == 200) ++ok;
        if (res->status == 409) ++conflicts;
      }
    });
  }
  for (auto& th : threads) th.join();
  CHECK(ok + conflicts == 30);
  const Json got = s.GetJson("/api/projects/" + id, 200);
  CHECK(got["revision"] == ok.load());
  CHECK(got["model"]["actors"].size() == static_cast<std::size_t>(ok + 1));
}

TEST_CASE("root serves a page") {
  testing::TempDir dir;
  Running s(dir.path());
  auto res = s.client.Get("/");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->body.find("/api/projects") != std::string::npos);
}

}  // TEST_SUITE

}  // namespace
}  // namespace storyuml
