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

#include "storyuml/diagram.h"
#include "storyuml/editsession.h"
#include "storyuml/error.h"
#include "storyuml/serialization.h"
#include "test_support.h"

namespace storyuml {
namespace {

using namespace edit;

Session CarRepair() {
  UseCaseModel m;
  m.InsertActor(Actor::Named("Customer"), {UseCase::FromPhrase("call shop")});
  m.InsertActor(Actor::Named("Receptionist"),
                {UseCase::FromPhrase("check availability"),
                 UseCase::FromPhrase("schedule appointment")});
  return Session{m, 0, {}};
}

std::string Dump(const Session& s) { return Json(s).dump(); }

ErrorCode CodeOf(const Session& s, const EditCommand& cmd) {
  try {
    ApplyEdit(s, cmd);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("edit succeeded: " << CommandName(cmd));
  return ErrorCode::kIoError;
}

std::vector<std::string> Phrases(const Session& s, const char* key) {
  std::vector<std::string> out;
  for (const auto& uc : s.model.UseCasesOf(key)) out.push_back(uc.phrase);
  return out;
}

TEST_SUITE("editsession") {

TEST_CASE("reassign moves the association") {
  const Session s0 = CarRepair();
  const Session s1 = ApplyEdit(
      s0, ReassignUseCase{"schedule appointment", "receptionist", "customer"});
  CHECK(s1.revision == 1);
  CHECK(Phrases(s1, "customer") ==
        std::vector<std::string>{"call shop", "schedule appointment"});
  CHECK(Phrases(s1, "receptionist") ==
        std::vector<std::string>{"check availability"});
  const std::string uml = diagram::EmitPlantUml(s1.model);
  CHECK(uml.find("    Cu --> UC2\n") != std::string::npos);
  CHECK(uml.find("usecase \"schedule appointment\" as UC2") !=
        std::string::npos);
  const Session back = Undo(s1);
  CHECK(Dump(back) == Dump(s0));
}

TEST_CASE("rename actor keeps position and use cases") {
  const Session s0 = CarRepair();
  const Session s1 = ApplyEdit(s0, RenameActor{"customer", "Client"});
  CHECK(s1.model.actors()[0].name == "Client");
  CHECK(s1.model.actors()[0].key == "client");
  CHECK(Phrases(s1, "client") == std::vector<std::string>{"call shop"});
  CHECK(diagram::EmitPlantUml(s1.model).find("actor \"Client\" as Cl") !=
        std::string::npos);
  CHECK(Dump(Undo(s1)) == Dump(s0));

  const Session cased = ApplyEdit(s0, RenameActor{"Customer", "CUSTOMER"});
  CHECK(cased.model.actors()[0].name == "CUSTOMER");
}

TEST_CASE("add and remove") {
  Session s = CarRepair();
  s = ApplyEdit(s, AddActor{"Mechanic"});
  s = ApplyEdit(s, AddUseCase{"mechanic", "Repair  Car"});
  CHECK(Phrases(s, "mechanic") == std::vector<std::string>{"repair car"});
  s = ApplyEdit(s, RemoveUseCase{"receptionist", "check availability"});
  s = ApplyEdit(s, RenameUseCase{"customer", "call shop", "phone shop"});
  CHECK(Phrases(s, "customer") == std::vector<std::string>{"phone shop"});
  s = ApplyEdit(s, RemoveActor{"receptionist"});
  CHECK(s.model.actors().size() == 2);
  CHECK(s.revision == 5);
  CHECK(s.undo_stack.size() == 5);
  for (int i = 0; i < 5; ++i) s = Undo(s);
  CHECK(Dump(s) == Dump(CarRepair()));
}

TEST_CASE("edit errors") {
  const Session s = CarRepair();
  CHECK(CodeOf(s, AddActor{"customer"}) == ErrorCode::kDuplicateActor);
  CHECK(CodeOf(s, AddActor{"  "}) == ErrorCode::kInvalidCommand);
  CHECK(CodeOf(s, RemoveActor{"nobody"}) == ErrorCode::kUnknownActor);
  CHECK(CodeOf(s, RenameActor{"customer", "Receptionist"}) ==
        ErrorCode::kDuplicateActor);
  CHECK(CodeOf(s, RenameActor{"nobody", "X"}) == ErrorCode::kUnknownActor);
  CHECK(CodeOf(s, AddUseCase{"customer", "call shop"}) ==
        ErrorCode::kDuplicateUseCase);
  CHECK(CodeOf(s, AddUseCase{"customer", "call"}) ==
        ErrorCode::kInvalidCommand);
  CHECK(CodeOf(s, AddUseCase{"nobody", "pay bill"}) ==
        ErrorCode::kUnknownActor);
  CHECK(CodeOf(s, RemoveUseCase{"customer", "pay bill"}) ==
        ErrorCode::kUnknownUseCase);
  CHECK(CodeOf(s, RenameUseCase{"receptionist", "check availability",
                                "schedule appointment"}) ==
        ErrorCode::kDuplicateUseCase);
  CHECK(CodeOf(s, ReassignUseCase{"call shop", "receptionist", "customer"}) ==
        ErrorCode::kUnknownUseCase);
  CHECK(CodeOf(s, ReassignUseCase{"call shop", "customer", "customer"}) ==
        ErrorCode::kDuplicateUseCase);
  CHECK(CodeOf(s, ReassignUseCase{"call shop", "customer", "nobody"}) ==
        ErrorCode::kUnknownActor);
  CHECK(CodeOf(s, ReassignUseCase{"", "customer", "receptionist"}) ==
        ErrorCode::kInvalidCommand);
}

TEST_CASE("undo on a fresh session") {
  try {
    Undo(CarRepair());
    FAIL("expected NothingToUndo");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNothingToUndo);
  }
}

TEST_CASE("failed edits leave the session untouched") {
  const Session s = CarRepair();
  const std::string before = Dump(s);
  CHECK_THROWS(ApplyEdit(s, RemoveActor{"nobody"}));
  CHECK(Dump(s) == before);
}

TEST_CASE("command names and json") {
  const std::vector<EditCommand> all{
      AddActor{"A"},
      RemoveActor{"a"},
      RenameActor{"a", "B"},
      AddUseCase{"a", "x y"},
      RemoveUseCase{"a", "x y"},
      RenameUseCase{"a", "x y", "z w"},
      ReassignUseCase{"x y", "a", "b"}};
  for (const auto& cmd : all) {
    const Json j = CommandToJson(cmd);
    CHECK(j["type"] == CommandName(cmd));
    CHECK(CommandToJson(CommandFromJson(j)) == j);
  }
  CHECK_THROWS_AS(CommandFromJson(Json{{"type", "Explode"}}), Error);
  CHECK_THROWS_AS(CommandFromJson(Json{{"type", "AddActor"}}), Error);
  CHECK_THROWS_AS(CommandFromJson(Json{{"type", "AddActor"}, {"name", 3}}),
                  Error);
}

TEST_CASE("apply then undo restores the session") {
  testing::EditFuzzer fuzz(2024);
  int applied = 0;
  for (int i = 0; i < 300; ++i) {
    Session s{fuzz.Model(), static_cast<std::uint64_t>(fuzz.Int(0, 5)), {}};
    // Give the session some history first.
    for (int k = fuzz.Int(0, 3); k > 0; --k) {
      try {
        s = ApplyEdit(s, fuzz.Command(s.model));
      } catch (const Error&) {
      }
    }
    const std::string before = Dump(s);
    const EditCommand cmd = fuzz.Command(s.model);
    Session next;
    try {
      next = ApplyEdit(s, cmd);
    } catch (const Error&) {
      CHECK(Dump(s) == before);
      continue;
    }
    ++applied;
    CHECK(next.revision == s.revision + 1);
    INFO(CommandToJson(cmd).dump());
    CHECK(Dump(Undo(next)) == before);
  }
  CHECK(applied > 100);
}

TEST_CASE("undoing a sequence in reverse restores the start") {
  testing::EditFuzzer fuzz(99);
  for (int round = 0; round < 50; ++round) {
    Session s{fuzz.Model(), 0, {}};
    const std::string start = Dump(s);
    int applied = 0;
    for (int k = 0; k < 20; ++k) {
      try {
        s = ApplyEdit(s, fuzz.Command(s.model));
        ++applied;
      } catch (const Error&) {
      }
    }
    for (int k = 0; k < applied; ++k) s = Undo(s);
    CHECK(Dump(s) == start);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace storyuml
