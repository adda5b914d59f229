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

#include <fstream>
#include <regex>
#include <sstream>

#include "cli.h"
#include "storyuml/serialization.h"
#include "test_support.h"

namespace storyuml {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

void Write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string Read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool HasRow(const std::string& out, const std::string& label,
            const std::string& value) {
  return std::regex_search(out,
                           std::regex("(^|\\n)" + label + " +" + value + "\\n"));
}

TEST_SUITE("cli") {

TEST_CASE("generate matches the golden diagram") {
  testing::TempDir dir;
  Write(dir / "story.txt", std::string(testing::kCustomerStory) + "\n");
  const Outcome o = RunCli({"generate", (dir / "story.txt").string(),
                            "--no-filter", "--system", "System"});
  CHECK(o.code == 0);
  CHECK(o.out == testing::kCustomerPlantUml);
  CHECK(o.err.empty());
}

TEST_CASE("generate reads stdin and writes files") {
  testing::TempDir dir;
  const Outcome o = RunCli(
      {"generate", "--no-filter", "--out", (dir / "d.puml").string()},
      testing::kCustomerStory);
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  CHECK(Read(dir / "d.puml") == testing::kCustomerPlantUml);
}

TEST_CASE("generate json output") {
  const Outcome o =
      RunCli({"generate", "-", "--no-filter", "--json"}, testing::kCustomerStory);
  CHECK(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["plantuml"] == testing::kCustomerPlantUml);
  CHECK(j["corrected_text"] == testing::kCustomerStory);
}

TEST_CASE("generate is byte-identical across runs") {
  const Outcome a = RunCli({"generate"}, testing::kCarRepairStory);
  const Outcome b = RunCli({"generate"}, testing::kCarRepairStory);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("generate reports extraction errors") {
  const Outcome o = RunCli({"generate", "--no-filter"}, "He buys a product.");
  CHECK(o.code == 1);
  CHECK(o.err.find("NoActorsFound") != std::string::npos);
  const Outcome empty = RunCli({"generate"}, "   ");
  CHECK(empty.code == 1);
  CHECK(empty.err.find("EmptyInput") != std::string::npos);
  const Outcome missing = RunCli({"generate", "/nonexistent/story.txt"});
  CHECK(missing.code == 1);
}

TEST_CASE("usage errors") {
  CHECK(RunCli({}).code == 1);
  CHECK(RunCli({"frobnicate"}).code == 1);
  const Outcome bad = RunCli({"generate", "--bogus"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("generate") != std::string::npos);
  CHECK(RunCli({"train"}).code == 1);
  const Outcome help = RunCli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("generate") != std::string::npos);
}

TEST_CASE("train then generate with the model") {
  testing::TempDir dir;
  const auto model = (dir / "model.json").string();
  const Outcome t = RunCli({"train", "--data",
                            testing::DataPath("seed_usecases.csv").string(),
                            "--alpha", "1", "--out", model});
  CHECK(t.code == 0);
  CHECK(t.out.find("trained on") != std::string::npos);
  const Outcome a =
      RunCli({"generate", "--model", model}, testing::kCarRepairStory);
  const Outcome b =
      RunCli({"generate", "--model", model}, testing::kCarRepairStory);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  // The default pipeline trains on the same seed data with the same alpha.
  CHECK(a.out == RunCli({"generate"}, testing::kCarRepairStory).out);
  CHECK(RunCli({"train", "--alpha", "0", "--out", model}).code == 1);
}

TEST_CASE("evaluate prints the extraction counts") {
  const Outcome o = RunCli(
      {"evaluate", "--corpus",
       testing::DataPath("gold_corpus.ndjson").string(), "--no-filter"});
  CHECK(o.code == 0);
  CHECK(HasRow(o.out, "stories", "8"));
  CHECK(HasRow(o.out, "actual actors", "21"));
  CHECK(HasRow(o.out, "identified actors", "20"));
  CHECK(HasRow(o.out, "actual use cases", "36"));
  CHECK(HasRow(o.out, "identified use cases", "32"));
  CHECK(o.out.find("95.24%") != std::string::npos);
}

TEST_CASE("evaluate with classifier metrics") {
  const Outcome o =
      RunCli({"evaluate", "--no-filter", "--ml-test",
              testing::DataPath("usecase_test.csv").string()});
  CHECK(o.code == 0);
  for (const char* row : {"accuracy", "precision", "recall", "f1",
                          "true positives"}) {
    CHECK(o.out.find(row) != std::string::npos);
  }
}

TEST_CASE("interactive edit session") {
  testing::TempDir dir;
  Write(dir / "story.txt", testing::kCarRepairStory);
  const auto project = (dir / "p.json").string();
  const std::string script =
      "reassign \"schedule appointment\" receptionist customer\n"
      "rename-actor customer Client\n"
      "add-actor Customer\n"
      "add-usecase customer \"pay bill\"\n"
      "add-usecase nobody \"pay bill\"\n"
      "add-usecase customer \"unterminated\n"
      "undo\n"
      "model\n"
      "save " + project + "\n"
      "show\n"
      "quit\n"
      "add-actor Never\n";
  const Outcome o = RunCli({"edit", "--no-filter", "--story",
                            (dir / "story.txt").string()},
                           script);
  CHECK(o.code == 0);
  CHECK(o.out.find("ok revision 4") != std::string::npos);
  CHECK(o.out.find("ok revision 3") != std::string::npos);
  CHECK(o.err.find("UnknownActor") != std::string::npos);
  CHECK(o.err.find("unterminated quote") != std::string::npos);
  CHECK(o.out.find("Client [client]\n  - call shop\n  - schedule appointment")
        != std::string::npos);
  CHECK(o.out.find("actor \"Client\" as Cl") != std::string::npos);

  const Outcome reopened = RunCli({"edit", project}, "model\n");
  CHECK(reopened.code == 0);
  CHECK(reopened.out.find("revision 3") != std::string::npos);
  CHECK(reopened.out.find("Customer [customer]") != std::string::npos);
  CHECK(reopened.out.find("Never") == std::string::npos);
}

TEST_CASE("edit needs a source") {
  CHECK(RunCli({"edit"}).code == 1);
  CHECK(RunCli({"edit", "/nonexistent/p.json"}).code == 1);
}

TEST_CASE("word splitting") {
  CHECK(cli::SplitWords("add-usecase customer \"pay bill\"") ==
        std::vector<std::string>{"add-usecase", "customer", "pay bill"});
  CHECK(cli::SplitWords("  a\\ b  \"\" c ") ==
        std::vector<std::string>{"a b", "", "c"});
  CHECK_THROWS_AS(cli::SplitWords("a \"b"), std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
}  // namespace storyuml
