// Copyright 2026 The nsgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "nlohmann/json.hpp"
#include "nsgame/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = nsgame::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kExample = {"--logic", "bh3", "--formula", "(p|q)|(r&q)",
                                           "--val", "p=T,q=N,r=F"};

std::vector<std::string> with(std::string cmd, std::vector<std::string> rest) {
  rest.insert(rest.begin(), std::move(cmd));
  return rest;
}

}  // namespace

TEST_CASE("eval") {
  Result r = run(with("eval", kExample));
  CHECK(r.code == 0);
  CHECK(r.out == "N (Dominator)\n");
  r = run({"eval", "--logic", "bh3", "--formula", "p", "--val", "p=T"});
  CHECK(r.code == 0);
  CHECK(r.out == "T (Verifier)\n");
  r = run({"eval", "--logic", "bhn:2", "--formula", "p & q", "--val", "p=N,q=S"});
  CHECK(r.out == "S (Dictator)\n");
  r = run({"eval", "--logic", "lp", "--formula", "p | q", "--val", "p=P,q=F"});
  CHECK(r.out == "P (Paradoxifier)\n");
}

TEST_CASE("trace reproduces the run listing") {
  Result r = run(with("trace", kExample));
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{(Verifier, (p ∨ q) ∨ (r ∧ q)), (Dominator, (p ∨ q) ∨ (r ∧ q))}\n"
        "{(Verifier, p ∨ q), (Dominator, p ∨ q)}\n"
        "{(Verifier, p), (Dominator, q)}\n");
}

TEST_CASE("solve and iesds") {
  Result r = run(with("solve", kExample));
  CHECK(r.code == 0);
  CHECK(r.out.find("profile: Verifier: true, Falsifier: false, Dominator: true") == 0);
  CHECK(r.out.find("value: N (Dominator)") != std::string::npos);
  CHECK(r.out.find("sequence: L-R") != std::string::npos);

  r = run(with("iesds", kExample));
  CHECK(r.code == 0);
  CHECK(r.out.find("round 1: ELIMINATE Verifier L-L — dominated by Dominator L-R") == 0);
  CHECK(r.out.find("survivor: Dominator L-R") != std::string::npos);
}

TEST_CASE("verify and derive-table") {
  Result r = run({"verify", "--logic", "bh4", "--depth", "2", "--atoms", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("overall: PASS") != std::string::npos);

  r = run({"derive-table", "--logic", "bhn:2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("∧ | T N S F") != std::string::npos);
  CHECK(r.out.find("S | S S S S") != std::string::npos);
  CHECK(r.out.find("F | T N S F") != std::string::npos);
}

TEST_CASE("structured output matches the text renderer") {
  Result text = run(with("eval", kExample));
  Result json = run(with("eval", with("--format", with("structured", kExample))));
  REQUIRE(json.code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["value"].get<std::string>() + " (" + j["dominant"].get<std::string>() + ")\n" ==
        text.out);

  json = run(with("trace", with("--format", with("json", kExample))));
  j = nlohmann::json::parse(json.out);
  REQUIRE(j["run"].size() == 3);
  CHECK(j["run"][2][0]["role"] == "Verifier");
  CHECK(j["run"][2][0]["subformula"] == "p");
  CHECK(j["run"][2][1]["role"] == "Dominator");
  CHECK(j["run"][2][1]["subformula"] == "q");

  json = run(with("solve", with("--format", with("structured", kExample))));
  j = nlohmann::json::parse(json.out);
  CHECK(j["profile"]["Dominator"] == true);
  CHECK(j["strategy"]["sequence"] == "L-R");

  json = run(with("iesds", with("--format", with("structured", kExample))));
  j = nlohmann::json::parse(json.out);
  CHECK(j["survivor"]["sequence"] == "L-R");
  CHECK(j["value"] == "N");

  json = run({"verify", "--logic", "lp", "--depth", "1", "--atoms", "2", "--format", "structured"});
  j = nlohmann::json::parse(json.out);
  CHECK(j["passed"] == true);

  json = run({"derive-table", "--logic", "lp", "--format", "structured"});
  j = nlohmann::json::parse(json.out);
  CHECK(j["matches_stored"] == true);
  CHECK(j["disjunction"]["P"]["F"] == "P");
}

TEST_CASE("valuation files") {
  const auto path = std::filesystem::temp_directory_path() / "nsgame_cli_test_val.txt";
  {
    std::ofstream f(path);
    f << "# running example\np = T\nq = N\nr = F\n";
  }
  Result r = run({"eval", "--formula", "(p|q)|(r&q)", "--val-file", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "N (Dominator)\n");
  std::filesystem::remove(path);
  r = run({"eval", "--formula", "p", "--val-file", path.string()});
  CHECK(r.code == 3);
}

TEST_CASE("exit codes") {
  CHECK(run({"eval", "--formula", "p &", "--val", "p=T"}).code == 2);
  CHECK(run({"eval", "--formula", "p & q", "--val", "p=T"}).code == 3);
  CHECK(run({"eval", "--formula", "p", "--val", "p=X"}).code == 3);
  CHECK(run({"eval", "--logic", "bh3", "--formula", "p", "--val", "p=S"}).code == 3);
  CHECK(run({"iesds", "--formula", "((p|q)&(p|q))|((p|q)&(p|q))", "--val", "p=T,q=F", "--cap",
             "64"})
            .code == 4);
  CHECK(run({}).code == 5);
  CHECK(run({"frobnicate"}).code == 5);
  CHECK(run({"eval", "--logic", "k3", "--formula", "p", "--val", "p=T"}).code == 5);
  CHECK(run({"eval", "--formula", "p"}).code == 5);
  CHECK(run({"eval", "--val", "p=T"}).code == 5);
  CHECK(run({"eval", "--formula", "p", "--val", "p=T", "--format", "xml"}).code == 5);
  CHECK(run({"verify", "--atoms", "0"}).code == 5);
  CHECK(run({"--help"}).code == 0);

  Result r = run({"eval", "--formula", "p &", "--val", "p=T"});
  CHECK(r.err.find('\n') == r.err.size() - 1);
  CHECK(r.out.empty());
}
