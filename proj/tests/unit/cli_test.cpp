// Copyright 2026 The sylvtypes Authors
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
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace sylvtypes::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sylvtypes");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sylvtypes_cli_test_" + name);
}

}  // namespace

TEST_CASE("compute emits exact rationals as CSV") {
  const auto r = run({"compute", "--model", "wendel", "--d", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "m,probability,eta,facets\n"
        "-1,1/8,2,0\n"
        "0,1/2,2,3\n"
        "1,3/8,1,4\n");
}

TEST_CASE("compute emits versioned JSON") {
  const auto r = run({"compute", "--model", "beta", "--d", "3", "--beta", "0", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == "sylvtypes.compute/1");
  CHECK(doc["model"] == "beta");
  CHECK(doc["exact"] == false);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["probability"].get<double>() == doctest::Approx(9.0 / 143).epsilon(1e-9));
  CHECK(doc["rows"][1]["facets"] == 6);
}

TEST_CASE("floats carry 17 significant digits") {
  const auto r = run({"compute", "--model", "gaussian", "--d", "2"});
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(row.rfind("0,0.350959312183", 0) == 0);
  const auto p = row.substr(2, row.find(',', 2) - 2);
  CHECK(p.size() >= 18);
}

TEST_CASE("usage errors exit with 2") {
  auto r = run({"compute", "--model", "gaussian", "--d", "13"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("2 <= d <= 12") != std::string::npos);
  CHECK(run({"compute", "--model", "nope"}).code == kExitUsage);
  CHECK(run({"compute"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"clt", "--model", "gaussian"}).code == kExitUsage);
  CHECK(run({"compute", "--model", "beta-prime", "--d", "3"}).code == kExitUsage);
  CHECK(run({"mc", "--model", "gaussian", "--d", "2", "--samples", "0.5"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("youden command") {
  const auto r = run({"youden", "--n", "2", "--k", "1"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("k,probability\n1,", 0) == 0);
  const auto all = run({"youden", "--n", "6", "--format", "json"});
  const auto doc = nlohmann::json::parse(all.out);
  CHECK(doc["rows"].size() == 7);
}

TEST_CASE("clt command") {
  const auto r = run({"clt", "--model", "wendel", "--d", "200", "--d-min", "20", "--d-step", "180", "--t", "1",
                      "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][1]["gap"].get<double>() < doc["rows"][0]["gap"].get<double>());
  const auto big_t = run({"clt", "--model", "conv-rw", "--d", "50", "--d-min", "50", "--t", "40"});
  CHECK(big_t.out.find(",1,") != std::string::npos);
}

TEST_CASE("verify command") {
  const auto r = run({"verify", "--suite", "identities", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["rows"].size() > 5);
}

TEST_CASE("mc output is byte-identical for a fixed seed") {
  const auto a = scratch("a.csv"), b = scratch("b.csv");
  const std::vector<std::string> common{"mc", "--model", "conv-rw", "--d", "3", "--samples", "2e4", "--seed", "5"};
  auto args = common;
  args.insert(args.end(), {"--out", a.string()});
  CHECK(run(args).code == kExitOk);
  args = common;
  args.insert(args.end(), {"--out", b.string(), "--workers", "2"});
  CHECK(run(args).code == kExitOk);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("m,count,estimate,lo,hi,target,covered\n", 0) == 0);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("flags beat the config file, which beats the environment") {
  const auto cfg = scratch("config.toml");
  {
    std::ofstream out(cfg);
    out << "[compute]\nd = 5\n";
  }
  ::setenv("SYLVTYPES_D", "4", 1);
  auto from_cfg = run({"compute", "--model", "conv-rw", "--config", cfg.string(), "--format", "json"});
  CHECK(nlohmann::json::parse(from_cfg.out)["d"] == 5);
  auto from_flag = run({"compute", "--model", "conv-rw", "--config", cfg.string(), "--d", "3", "--format", "json"});
  CHECK(nlohmann::json::parse(from_flag.out)["d"] == 3);
  auto from_env = run({"compute", "--model", "conv-rw", "--format", "json"});
  CHECK(nlohmann::json::parse(from_env.out)["d"] == 4);
  ::unsetenv("SYLVTYPES_D");
  std::filesystem::remove(cfg);
}
