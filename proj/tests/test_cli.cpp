// Copyright 2026 The symprot Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "symprot/cli.hpp"
#include "symprot/serialize.hpp"

namespace symprot {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "symprot_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

TEST(CliTest, CertifyProtected) {
  const Json j = run_json({"certify", "--space", "hm:1", "--state", "psi4", "--samples", "100"});
  EXPECT_EQ(j.at("verdict"), "Protected");
  EXPECT_EQ(j.at("residuals").size(), 100u);
  EXPECT_EQ(j.at("schema"), "symprot/1");
  EXPECT_LT(j.at("worst_residual").get<double>(), 1e-10);
}

TEST(CliTest, CertifyExpectation) {
  EXPECT_EQ(run({"certify", "--state", "phi1", "--expect", "protected"}).code, 1);
  EXPECT_EQ(run({"certify", "--state", "phi3", "--expect", "protected"}).code, 0);
  EXPECT_EQ(run({"certify", "--state", "phi1", "--expect", "not-protected"}).code, 0);
  EXPECT_EQ(run({"certify", "--state", "phi1"}).code, 0);
}

TEST(CliTest, SearchCountsH0) {
  const Json j = run_json({"search", "--space", "h0", "--n", "4"});
  EXPECT_EQ(j.at("n_rays"), 5);
  EXPECT_EQ(j.at("verdict"), "Complete");
}

TEST(CliTest, SearchUniqueness) {
  const Json j = run_json({"search", "--space", "hm:2", "--n", "4", "--uniqueness"});
  EXPECT_TRUE(j.at("unique").get<bool>());
  EXPECT_EQ(j.at("observed_coefficients"), Json::parse("[1,-2,1]"));
}

TEST(CliTest, Capacity) {
  EXPECT_EQ(run_json({"capacity", "--two-way", "false", "--eps", "0.25"}).at("capacity"), 0.5);
  EXPECT_NEAR(run_json({"capacity", "--two-way", "true", "--eps", "0.3"})
                  .at("capacity")
                  .get<double>(),
              0.7, 1e-15);
  const auto csv = run({"capacity", "--output", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 102);
  EXPECT_EQ(run({"capacity", "--eps", "1.5"}).code, 2);
}

TEST(CliTest, Catalog) {
  const Json all = run_json({"catalog"});
  EXPECT_EQ(all.at("states").size(), 9u);
  const Json hm = run_json({"catalog", "--space", "hm:3"});
  EXPECT_EQ(hm.at("states").size(), 4u);
  EXPECT_EQ(hm.at("states")[3].at("name"), "psi4:m=3");
  const Json count = run_json({"catalog", "--count", "--space", "h0", "--n", "5"});
  EXPECT_EQ(count.at("total"), 6);
  EXPECT_EQ(count.at("symmetric"), 3);
  const auto pretty = run({"catalog", "--state", "phi3", "--output", "pretty"});
  EXPECT_NE(pretty.out.find("|2,0>"), std::string::npos);
  EXPECT_NE(pretty.out.find("|0,2>"), std::string::npos);
}

TEST(CliTest, Entangle) {
  const Json phi3 = run_json({"entangle", "--state", "phi3"});
  EXPECT_EQ(phi3.at("slater_rank"), 2);
  EXPECT_TRUE(phi3.at("is_single_product").get<bool>());
  const Json psi4 = run_json({"entangle", "--state", "psi4"});
  EXPECT_EQ(psi4.at("slater_rank"), 4);
  EXPECT_TRUE(psi4.at("product_modes").is_null());
  EXPECT_EQ(run({"entangle", "--state", "pair:m=1,N=4"}).code, 2);
}

TEST(CliTest, DfsWritesCurve) {
  const auto curve = temp_file("curve.csv");
  const Json j = run_json({"dfs", "--carrier", "pair:m=1,N=2", "--d", "4", "--loss", "0.2",
                           "--curve", curve.string()});
  EXPECT_NEAR(j.at("outcome").at("fidelity").get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j.at("outcome").at("success_probability").get<double>(), 0.8, 1e-12);
  EXPECT_NEAR(j.at("capacity").at("one_way").get<double>(), 0.6, 1e-12);
  std::ifstream in(curve);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 102);
  EXPECT_EQ(run({"dfs", "--carrier", "phi1"}).code, 2);
}

TEST(CliTest, StateFiles) {
  const Json state = run_json({"catalog", "--state", "psi4:m=2"}).at("states")[0].at("state");
  const auto path = temp_file("psi4.json");
  write(path, state.dump());
  const Json j = run_json({"certify", "--state", path.string(), "--samples", "10"});
  EXPECT_EQ(j.at("verdict"), "Protected");
  const Json k = run_json({"certify", "--state", "file:" + path.string(), "--samples", "10"});
  EXPECT_EQ(k.at("verdict"), "Protected");
  EXPECT_EQ(run({"certify", "--state", path.string(), "--space", "hm:1"}).code, 2);

  const auto bad = temp_file("bad.json");
  write(bad, "{ not json");
  EXPECT_EQ(run({"certify", "--state", bad.string()}).code, 2);
  write(bad, R"({"space":"h0","n":2,"amplitudes":[[1,0]]})");
  EXPECT_EQ(run({"certify", "--state", bad.string()}).code, 2);
  EXPECT_EQ(run({"certify", "--state", temp_file("missing.json").string()}).code, 2);
}

TEST(CliTest, Validate) {
  const auto good = temp_file("good.json");
  write(good, R"({"matrix":[[[0.5,0],[0.1,0.2]],[[0.1,0.2],[0.5,0]]]})");
  const Json j = run_json({"validate", "--matrix", good.string(), "--space", "h0"});
  EXPECT_TRUE(j.at("ok").get<bool>());
  EXPECT_EQ(j.at("unitarity"), "subunitary");
  const auto bad = temp_file("bad_matrix.json");
  write(bad, R"([[[0.5,0],[0.1,0]],[[0.2,0],[0.5,0]]])");
  EXPECT_FALSE(
      run_json({"validate", "--matrix", bad.string(), "--space", "h0"}).at("ok").get<bool>());
  EXPECT_EQ(run({"validate", "--matrix", good.string(), "--space", "hm:1"}).code, 2);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"certify"}).code, 2);
  EXPECT_EQ(run({"certify", "--state", "phi9"}).code, 2);
  EXPECT_EQ(run({"certify", "--state", "phi3", "--output", "xml"}).code, 2);
  EXPECT_EQ(run({"search", "--space", "h0", "--n", "11"}).code, 2);
  EXPECT_EQ(run({"search", "--space", "hq", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"certify", "--state", "phi3", "--samples", "1"}).code, 2);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("certify"), std::string::npos);
}

TEST(CliTest, PhotonLimitFromEnvironment) {
  ::setenv("SYMPROT_NMAX", "3", 1);
  EXPECT_EQ(run({"search", "--space", "h0", "--n", "4"}).code, 2);
  ::unsetenv("SYMPROT_NMAX");
  EXPECT_EQ(run({"search", "--space", "h0", "--n", "4"}).code, 0);
}

TEST(CliTest, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"certify", "--state", "phi2", "--samples", "16", "--seed", "5"},
      {"search", "--space", "hm:1", "--n", "2", "--seed", "3"},
      {"catalog"},
      {"entangle", "--state", "psi3"},
      {"dfs", "--carrier", "psi4", "--d", "3", "--seed", "9"},
      {"capacity"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    EXPECT_EQ(a.code, 0) << c[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << c[0];
  }
  EXPECT_NE(run({"certify", "--state", "phi2", "--seed", "1"}).out,
            run({"certify", "--state", "phi2", "--seed", "2"}).out);
}

TEST(CliTest, OutputFormats) {
  for (const char* fmt : {"csv", "pretty"}) {
    for (const auto& c : std::vector<std::vector<std::string>>{
             {"certify", "--state", "psi4", "--samples", "8"},
             {"search", "--space", "h0", "--n", "2"},
             {"catalog"},
             {"entangle", "--state", "phi3"},
             {"dfs"},
             {"capacity", "--eps", "0.1"}}) {
      auto args = c;
      args.push_back("--output");
      args.push_back(fmt);
      const auto r = run(args);
      EXPECT_EQ(r.code, 0) << c[0] << ' ' << fmt << ": " << r.err;
      EXPECT_FALSE(r.out.empty());
    }
  }
}

}  // namespace
}  // namespace symprot
