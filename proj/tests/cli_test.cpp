// Copyright 2026 The spr Authors
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


#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kCorpus(SPR_CORPUS_DIR);

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout (stderr discarded).
Run spr(const std::string& args) {
  const std::string cmd = std::string("\"") + SPR_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

struct ScratchDir {
  fs::path path;
  explicit ScratchDir(const std::string& name) : path(fs::temp_directory_path() / ("spr_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~ScratchDir() { fs::remove_all(path); }
};

void write(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream(path) << text;
}

}  // namespace

TEST_CASE("repair emits a patch as JSON") {
  const Run r = spr("repair " + quoted(kCorpus / "ex1") + " --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["found"] == true);
  CHECK(j["patch"].get<std::string>().find("(x==3)") != std::string::npos);
  CHECK(j["stats"]["templates_evaluated"].get<int>() >= 1);
  CHECK(j["diff"].get<std::string>().find("+L1:") != std::string::npos);
}

TEST_CASE("repair writes the patched program") {
  ScratchDir dir("patch");
  const Run r = spr("repair " + quoted(kCorpus / "ex1") + " --format tsv --patch-out " + quoted(dir.path / "p.spr"));
  CHECK(r.status == 0);
  std::ifstream in(dir.path / "p.spr");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("(x==3)") != std::string::npos);
}

TEST_CASE("repair without a result exits 1") {
  CHECK(spr("repair " + quoted(kCorpus / "ex1") + " --template-budget 0").status == 1);
}

TEST_CASE("usage and precondition errors exit 2") {
  CHECK(spr("").status == 2);
  CHECK(spr("frobnicate").status == 2);
  CHECK(spr("repair " + quoted(kCorpus / "does_not_exist")).status == 2);

  ScratchDir dir("passing");
  write(dir.path / "program.spr", "L0: x = read -> L1\nL1: print x -> L2\nL2: stop\n");
  write(dir.path / "tests/neg/n1.txt", "in: 4\nout: 4\n");
  CHECK(spr("repair " + quoted(dir.path)).status == 2);
}

TEST_CASE("malformed corpus exits 2 and names the file") {
  ScratchDir dir("malformed");
  write(dir.path / "d1/program.spr", "L0: x = read -> L7\n");
  write(dir.path / "d1/tests/neg/n1.txt", "in: 1\nout: 1\n");
  const std::string cmd =
      std::string("\"") + SPR_CLI_PATH + "\" analyze " + quoted(dir.path) + " 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string err;
  std::array<char, 1024> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) err.append(buf.data(), n);
  const int raw = pclose(pipe);
  CHECK(WEXITSTATUS(raw) == 2);
  CHECK(err.find("program.spr") != std::string::npos);
}

TEST_CASE("run and localize") {
  ScratchDir dir("run");
  write(dir.path / "p.spr", "L0: x = read -> L1\nL1: y = x * 2 -> L2\nL2: print y -> L3\nL3: stop\n");
  const Run r = spr("run " + quoted(dir.path / "p.spr") + " --input \"21\"");
  CHECK(r.status == 0);
  CHECK(r.out.find("42") != std::string::npos);

  const Run loc = spr("localize " + quoted(kCorpus / "ex1") + " --format json");
  CHECK(loc.status == 0);
  const auto j = nlohmann::json::parse(loc.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);
  CHECK(j[0]["rank"] == 1);
}

TEST_CASE("space size does not shrink with a larger localization limit") {
  const auto size = [](int limit) {
    const Run r = spr("space " + quoted(kCorpus / "countdown") + " --format json --loc-limit " + std::to_string(limit));
    REQUIRE(r.status == 0);
    return nlohmann::json::parse(r.out)["space_size"].get<std::size_t>();
  };
  CHECK(size(1) <= size(3));
  CHECK(size(3) <= size(300));
}

TEST_CASE("analyze and explore report per defect") {
  const Run a = spr("analyze " + quoted(kCorpus / "ex1") + " --format json --template-budget 50");
  CHECK(a.status == 0);
  const auto j = nlohmann::json::parse(a.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["correct_in_space"] == true);

  const Run e = spr("explore " + quoted(kCorpus / "ex1") + " --format tsv --budget 10 --order random --seed 3");
  CHECK(e.status == 0);
  CHECK(e.out.rfind("defect\t", 0) == 0);
  CHECK(e.out == spr("explore " + quoted(kCorpus / "ex1") + " --format tsv --budget 10 --order random --seed 3").out);
}
