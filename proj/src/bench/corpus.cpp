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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "spr/bench.hpp"

namespace spr {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError(path, "cannot read file");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Program load_program(const fs::path& path) {
  try {
    Program p = parse_program(read_file(path));
    check_well_formed(p);
    return p;
  } catch (const ParseError& e) {
    throw CorpusError(path, e.what());
  } catch (const IllFormedProgram& e) {
    throw CorpusError(path, e.what());
  }
}

TestSuite load_suite(const fs::path& dir) {
  TestSuite suite;
  if (!fs::is_directory(dir)) return suite;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    try {
      suite.push_back(parse_test_case(read_file(f), f.stem().string()));
    } catch (const CorpusError&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw CorpusError(f, e.what());
    }
  }
  return suite;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

CorpusError::CorpusError(fs::path path, const std::string& message)
    : std::runtime_error(path.string() + ": " + message), path_(std::move(path)) {}

std::map<std::string, std::string> parse_meta(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected key=value");
    }
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    out[trim(std::string_view(body).substr(0, eq))] = value;
  }
  return out;
}

long long Corpus::meta_int(const std::string& key, long long fallback) const {
  auto it = meta.find(key);
  if (it == meta.end()) return fallback;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
  if (ec != std::errc() || ptr != it->second.data() + it->second.size()) return fallback;
  return v;
}

Defect load_defect(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw CorpusError(dir, "not a defect directory");
  Defect d;
  d.dir = dir;
  d.id = dir.filename().string();
  if (d.id.empty()) d.id = dir.parent_path().filename().string();
  const fs::path meta_path = dir / "meta";
  if (fs::exists(meta_path)) {
    try {
      d.meta = parse_meta(read_file(meta_path));
    } catch (const CorpusError&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw CorpusError(meta_path, e.what());
    }
    if (auto it = d.meta.find("id"); it != d.meta.end()) d.id = it->second;
    if (auto it = d.meta.find("description"); it != d.meta.end()) d.description = it->second;
  }
  const fs::path prog = dir / "program.spr";
  if (!fs::exists(prog)) throw CorpusError(prog, "missing program");
  d.buggy = load_program(prog);
  d.neg = load_suite(dir / "tests" / "neg");
  d.pos = load_suite(dir / "tests" / "pos");
  d.heldout = load_suite(dir / "heldout");
  if (d.neg.empty()) throw CorpusError(dir / "tests" / "neg", "no negative test cases");
  if (fs::exists(dir / "reference.spr")) d.reference = load_program(dir / "reference.spr");
  return d;
}

Corpus load_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw CorpusError(dir, "not a corpus directory");
  Corpus c;
  c.dir = dir;
  const fs::path meta_path = dir / "corpus.meta";
  if (fs::exists(meta_path)) {
    try {
      c.meta = parse_meta(read_file(meta_path));
    } catch (const CorpusError&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw CorpusError(meta_path, e.what());
    }
  }
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory()) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());
  for (const auto& d : dirs) c.defects.push_back(load_defect(d));
  std::sort(c.defects.begin(), c.defects.end(), [](const Defect& a, const Defect& b) { return a.id < b.id; });
  return c;
}

std::vector<std::string> check_defect(const Defect& defect, std::uint64_t fuel) {
  std::vector<std::string> problems;
  Machine buggy(defect.buggy);
  bool fails_some = false;
  for (const auto& t : defect.neg) fails_some = fails_some || !passes(buggy, t, fuel);
  if (!fails_some) problems.push_back("buggy program passes every negative case");
  for (const auto& t : defect.pos) {
    if (!passes(buggy, t, fuel)) problems.push_back("buggy program fails positive case " + t.name);
  }
  if (defect.reference) {
    Machine ref(*defect.reference);
    for (const auto* suite : {&defect.neg, &defect.pos, &defect.heldout}) {
      for (const auto& t : *suite) {
        if (!passes(ref, t, fuel)) problems.push_back("reference fails case " + t.name);
      }
    }
  }
  return problems;
}

}  // namespace spr
