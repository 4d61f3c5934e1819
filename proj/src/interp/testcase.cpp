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
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "spr/interp.hpp"

namespace spr {

namespace {

std::vector<std::int64_t> parse_ints(std::string_view text, const std::string& where) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
    std::string_view tok = text.substr(i, j - i);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::runtime_error(where + ": not an integer: '" + std::string(text.substr(i, j - i)) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace

bool passes(const Machine& machine, const TestCase& test, std::uint64_t fuel) {
  ExecOutcome o = machine.run(test.input, AbstPlan::none(), fuel);
  const auto* ok = std::get_if<ExecSuccess>(&o);
  return ok && output_equals(ok->output, test.output);
}

bool test_all(const Program& prog, const TestSuite& neg, const TestSuite& pos, std::uint64_t fuel) {
  Machine m(prog);
  for (const auto& t : neg) {
    if (!passes(m, t, fuel)) return false;
  }
  for (const auto& t : pos) {
    if (!passes(m, t, fuel)) return false;
  }
  return true;
}

TestCase parse_test_case(std::string_view text, std::string name) {
  TestCase tc;
  tc.name = std::move(name);
  bool seen_in = false;
  bool seen_out = false;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string_view body = line;
    while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
    if (body.empty() || body == "\r") continue;
    const std::string where = tc.name.empty() ? std::string("test case") : tc.name;
    if (body.starts_with("in:")) {
      if (seen_in) throw std::runtime_error(where + ": duplicate 'in:' line");
      tc.input = parse_ints(body.substr(3), where);
      seen_in = true;
    } else if (body.starts_with("out:")) {
      if (seen_out) throw std::runtime_error(where + ": duplicate 'out:' line");
      tc.output = parse_ints(body.substr(4), where);
      seen_out = true;
    } else {
      throw std::runtime_error(where + ": expected 'in:' or 'out:' line");
    }
  }
  if (!seen_in || !seen_out) {
    throw std::runtime_error((tc.name.empty() ? std::string("test case") : tc.name) + ": needs both 'in:' and 'out:'");
  }
  return tc;
}

std::string render_test_case(const TestCase& test) {
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) s += " " + std::to_string(x);
    return s;
  };
  return "in:" + join(test.input) + "\nout:" + join(test.output) + "\n";
}

TestCase load_test_case(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_test_case(buf.str(), path.stem().string());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

TestSuite load_test_suite(const std::filesystem::path& dir) {
  TestSuite suite;
  if (!std::filesystem::is_directory(dir)) return suite;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) suite.push_back(load_test_case(f));
  return suite;
}

}  // namespace spr
