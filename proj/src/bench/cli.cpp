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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spr/bench.hpp"
#include "spr/localize.hpp"

namespace spr {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNoRepair = 1;
constexpr int kUsage = 2;

struct Common {
  std::size_t loc_limit = 200;
  bool ext_cond = false;
  bool ext_rep = false;
  bool goto_control = false;
  std::size_t max_flip_trials = 11;
  std::size_t top_conditions = 20;
  std::uint64_t fuel = kDefaultFuel;
  std::size_t jobs = 1;
  std::string format = "tsv";
  std::string out;
  std::uint64_t seed = 1;
  std::size_t battery = 200;

  SpaceConfig space() const { return {loc_limit, ext_cond, ext_rep, goto_control}; }
  SynthConfig synth() const { return {max_flip_trials, top_conditions, fuel, ext_cond}; }
  AnalysisConfig analysis() const {
    AnalysisConfig cfg;
    cfg.space = space();
    cfg.synth = synth();
    cfg.adjudication.battery_size = battery;
    cfg.adjudication.seed = seed;
    cfg.jobs = jobs;
    return cfg;
  }
};

void add_space_options(CLI::App* app, Common& c) {
  app->add_option("--loc-limit", c.loc_limit, "Number of localized statements to transform");
  app->add_flag("--ext-cond", c.ext_cond, "Add </> and variable-variable conditions");
  app->add_flag("--ext-rep", c.ext_rep, "Add operator expressions as replacement values");
  app->add_flag("--goto-control", c.goto_control, "Let control templates jump to any label");
}

void add_synth_options(CLI::App* app, Common& c) {
  app->add_option("--max-flip-trials", c.max_flip_trials, "Executions per negative case in stage one");
  app->add_option("--top-conditions", c.top_conditions, "Conditions validated per template");
  app->add_option("--fuel", c.fuel, "Step limit per execution");
  app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app->add_option("--out", c.out, "Write the report to this file");
}

void add_analysis_options(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Seed for fuzzing and random orders");
  app->add_option("--battery", c.battery, "Fuzz inputs compared against the reference");
}

bool is_defect_dir(const fs::path& p) { return fs::exists(p / "program.spr"); }

std::vector<Defect> load_target(const fs::path& p) {
  if (is_defect_dir(p)) return {load_defect(p)};
  return load_corpus(p).defects;
}

int emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(c.out);
  if (!f) {
    std::cerr << "spr: cannot write " << c.out << "\n";
    return kUsage;
  }
  f << text;
  return kOk;
}

std::vector<std::int64_t> parse_input(const std::string& text) {
  return parse_test_case("in: " + text + "\nout:\n").input;
}

int cmd_run(const std::string& target, const std::string& input, const std::string& plan_bits, bool force_one,
            std::uint64_t fuel) {
  const fs::path path(target);
  if (fs::is_directory(path)) {
    Defect d = load_defect(path);
    Machine m(d.buggy);
    std::cout << "suite\tcase\tstatus\toutput\n";
    auto show = [&](const char* suite, const TestSuite& cases) {
      for (const auto& t : cases) {
        ExecOutcome o = m.run(t.input, AbstPlan::none(), fuel);
        std::string status = passes(m, t, fuel) ? "pass" : "fail";
        if (!succeeded(o)) status += " (" + std::string(to_string(std::get<ExecBottom>(o).cause)) + ")";
        std::cout << suite << '\t' << t.name << '\t' << status << '\t' << render_output(output_of(o)) << '\n';
      }
    };
    show("neg", d.neg);
    show("pos", d.pos);
    show("heldout", d.heldout);
    return kOk;
  }
  std::ifstream f(path);
  if (!f) throw CorpusError(path, "cannot read file");
  std::stringstream buf;
  buf << f.rdbuf();
  Program prog;
  try {
    prog = parse_program(buf.str(), {.allow_reserved = true});
    check_well_formed(prog);
  } catch (const std::runtime_error& e) {
    throw CorpusError(path, e.what());
  }
  AbstPlan plan;
  for (char ch : plan_bits) {
    if (ch != '0' && ch != '1') throw CLI::ValidationError("--plan", "expected a string of 0 and 1");
    plan.prefix.push_back(ch - '0');
  }
  plan.exhaustion = force_one ? Exhaustion::force_one : Exhaustion::preserve;
  ExecOutcome o = exec(prog, parse_input(input), plan, fuel);
  std::cout << render_output(output_of(o)) << '\n';
  if (!recorded_of(o).empty()) {
    std::string bits;
    for (int b : recorded_of(o)) bits += static_cast<char>('0' + b);
    std::cout << "recorded: " << bits << '\n';
  }
  if (!succeeded(o)) {
    std::cerr << "spr: execution failed: " << to_string(std::get<ExecBottom>(o).cause) << '\n';
    return kNoRepair;
  }
  return kOk;
}

int cmd_localize(const std::string& target, std::size_t limit, const Common& c) {
  Defect d = load_defect(target);
  auto scores = score_statements(d.buggy, d.neg, d.pos, c.fuel);
  if (scores.size() > limit) scores.resize(limit);
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& s : scores) {
      arr.push_back({{"label", s.label.str()}, {"a", s.a}, {"b", s.b}, {"c", s.c}, {"rank", s.rank}});
    }
    return emit(c, arr.dump(2) + "\n");
  }
  std::ostringstream out;
  out << "label\ta\tb\tc\trank\n";
  for (const auto& s : scores) out << s.label.str() << '\t' << s.a << '\t' << s.b << '\t' << s.c << '\t' << s.rank << '\n';
  return emit(c, out.str());
}

int cmd_space(const std::string& target, bool dump, const Common& c) {
  Defect d = load_defect(target);
  const auto targets = localize(d.buggy, d.neg, d.pos, c.loc_limit, c.fuel);
  const auto space = generate_space(d.buggy, targets, c.space());
  std::map<std::string, std::size_t> per_schema;
  for (auto s : {Schema::tighten, Schema::loosen, Schema::control, Schema::guard, Schema::init, Schema::rep,
                 Schema::cprep}) {
    per_schema[std::string(to_string(s))] = 0;
  }
  for (const auto& t : space) ++per_schema[std::string(to_string(t.schema))];
  if (c.format == "json") {
    json j{{"defect", d.id}, {"space_size", space.size()}, {"per_schema", per_schema}};
    if (dump) {
      json arr = json::array();
      for (std::size_t i = 0; i < space.size(); ++i) {
        arr.push_back({{"rank", i + 1},
                       {"tier", space[i].tier},
                       {"schema", to_string(space[i].schema)},
                       {"target", space[i].target.str()},
                       {"text", space[i].text}});
      }
      j["templates"] = arr;
    }
    return emit(c, j.dump(2) + "\n");
  }
  std::ostringstream out;
  out << "schema\ttemplates\n";
  for (const auto& [k, v] : per_schema) out << k << '\t' << v << '\n';
  out << "total\t" << space.size() << '\n';
  if (dump) {
    out << "\nrank\ttier\tschema\ttarget\ttext\n";
    for (std::size_t i = 0; i < space.size(); ++i) {
      std::string text = space[i].text;
      for (auto& ch : text) {
        if (ch == '\n') ch = ';';
      }
      out << i + 1 << '\t' << space[i].tier << '\t' << to_string(space[i].schema) << '\t' << space[i].target.str()
          << '\t' << text << '\n';
    }
  }
  return emit(c, out.str());
}

int cmd_repair(const std::string& target, std::size_t template_budget, double time_budget,
               const std::string& patch_out, const Common& c) {
  Defect d = load_defect(target);
  RepairOptions opt;
  opt.space = c.space();
  opt.synth = c.synth();
  opt.budget.max_templates = template_budget;
  opt.budget.max_seconds = time_budget;
  opt.jobs = c.jobs;
  RepairResult r;
  try {
    r = repair(d.buggy, d.neg, d.pos, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "spr: " << d.id << ": " << e.what() << '\n';
    return kUsage;
  }
  const std::string original = render_program(d.buggy);
  const std::string patched = r.patch ? render_program(r.patch->program) : std::string();
  const std::string diff = r.patch ? unified_diff(original, patched, d.id + "/program.spr", d.id + "/patched.spr")
                                   : std::string();
  if (r.patch && !patch_out.empty()) {
    std::ofstream f(patch_out);
    if (!f) {
      std::cerr << "spr: cannot write " << patch_out << '\n';
      return kUsage;
    }
    f << patched;
  }
  const auto& s = r.stats;
  int status;
  if (c.format == "json") {
    json stats{{"space_size", s.space_size},
               {"templates_evaluated", s.templates_evaluated},
               {"abstc_templates", s.abstc_templates},
               {"stage2_entries", s.stage2_entries},
               {"abstval_templates", s.abstval_templates},
               {"value_stage2_entries", s.value_stage2_entries},
               {"validations", s.validations},
               {"budget_exhausted", s.budget_exhausted},
               {"plausible_rank", r.plausible_rank() ? json(*r.plausible_rank()) : json(nullptr)}};
    json j{{"defect", d.id}, {"found", r.found()}, {"stats", stats}};
    if (r.patch) {
      j["patch"] = patched;
      j["diff"] = diff;
      j["schema"] = to_string(r.patch->schema);
      j["target"] = r.patch->target.str();
      j["tier"] = r.patch->tier;
      j["synthesized"] = r.patch->synthesized;
    }
    status = emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "defect\t" << d.id << "\nfound\t" << (r.found() ? "yes" : "no") << "\nspace_size\t" << s.space_size
        << "\ntemplates_evaluated\t" << s.templates_evaluated << "\nabstc_templates\t" << s.abstc_templates
        << "\nstage2_entries\t" << s.stage2_entries << "\nvalidations\t" << s.validations << "\nplausible_rank\t"
        << (r.plausible_rank() ? std::to_string(*r.plausible_rank()) : "-") << '\n';
    if (r.patch) {
      out << "schema\t" << to_string(r.patch->schema) << "\ntarget\t" << r.patch->target.str() << '\n';
      out << '\n' << diff;
    }
    status = emit(c, out.str());
  }
  if (status != kOk) return status;
  return r.found() ? kOk : kNoRepair;
}

int cmd_analyze(const std::string& target, std::size_t template_budget, const Common& c) {
  std::vector<SpaceReport> reports;
  for (const auto& d : load_target(target)) reports.push_back(analyze_space(d, c.analysis(), template_budget));
  return emit(c, c.format == "json" ? space_reports_json(reports) : space_reports_tsv(reports));
}

Order parse_order(const std::string& name, std::uint64_t seed) {
  return name == "random" ? Order::random(seed) : Order::spr_tiers();
}

int cmd_explore(const std::string& target, std::size_t budget, const std::string& order, bool summary,
                const Common& c) {
  std::vector<SpaceReport> spaces;
  std::vector<ExploreReport> reports;
  for (const auto& d : load_target(target)) {
    Sweep full = sweep(d, c.analysis(), std::numeric_limits<std::size_t>::max());
    spaces.push_back(space_report(full));
    reports.push_back(explore(full, budget, parse_order(order, c.seed)));
  }
  if (summary) return emit(c, summary_tsv({summarize(spaces, reports)}));
  return emit(c, c.format == "json" ? explore_reports_json(reports) : explore_reports_tsv(reports));
}

int cmd_compare(const std::string& target, std::size_t budget, std::size_t k, std::size_t seeds, const Common& c) {
  std::vector<Sweep> sweeps;
  for (const auto& d : load_target(target)) {
    sweeps.push_back(sweep(d, c.analysis(), std::numeric_limits<std::size_t>::max()));
  }
  const OrderComparison cmp = compare_orders(sweeps, budget, k, seeds, c.seed);
  return emit(c, c.format == "json" ? comparison_json(cmp, c.space()) : comparison_tsv(cmp, c.space()));
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Staged program repair for a small imperative language"};
  app.require_subcommand(1);
  Common c;

  std::string target;
  std::string input, plan_bits;
  bool force_one = false;
  auto* run = app.add_subcommand("run", "Execute a program, or every test case of a defect");
  run->add_option("target", target, "Program file or defect directory")->required();
  run->add_option("--input", input, "Space-separated input values");
  run->add_option("--plan", plan_bits, "Abstract condition outcomes, e.g. 0101");
  run->add_flag("--force-one", force_one, "Answer 1 once the plan is exhausted");
  run->add_option("--fuel", c.fuel, "Step limit");

  std::size_t loc_show = 200;
  auto* loc = app.add_subcommand("localize", "Rank statements of a defect by suspiciousness");
  loc->add_option("defect", target, "Defect directory")->required();
  loc->add_option("--limit", loc_show, "Rows to print");
  loc->add_option("--fuel", c.fuel, "Step limit");
  add_output_options(loc, c);

  bool dump = false;
  auto* space = app.add_subcommand("space", "Count or list the patch templates of a defect");
  space->add_option("defect", target, "Defect directory")->required();
  space->add_flag("--dump", dump, "List every template");
  space->add_option("--fuel", c.fuel, "Step limit");
  add_space_options(space, c);
  add_output_options(space, c);

  std::size_t template_budget = std::numeric_limits<std::size_t>::max();
  double time_budget = 0;
  std::string patch_out;
  auto* rep = app.add_subcommand("repair", "Search for a patch passing every test case");
  rep->add_option("defect", target, "Defect directory")->required();
  rep->add_option("--template-budget", template_budget, "Templates to evaluate at most");
  rep->add_option("--time-budget", time_budget, "Wall-clock limit in seconds");
  rep->add_option("--patch-out", patch_out, "Write the patched program to this file");
  add_space_options(rep, c);
  add_synth_options(rep, c);
  add_output_options(rep, c);

  auto* an = app.add_subcommand("analyze", "Explore the whole space and adjudicate every plausible patch");
  an->add_option("target", target, "Defect or corpus directory")->required();
  an->add_option("--template-budget", template_budget, "Templates to evaluate at most");
  add_space_options(an, c);
  add_synth_options(an, c);
  add_output_options(an, c);
  add_analysis_options(an, c);

  std::size_t budget = 1000;
  std::string order = "spr";
  bool summary = false;
  auto* ex = app.add_subcommand("explore", "Collect plausible patches within a template budget");
  ex->add_option("target", target, "Defect or corpus directory")->required();
  ex->add_option("--budget", budget, "Templates to evaluate");
  ex->add_option("--order", order, "Review order")->check(CLI::IsMember({"spr", "random"}));
  ex->add_flag("--summary", summary, "Print one corpus-level summary row");
  add_space_options(ex, c);
  add_synth_options(ex, c);
  add_output_options(ex, c);
  add_analysis_options(ex, c);

  std::size_t k = 10, seeds = 100;
  auto* cmp = app.add_subcommand("compare-orders", "Review cost and payoff of patch orderings");
  cmp->add_option("target", target, "Corpus directory")->required();
  cmp->add_option("--budget", budget, "Templates to evaluate");
  cmp->add_option("-k,--review-depth", k, "Patches reviewed per defect")->check(CLI::PositiveNumber);
  cmp->add_option("--seeds", seeds, "Random orders to average")->check(CLI::PositiveNumber);
  add_space_options(cmp, c);
  add_synth_options(cmp, c);
  add_output_options(cmp, c);
  add_analysis_options(cmp, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(target, input, plan_bits, force_one, c.fuel);
    if (*loc) return cmd_localize(target, loc_show, c);
    if (*space) return cmd_space(target, dump, c);
    if (*rep) return cmd_repair(target, template_budget, time_budget, patch_out, c);
    if (*an) return cmd_analyze(target, template_budget, c);
    if (*ex) return cmd_explore(target, budget, order, summary, c);
    if (*cmp) return cmd_compare(target, budget, k, seeds, c);
  } catch (const CorpusError& e) {
    std::cerr << "spr: corpus error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "spr: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "spr: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace spr
