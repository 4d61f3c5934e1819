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

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "spr/bench.hpp"

namespace spr {

using nlohmann::json;

namespace {

json cfg_json(const SpaceConfig& cfg) {
  return {{"loc_limit", cfg.loc_limit},
          {"ext_cond", cfg.ext_cond},
          {"ext_rep", cfg.ext_rep},
          {"goto_control", cfg.goto_control},
          {"name", config_name(cfg)}};
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string space_reports_json(const std::vector<SpaceReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    arr.push_back({{"defect", r.defect_id},
                   {"config", cfg_json(r.cfg)},
                   {"space_size", r.space_size},
                   {"correct_in_space", r.correct_in_space},
                   {"correct_rank", r.correct_rank ? json(*r.correct_rank) : json(nullptr)},
                   {"plausible_in_space", r.plausible_in_space},
                   {"truncated", r.truncated},
                   {"abstc_templates", r.abstc_templates},
                   {"stage2_entries", r.stage2_entries}});
  }
  return arr.dump(2) + "\n";
}

std::string space_reports_tsv(const std::vector<SpaceReport>& reports) {
  std::ostringstream out;
  out << "defect\tconfig\tcorrect_in_space\tspace_size\tcorrect_rank\tplausible_in_space\ttruncated\n";
  for (const auto& r : reports) {
    out << r.defect_id << '\t' << config_name(r.cfg) << '\t' << yes_no(r.correct_in_space) << '\t' << r.space_size
        << '\t' << (r.correct_rank ? std::to_string(*r.correct_rank) : "-") << '\t' << r.plausible_in_space << '\t'
        << yes_no(r.truncated) << '\n';
  }
  return out.str();
}

std::string explore_reports_json(const std::vector<ExploreReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json patches = json::array();
    for (const auto& p : r.patches) {
      patches.push_back({{"template_rank", p.template_rank},
                         {"schema", to_string(p.schema)},
                         {"target", p.target.str()},
                         {"tier", p.tier},
                         {"synthesized", p.synthesized},
                         {"correct", p.correct}});
    }
    arr.push_back({{"defect", r.defect_id},
                   {"config", cfg_json(r.cfg)},
                   {"budget", r.budget},
                   {"order", r.order},
                   {"templates_evaluated", r.templates_evaluated},
                   {"plausible_found", r.plausible_found},
                   {"correct_found", r.correct_found},
                   {"first_plausible_is_correct", r.first_plausible_is_correct},
                   {"blocked", r.blocked},
                   {"timed_out", r.timed_out},
                   {"correct_in_space", r.correct_in_space},
                   {"patches", patches}});
  }
  return arr.dump(2) + "\n";
}

std::string explore_reports_tsv(const std::vector<ExploreReport>& reports) {
  std::ostringstream out;
  out << "defect\tconfig\torder\tbudget\tcorrect_first\tplausible_blocked\ttimeout\tplausible_found\tcorrect_found\n";
  for (const auto& r : reports) {
    out << r.defect_id << '\t' << config_name(r.cfg) << '\t' << r.order << '\t' << r.budget << '\t'
        << yes_no(r.first_plausible_is_correct) << '\t'
        << yes_no(!r.patches.empty() && !r.first_plausible_is_correct) << (r.blocked ? " (blocked)" : "") << '\t'
        << yes_no(r.timed_out) << '\t' << r.plausible_found << '\t' << r.correct_found << '\n';
  }
  return out.str();
}

std::string comparison_json(const OrderComparison& cmp, const SpaceConfig& cfg) {
  auto cp = [](const CostPayoff& c) {
    return json{{"cost", c.cost}, {"payoff", c.payoff}, {"text", format_cost_payoff(c)}};
  };
  json j{{"config", cfg_json(cfg)},
         {"k", cmp.k},
         {"seeds", cmp.seeds},
         {"defects_considered", cmp.defects_considered},
         {"spr_tiers", cp(cmp.spr_tiers)},
         {"random", cp(cmp.random_mean)},
         {"random_expected", cp(cmp.random_expected)}};
  return j.dump(2) + "\n";
}

std::string comparison_tsv(const OrderComparison& cmp, const SpaceConfig& cfg) {
  std::ostringstream out;
  out << "config\tspr_tiers\trandom\trandom_expected\n";
  out << config_name(cfg) << '\t' << format_cost_payoff(cmp.spr_tiers) << '\t' << format_cost_payoff(cmp.random_mean)
      << '\t' << format_cost_payoff(cmp.random_expected) << '\n';
  return out.str();
}

SummaryRow summarize(const std::vector<SpaceReport>& spaces, const std::vector<ExploreReport>& explores) {
  SummaryRow row;
  if (!spaces.empty()) row.config = config_name(spaces.front().cfg);
  double rank_sum = 0;
  for (const auto& s : spaces) {
    row.mean_space_size += static_cast<double>(s.space_size);
    if (s.correct_in_space) {
      ++row.correct_in_space;
      rank_sum += static_cast<double>(*s.correct_rank);
    }
  }
  if (!spaces.empty()) row.mean_space_size /= static_cast<double>(spaces.size());
  if (row.correct_in_space > 0) row.mean_correct_rank = rank_sum / static_cast<double>(row.correct_in_space);
  for (const auto& e : explores) {
    if (e.first_plausible_is_correct) ++row.correct_first;
    if (!e.patches.empty() && !e.first_plausible_is_correct) ++row.plausible_first;
    if (e.blocked) ++row.blocked;
    if (e.timed_out) {
      ++row.timeout;
      if (e.correct_in_space) ++row.timeout_with_correct;
    }
    if (e.plausible_found > 0) ++row.defects_with_plausible;
    row.plausible_total += e.plausible_found;
    if (e.correct_found > 0) ++row.defects_with_correct;
    row.correct_total += e.correct_found;
  }
  return row;
}

std::string summary_tsv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "config\tcorrect_in_space\tcorrect_first\tplausible_blocked\ttimeout\tspace_size\tcorrect_rank"
         "\tplausible\tcorrect\n";
  for (const auto& r : rows) {
    out << r.config << '\t' << r.correct_in_space << '\t' << r.correct_first << '\t' << r.plausible_first << '('
        << r.blocked << ")\t" << r.timeout << '(' << r.timeout_with_correct << ")\t" << fixed(r.mean_space_size)
        << '\t' << fixed(r.mean_correct_rank) << '\t' << r.defects_with_plausible << '(' << r.plausible_total
        << ")\t" << r.defects_with_correct << '(' << r.correct_total << ")\n";
  }
  return out.str();
}

}  // namespace spr
