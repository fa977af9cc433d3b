// Copyright 2026 The chainsched Authors
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

#pragma once

#include <CLI11.hpp>

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chainsched/cnf.hpp"
#include "chainsched/dcs.hpp"
#include "chainsched/dp.hpp"
#include "chainsched/errors.hpp"
#include "chainsched/formula.hpp"
#include "chainsched/golomb.hpp"
#include "chainsched/graph.hpp"
#include "chainsched/io.hpp"
#include "chainsched/model.hpp"
#include "chainsched/normalize.hpp"
#include "chainsched/oracle.hpp"
#include "chainsched/random.hpp"
#include "chainsched/reductions.hpp"

namespace chainsched::cli {

enum ExitCode : int { kFeasible = 0, kInfeasible = 1, kUsage = 2, kBudget = 3 };

class IoError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("write failed: " + path);
}

inline std::size_t need(const std::optional<std::size_t>& flag, const std::optional<std::size_t>& from_file,
                        const char* name) {
  if (flag) return *flag;
  if (from_file) return *from_file;
  throw InvalidParameter(std::string("missing ") + name + " (flag or input field)");
}

inline DelayMode parse_mode(const std::string& s) {
  if (s == "exact") return DelayMode::Exact;
  if (s == "minimum") return DelayMode::Minimum;
  throw InvalidParameter("mode must be exact or minimum");
}

}  // namespace detail

// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chain scheduling with exact and minimum delays"};
  app.require_subcommand(1);

  std::string input, schedule_path, output, algo = "dp", from, mode = "exact";
  std::size_t threads = 1;
  std::uint64_t budget = kDefaultOracleBudget;
  bool stats = false, emit_map = false;
  std::optional<std::size_t> k, tau, machines_flag;

  auto* solve = app.add_subcommand("solve", "Decide feasibility and print a witness");
  solve->add_option("instance", input, "Instance JSON ('-' for stdin)")->required();
  solve->add_option("--algo", algo, "dp, dcs or oracle")->check(CLI::IsMember({"dp", "dcs", "oracle"}));
  solve->add_option("--threads", threads, "Worker threads for dp")->check(CLI::Range(1, 256));
  solve->add_option("--budget", budget, "Node budget for oracle");
  solve->add_flag("--stats", stats, "Print solver counters to stderr");

  auto* verify = app.add_subcommand("verify", "Check a schedule against an instance");
  verify->add_option("instance", input)->required();
  verify->add_option("schedule", schedule_path)->required();

  auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
  reduce->add_option("input", input)->required();
  reduce
      ->add_option("--from", from, "is, ds, tnsat, exact2min, multi2single, single2multi, sched2is, sched2cnf, sched2tds")
      ->required()
      ->check(CLI::IsMember(
          {"is", "ds", "tnsat", "exact2min", "multi2single", "single2multi", "sched2is", "sched2cnf", "sched2tds"}));
  reduce->add_option("-k", k, "Solution size (overrides the input's k)");
  reduce->add_option("--tau", tau, "Scale for multi2single (default: max(thickness, m))");
  reduce->add_option("-m,--machines", machines_flag, "Machine count for single2multi");
  reduce->add_option("-o,--output", output, "Output file (default stdout)");

  auto* gen = app.add_subcommand("gen", "Generate inputs");
  gen->require_subcommand(1);
  std::size_t golomb_n = 1;
  auto* gen_golomb = gen->add_subcommand("golomb", "Print a Golomb ruler");
  gen_golomb->add_option("-n", golomb_n)->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  RandomInstanceParams rp;
  std::size_t chains = 3, rand_machines = 1;
  std::uint64_t seed = 0;
  auto* gen_random = gen->add_subcommand("random", "Print a random instance");
  gen_random->add_option("--chains", chains)->check(CLI::Range(1, 1000));
  gen_random->add_option("--max-jobs", rp.max_jobs)->check(CLI::Range(1, 1000));
  gen_random->add_option("--max-delay", rp.max_delay)->check(CLI::Range(0, 1'000'000));
  gen_random->add_option("--machines", rand_machines)->check(CLI::Range(1, 1000));
  gen_random->add_option("--max-release", rp.max_release)->check(CLI::Range(0, 1'000'000));
  gen_random->add_option("--max-slack", rp.max_slack)->check(CLI::Range(0, 1'000'000));
  gen_random->add_option("--mode", mode)->check(CLI::IsMember({"exact", "minimum"}));
  gen_random->add_option("--seed", seed);

  auto* thick = app.add_subcommand("thickness", "Print the instance thickness");
  thick->add_option("instance", input)->required();

  auto* norm = app.add_subcommand("normalize", "Clamp deadlines and compress idle gaps");
  norm->add_option("instance", input)->required();
  norm->add_flag("--emit-map", emit_map, "Also print the per-chain offsets");

  std::vector<const char*> argv{"chainsched"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kFeasible : kUsage;
  }

  try {
    if (*solve) {
      const Instance instance = parse_instance(detail::read_input(input));
      std::optional<Schedule> schedule;
      if (algo == "dp") {
        DpOptions options;
        options.threads = threads;
        DpStats st;
        schedule = dp_solve(instance, options, &st);
        if (stats)
          err << "layers " << st.layers << " max_layer " << st.max_layer << " layer_bound " << st.layer_bound
              << " thickness " << st.thickness << "\n";
      } else if (algo == "dcs") {
        DcsStats st;
        schedule = dcs_solve(instance, &st);
        if (stats) err << "branches_solved " << st.branches_solved << " branches_pruned " << st.branches_pruned << "\n";
      } else {
        OracleOptions options;
        options.node_budget = budget;
        schedule = oracle_schedule(instance, options);
      }
      if (!schedule) {
        out << "INFEASIBLE\n";
        return kInfeasible;
      }
      out << "FEASIBLE\n" << serialize_schedule(*schedule) << "\n";
      return kFeasible;
    }

    if (*verify) {
      const Instance instance = parse_instance(detail::read_input(input));
      const Schedule schedule = parse_schedule(detail::read_input(schedule_path));
      const Verdict verdict = verify_schedule(instance, schedule);
      out << serialize_verdict(verdict) << "\n";
      return verdict.feasible() ? kFeasible : kInfeasible;
    }

    if (*reduce) {
      const std::string text = detail::read_input(input);
      std::string result;
      if (from == "is" || from == "ds") {
        const GraphProblem g = parse_graph(text);
        const std::size_t kk = detail::need(k, g.k, "k");
        const Instance inst =
            from == "is" ? independent_set_to_scheduling(g.graph, kk) : dominating_set_to_scheduling(g.graph, kk);
        result = serialize_instance(inst);
      } else if (from == "tnsat") {
        if (!k) throw InvalidParameter("tnsat needs -k");
        result = serialize_instance(normalized_sat_to_scheduling(parse_formula(text), *k));
      } else {
        const Instance inst = parse_instance(text);
        if (from == "exact2min") {
          result = serialize_instance(exact_to_minimum(inst));
        } else if (from == "multi2single") {
          const std::size_t t = tau ? *tau : std::max(thickness(inst), inst.machines());
          result = serialize_instance(multi_to_single_machine(inst, t));
        } else if (from == "single2multi") {
          if (!machines_flag) throw InvalidParameter("single2multi needs -m");
          result = serialize_instance(single_to_multi_machine(inst, *machines_flag));
        } else if (from == "sched2is") {
          const StartGraph sg = scheduling_to_independent_set(inst);
          result = serialize_graph(sg.graph, sg.k);
        } else if (from == "sched2cnf") {
          const StartCnf sc = scheduling_to_weighted_cnf(inst);
          result = write_dimacs(sc.cnf, {"k " + std::to_string(sc.k)});
        } else {
          const ThresholdDsInstance td = scheduling_to_threshold_ds(inst);
          result = serialize_graph(td.graph, td.k, td.r);
        }
      }
      if (!result.empty() && result.back() != '\n') result += '\n';
      detail::write_output(output, result, out);
      return kFeasible;
    }

    if (*gen_golomb) {
      const auto ruler = golomb_ruler(golomb_n);
      for (std::size_t i = 0; i < ruler.size(); ++i) out << (i ? " " : "") << ruler[i];
      out << "\n";
      return kFeasible;
    }

    if (*gen_random) {
      rp.min_chains = rp.max_chains = chains;
      rp.min_machines = rp.max_machines = rand_machines;
      rp.mode = detail::parse_mode(mode);
      std::mt19937_64 rng(seed);
      out << serialize_instance(random_instance(rng, rp)) << "\n";
      return kFeasible;
    }

    if (*thick) {
      out << thickness(parse_instance(detail::read_input(input))) << "\n";
      return kFeasible;
    }

    if (*norm) {
      const Normalized n = normalize(parse_instance(detail::read_input(input)));
      out << serialize_instance(n.instance) << "\n";
      if (emit_map) out << json_io::json(n.map.offsets).dump() << "\n";
      return kFeasible;
    }
  } catch (const BudgetExceeded& e) {
    err << "BudgetExceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const OverflowError& e) {
    err << "OverflowError: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeMismatch& e) {
    err << "ShapeMismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInstance& e) {
    err << "InvalidInstance: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParameter& e) {
    err << "InvalidParameter: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateInput& e) {
    err << "DegenerateInput: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "IoError: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace chainsched::cli
