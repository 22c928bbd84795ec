// Copyright 2026 The countkernel Authors
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

#include "cli.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "countkernel/chain_gadget.hpp"
#include "countkernel/ds_gadget.hpp"
#include "countkernel/generators.hpp"
#include "countkernel/graph_io.hpp"
#include "countkernel/oracle.hpp"
#include "countkernel/pipeline.hpp"

namespace countkernel::cli {

namespace {

/// Precondition failures that map to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int resolve_k(std::optional<int> flag, const Instance& inst) {
  const std::optional<int> k = flag ? flag : inst.k;
  if (!k) throw UsageError("no parameter: pass -k or put 'k <K>' in the header");
  if (*k < 0) throw UsageError("parameter k must be nonnegative");
  return *k;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

struct CountArgs {
  std::string file;
  std::optional<int> k;
  bool solve = false;
  std::uint64_t chain_cap = 4096;
  bool json = false;
  std::string output;
};

std::string run_count(const CountArgs& args) {
  const Instance inst = read_instance_file(args.file);
  const int k = resolve_k(args.k, inst);
  const PipelineResult r = count_kernelize(inst.graph, k, {args.chain_cap, args.solve});
  const bool reduced = r.path == CountPath::kReduced;

  if (args.json) {
    nlohmann::json j;
    j["path"] = to_string(r.path);
    j["a"] = nullptr;
    j["b"] = nullptr;
    if (r.count) {
      if (!r.count->is_infinite()) j["a"] = r.count->size;
      j["b"] = r.count->count.str();
    }
    j["n'"] = reduced ? nlohmann::json(r.graph.num_vertices()) : nlohmann::json(nullptr);
    j["k'"] = reduced ? nlohmann::json(r.k) : nlohmann::json(nullptr);
    if (reduced) j["instance"] = write_instance(r.graph, r.k);
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "# path " << to_string(r.path) << '\n';
  if (reduced) os << "# k' " << r.k << '\n';
  if (r.count) {
    os << "# a " << (r.count->is_infinite() ? std::string("inf") : std::to_string(r.count->size)) << '\n';
    os << "# count " << r.count->count.str() << '\n';
  }
  if (reduced) os << write_instance(r.graph, r.k);
  return os.str();
}

std::string run_oracle(const std::string& file, std::optional<int> k_flag, const std::string& problem) {
  const Instance inst = read_instance_file(file);
  const int k = resolve_k(k_flag, inst);
  const CountPair p = problem == "fvs" ? brute_min_fvs(inst.graph, k) : brute_min_ds(inst.graph, k);
  return to_string(p) + "\n";
}

std::string run_replace(const std::string& file, std::optional<int> k_flag, const std::string& what, bool dot) {
  const Instance inst = read_instance_file(file);
  int k = resolve_k(k_flag, inst);
  MultiGraph g = inst.graph;
  if (what == "chains") {
    ChainReplacement r = replace_all_chains(g, k, std::numeric_limits<std::uint64_t>::max());
    g = std::move(r.graph);
    k = r.k;
  } else {
    for (const WideDiamond& d : find_wide_diamonds(g)) {
      GadgetResult r = replace_wide_diamond(g, d, k);
      g = std::move(r.graph);
      k = r.k;
    }
  }
  return dot ? write_dot(g) : write_instance(g, k);
}

struct GenArgs {
  std::string family;
  std::vector<std::uint64_t> params;
  std::optional<int> k;
  double multi = 0.0;
  unsigned max_mult = 2;
  bool dot = false;
  std::string output;
};

std::string run_gen(const GenArgs& args) {
  const auto& p = args.params;
  auto expect = [&](std::size_t n) {
    if (p.size() != n) {
      throw UsageError("family '" + args.family + "' takes " + std::to_string(n) + " parameter(s)");
    }
  };
  MultiGraph g;
  try {
    if (args.family == "cycle") {
      expect(1);
      g = make_cycle(p[0]);
    } else if (args.family == "theta") {
      expect(3);
      g = make_theta(p[0], p[1], p[2]);
    } else if (args.family == "grid") {
      expect(2);
      g = make_grid(p[0], p[1]);
    } else if (args.family == "random") {
      expect(3);
      g = make_random({p[0], p[1], p[2], args.multi, args.max_mult});
    } else if (args.family == "diamond-host") {
      expect(1);
      g = make_diamond_host(p[0]);
    } else {
      throw UsageError("unknown family '" + args.family + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.k && *args.k < 0) throw UsageError("parameter k must be nonnegative");
  return args.dot ? write_dot(g) : write_instance(g, args.k);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting kernelization for minimum feedback vertex sets and dominating-set gadgets"};
  app.require_subcommand(1);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count-fvs", "Kernelize and count minimum feedback vertex sets");
  count_cmd->add_option("file", count.file, "Instance file")->required();
  count_cmd->add_option("-k", count.k, "Solution size bound (defaults to the header's k)");
  count_cmd->add_flag("--solve", count.solve, "Also count the reduced instance");
  count_cmd->add_option("--chain-cap", count.chain_cap, "Cap on the chain-length threshold 2^k");
  count_cmd->add_flag("--json", count.json, "Print a JSON report");
  count_cmd->add_option("-o,--output", count.output, "Write the report to a file");

  std::string oracle_file;
  std::optional<int> oracle_k;
  std::string problem = "fvs";
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force (minimum size, count) for small instances");
  oracle_cmd->add_option("file", oracle_file, "Instance file")->required();
  oracle_cmd->add_option("-k", oracle_k, "Solution size bound");
  oracle_cmd->add_option("--problem", problem, "fvs or ds")->check(CLI::IsMember({"fvs", "ds"}));

  std::string replace_file;
  std::optional<int> replace_k;
  std::string what;
  bool replace_dot = false;
  std::string replace_output;
  auto* replace_cmd = app.add_subcommand("replace", "Replace chains or wide diamonds by gadgets");
  replace_cmd->add_option("file", replace_file, "Instance file")->required();
  replace_cmd->add_option("-k", replace_k, "Parameter");
  replace_cmd->add_option("--what", what, "chains or diamonds")->required()->check(CLI::IsMember({"chains", "diamonds"}));
  replace_cmd->add_flag("--dot", replace_dot, "Print Graphviz instead of the instance format");
  replace_cmd->add_option("-o,--output", replace_output, "Output file");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance: cycle N | theta L1 L2 L3 | grid R C | random N M SEED | diamond-host S");
  gen_cmd->add_option("family", gen.family, "Instance family")->required();
  gen_cmd->add_option("params", gen.params, "Family parameters")->required();
  gen_cmd->add_option("-k", gen.k, "Parameter written into the header");
  gen_cmd->add_option("--multi", gen.multi, "random: probability that a pair becomes a parallel edge");
  gen_cmd->add_option("--max-mult", gen.max_mult, "random: maximum multiplicity of a parallel edge");
  gen_cmd->add_flag("--dot", gen.dot, "Print Graphviz instead of the instance format");
  gen_cmd->add_option("-o,--output", gen.output, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (count_cmd->parsed()) {
      emit(run_count(count), count.output, out);
    } else if (oracle_cmd->parsed()) {
      out << run_oracle(oracle_file, oracle_k, problem);
    } else if (replace_cmd->parsed()) {
      emit(run_replace(replace_file, replace_k, what, replace_dot), replace_output, out);
    } else if (gen_cmd->parsed()) {
      emit(run_gen(gen), gen.output, out);
    }
  } catch (const OracleGuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace countkernel::cli
