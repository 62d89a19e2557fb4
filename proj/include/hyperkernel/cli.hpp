// Copyright 2026 The Hyperkernel Authors
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

// Command-line front end. run_cli() is the whole tool; main() only forwards
// argv and the standard streams.
//
// Exit codes: 0 success / property holds, 1 property false, 2 usage or
// input error, 3 size guard exceeded.

#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hyperkernel/harness.hpp"
#include "hyperkernel/hitting.hpp"
#include "hyperkernel/io.hpp"
#include "hyperkernel/iso.hpp"
#include "hyperkernel/rewrite.hpp"

namespace hyperkernel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

inline constexpr const char* kSizeGuardEnv = "HYPERKERNEL_SIZE_GUARD";

/// Bad invocation or unreadable input; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::size_t size_guard_from_env() {
  const char* raw = std::getenv(kSizeGuardEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultSizeGuard;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0') {
    throw UsageError(std::string(kSizeGuardEnv) + " must be a nonnegative integer, got '" + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Hypergraph load(const std::string& path) {
  try {
    return parse(read_input(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

struct OutputOptions {
  std::string path;
  std::string format = "text";
  bool dot = false;

  void add_to(CLI::App* app) {
    app->add_option("-o,--output", path, "Output file (default stdout)");
    app->add_option("--format", format, "Document format")
        ->check(CLI::IsMember({"text", "json"}));
    app->add_flag("--dot", dot, "Emit the incidence graph in Graphviz DOT instead");
  }

  std::string render(const Hypergraph& h) const {
    if (dot) return to_dot(h);
    return serialize(h, format == "json" ? Format::kJson : Format::kText);
  }
};

inline Strategy parse_strategy(const std::string& name, std::uint64_t seed) {
  if (name == "lex-node-first") return Strategy::lex_node_first();
  if (name == "lex-edge-first") return Strategy::lex_edge_first();
  if (name == "random") return Strategy::random(seed);
  throw UsageError("unknown strategy '" + name + "'");
}

struct VerifyOptions {
  std::string check;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  GeneratorParams params;
  std::size_t jobs = 0;
  std::string out_dir;
};

// Runs `check` on instances seeded seed, seed+1, ... and reports failures in
// seed order.
inline int run_verify(const VerifyOptions& opt, std::size_t size_guard, std::ostream& out) {
  std::function<bool(const Hypergraph&, std::uint64_t)> check;
  if (opt.check == "diamond") {
    check = [&](const Hypergraph& h, std::uint64_t) { return check_diamond(h, size_guard).ok(); };
  } else if (opt.check == "confluence") {
    check = [&](const Hypergraph& h, std::uint64_t s) {
      return check_confluence(h, standard_strategies(8, s), size_guard);
    };
  } else if (opt.check == "lifting") {
    check = [&](const Hypergraph& h, std::uint64_t s) {
      return check_rule_lifting(h, s, size_guard);
    };
  } else {
    check = [&](const Hypergraph& h, std::uint64_t) {
      return check_hs_preservation(h, std::max<std::size_t>(opt.params.max_nodes, kDefaultHittingSetBound));
    };
  }

  std::vector<char> passed(opt.count, 0);
  std::vector<std::exception_ptr> errors(opt.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < opt.count; i = next++) {
      try {
        GeneratorParams p = opt.params;
        p.seed = opt.seed + i;
        passed[i] = check(random_hypergraph(p), p.seed) ? 1 : 0;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t jobs = opt.jobs != 0 ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(opt.count, 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const std::filesystem::path dir =
      opt.out_dir.empty() ? std::filesystem::temp_directory_path() : std::filesystem::path(opt.out_dir);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < opt.count; ++i) {
    if (passed[i]) continue;
    ++failures;
    GeneratorParams p = opt.params;
    p.seed = opt.seed + i;
    std::filesystem::create_directories(dir);
    const auto path = dir / (opt.check + "-seed" + std::to_string(p.seed) + ".hg");
    std::ofstream(path) << serialize_text(random_hypergraph(p));
    out << "FAIL " << opt.check << " seed=" << p.seed << " instance=" << path.string() << "\n";
  }
  if (failures == 0) {
    out << "PASS " << opt.check << " seed=" << opt.seed << " count=" << opt.count << "\n";
    return kExitOk;
  }
  out << "FAIL " << opt.check << " seed=" << opt.seed << " count=" << opt.count
      << " failures=" << failures << "\n";
  return kExitFalse;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph edge/node domination toolkit", "hyperkernel"};
  app.require_subcommand(1);

  // reduce
  std::string reduce_file, strategy_name = "lex-node-first";
  std::uint64_t reduce_seed = 0;
  bool show_trace = false;
  OutputOptions reduce_out;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a hypergraph to a minimal one");
  reduce_cmd->add_option("file", reduce_file, "Input document ('-' for stdin)")->required();
  reduce_cmd->add_option("--strategy", strategy_name, "Rule selection strategy")
      ->check(CLI::IsMember({"lex-node-first", "lex-edge-first", "random"}));
  reduce_cmd->add_option("--seed", reduce_seed, "Seed for the random strategy");
  reduce_cmd->add_flag("--trace", show_trace, "Print the applied rules");
  reduce_out.add_to(reduce_cmd);

  // minimal
  std::string minimal_file;
  auto* minimal_cmd = app.add_subcommand("minimal", "Exit 0 iff no rule applies");
  minimal_cmd->add_option("file", minimal_file)->required();

  // iso
  std::string iso_a, iso_b;
  bool iso_witness = false;
  auto* iso_cmd = app.add_subcommand("iso", "Exit 0 iff the two hypergraphs are isomorphic");
  iso_cmd->add_option("first", iso_a)->required();
  iso_cmd->add_option("second", iso_b)->required();
  iso_cmd->add_flag("--witness", iso_witness, "Print the node and edge bijections");

  // canon
  std::string canon_file;
  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical form");
  canon_cmd->add_option("file", canon_file)->required();

  // hs
  std::string hs_file;
  std::size_t hs_bound = kDefaultHittingSetBound;
  auto* hs_cmd = app.add_subcommand("hs", "Minimum hitting set");
  hs_cmd->add_option("file", hs_file)->required();
  hs_cmd->add_option("--max-nodes", hs_bound, "Refuse inputs with more nodes");

  // gen
  GeneratorParams gen;
  OutputOptions gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random hypergraph");
  gen_cmd->add_option("--max-nodes", gen.max_nodes)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--max-edges", gen.max_edges)->required();
  gen_cmd->add_option("--density", gen.density)->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--plant", gen.planted_dominations, "Planted dominations");
  gen_out.add_to(gen_cmd);

  // chain
  std::size_t chain_length = 7;
  OutputOptions chain_out;
  auto* chain_cmd = app.add_subcommand("chain", "Alternating chain family");
  chain_cmd->add_option("--length", chain_length)->required()->check(CLI::Range(5, 100000));
  chain_out.add_to(chain_cmd);

  // verify
  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a property on seeded random instances");
  verify_cmd->add_option("check", verify.check)
      ->required()
      ->check(CLI::IsMember({"diamond", "confluence", "lifting", "hitting-set"}));
  verify_cmd->add_option("--count", verify.count)->required();
  verify_cmd->add_option("--seed", verify.seed)->required();
  verify_cmd->add_option("--max-nodes", verify.params.max_nodes)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-edges", verify.params.max_edges);
  verify_cmd->add_option("--density", verify.params.density)->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_option("--plant", verify.params.planted_dominations);
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (default: all cores)");
  verify_cmd->add_option("--out-dir", verify.out_dir, "Where failing instances are written");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::size_t guard = size_guard_from_env();

    if (*reduce_cmd) {
      const Hypergraph h = load(reduce_file);
      const Reduction red = reduce(h, parse_strategy(strategy_name, reduce_seed));
      std::string doc;
      if (reduce_out.format == "json" && !reduce_out.dot) {
        nlohmann::json j = to_json(red.result);
        if (show_trace) j["trace"] = to_json(red.trace);
        doc = j.dump(2) + "\n";
      } else {
        doc = reduce_out.render(red.result);
        if (show_trace) out << to_string(red.trace);
      }
      write_output(reduce_out.path, doc, out);
      return kExitOk;
    }
    if (*minimal_cmd) {
      const Hypergraph h = load(minimal_file);
      const auto rules = find_rules(h);
      if (rules.empty()) {
        out << "minimal\n";
        return kExitOk;
      }
      out << "not minimal: " << rules.size() << " applicable rule(s), first: " << rules.front()
          << "\n";
      return kExitFalse;
    }
    if (*iso_cmd) {
      const Hypergraph a = load(iso_a), b = load(iso_b);
      auto w = is_isomorphic(a, b, guard);
      if (!w) {
        out << "not isomorphic\n";
        return kExitFalse;
      }
      out << "isomorphic\n";
      if (iso_witness) {
        for (const auto& [from, to] : w->node_map) out << "node " << from << " -> " << to << "\n";
        for (const auto& [from, to] : w->edge_map) out << "edge " << from << " -> " << to << "\n";
      }
      return kExitOk;
    }
    if (*canon_cmd) {
      out << to_string(canonical_form(load(canon_file), guard)) << "\n";
      return kExitOk;
    }
    if (*hs_cmd) {
      const auto result = min_hitting_set(load(hs_file), hs_bound);
      if (!result.is_feasible()) {
        out << "infeasible\n";
        return kExitOk;
      }
      out << "size=" << result.size() << "\nwitness:";
      for (const auto& v : result.witness) out << " " << v;
      out << "\n";
      return kExitOk;
    }
    if (*gen_cmd) {
      write_output(gen_out.path, gen_out.render(random_hypergraph(gen)), out);
      return kExitOk;
    }
    if (*chain_cmd) {
      write_output(chain_out.path, chain_out.render(chain_hypergraph(chain_length)), out);
      return kExitOk;
    }
    if (*verify_cmd) return run_verify(verify, guard, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperkernel::cli
