// Copyright 2026 The gsc developers
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

// Command line frontend: generate / simplify / transpile / verify / bench /
// zoo. Exit codes: 0 ok, 1 verification failure, 2 input error, 3 internal
// invariant violation.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsc/generator.hpp"
#include "gsc/simplifier.hpp"
#include "gsc/transpiler.hpp"
#include "gsc/zoo.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write " + path);
  }
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

gsc::Graph load_graph(const std::string& path) {
  try {
    return gsc::load_graph_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

std::vector<std::size_t> parse_order_arg(const std::string& spec, const gsc::Graph& g) {
  if (spec.empty() || spec == "natural") {
    std::vector<std::size_t> order(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
      order[i] = i;
    }
    return order;
  }
  if (spec.rfind("dfs", 0) == 0) {
    std::size_t root = 0;
    if (spec.size() > 3 && spec[3] == ':') {
      root = std::stoull(spec.substr(4));
    }
    if (!g.is_connected()) {
      throw InputError("dfs order needs a connected graph");
    }
    return gsc::dfs_order(g, root);
  }
  if (spec[0] == '@') {
    std::istringstream in(read_file(spec.substr(1)));
    std::vector<std::size_t> order;
    std::size_t v;
    while (in >> v) {
      order.push_back(v);
    }
    if (!gsc::is_permutation(order, g.n)) {
      throw InputError("order file is not a permutation of the nodes");
    }
    return order;
  }
  throw InputError("unknown order spec: " + spec + " (use natural, dfs[:root], or @file)");
}

std::string order_to_text(const std::vector<std::size_t>& order) {
  std::string out;
  for (std::size_t v : order) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

int cmd_zoo(const std::string& family, const std::string& format, const std::string& out,
            const std::string& order_out) {
  gsc::BuiltGraph built = gsc::build_family(family);
  if (format == "json") {
    write_file(out, gsc::graph_to_json_text(built.graph) + "\n");
  } else {
    std::ostringstream ss;
    gsc::write_edge_list(ss, built.graph);
    write_file(out, ss.str());
  }
  if (!order_out.empty()) {
    write_file(order_out, order_to_text(built.order));
  }
  return kExitOk;
}

int cmd_generate(const std::string& input, const std::string& order_spec, bool simplify,
                 std::size_t extra, bool check, bool allow_isolated,
                 const std::string& recipe_out, const std::string& report_out,
                 const std::string& check_report_out, std::size_t force_every) {
  gsc::Graph g = load_graph(input);
  auto order = parse_order_arg(order_spec, g);
  gsc::GeneratorOptions opts;
  opts.simplify = simplify;
  opts.extra_emitters = extra;
  opts.check_invariants = check || !check_report_out.empty();
  opts.allow_isolated = allow_isolated;
  if (extra > 0) {
    opts.strategy = gsc::every_jth_extra(force_every == 0 ? 2 : force_every);
  }
  std::vector<gsc::StepClassification> trace;
  opts.trace = &trace;
  gsc::Recipe recipe = gsc::generate(g, order, opts);
  if (!recipe_out.empty()) {
    write_file(recipe_out, gsc::recipe_to_json_text(recipe) + "\n");
  }
  gsc::CostReport cost = gsc::cost_report(recipe);
  if (!report_out.empty()) {
    write_file(report_out, cost.to_json_text() + "\n");
  }
  if (!check_report_out.empty()) {
    // Generation with checks on asserts the structural conditions after
    // every step; reaching this point means they all held.
    nlohmann::json j;
    j["pass"] = true;
    j["steps_checked"] = trace.size();
    auto steps = nlohmann::json::array();
    for (const auto& step : trace) {
      steps.push_back({{"step", step.step},
                       {"case", gsc::step_case_name(step.case_id)},
                       {"active_emitters", step.active_after},
                       {"prefix_rank", step.rank_after}});
    }
    j["steps"] = steps;
    write_file(check_report_out, j.dump(2) + "\n");
  }
  std::cerr << "generated " << recipe.ops.size() << " ops, " << cost.two_qubit_count
            << " emitter-emitter gates, " << cost.emitters_used << " emitters\n";
  return kExitOk;
}

int cmd_simplify(const std::string& recipe_in, const std::string& recipe_out,
                 const std::string& log_out) {
  gsc::Recipe r = gsc::recipe_from_json_text(read_file(recipe_in));
  gsc::SimplifyStats stats;
  gsc::Recipe s = gsc::simplify(r, &stats);
  write_file(recipe_out, gsc::recipe_to_json_text(s) + "\n");
  if (!log_out.empty()) {
    std::string log;
    for (const auto& line : stats.log) {
      log += line;
      log += '\n';
    }
    write_file(log_out, log);
  }
  std::cerr << "removed " << stats.gates_removed() << " emitter-emitter gates ("
            << stats.cancellations << " cancellations, " << stats.merges << " merges)\n";
  return kExitOk;
}

int cmd_transpile(const std::string& recipe_in, const std::string& circuit_out) {
  gsc::Recipe r = gsc::recipe_from_json_text(read_file(recipe_in));
  gsc::GateCircuit c = gsc::transpile(r);
  write_file(circuit_out, gsc::circuit_to_text(c));
  return kExitOk;
}

int cmd_verify(const std::string& recipe_in, const std::string& circuit_in,
               const std::string& target_in, bool random_outcomes, std::uint64_t seed,
               const std::string& report_out) {
  gsc::OutcomeMode mode =
      random_outcomes ? gsc::OutcomeMode::SeededRandom : gsc::OutcomeMode::ForcedZero;
  gsc::VerifyResult res;
  if (!recipe_in.empty()) {
    gsc::Recipe r = gsc::recipe_from_json_text(read_file(recipe_in));
    res = gsc::verify_recipe(r, mode, seed);
  } else {
    if (circuit_in.empty() || target_in.empty()) {
      throw InputError("verify needs --recipe, or --circuit plus --target");
    }
    gsc::GateCircuit c = gsc::circuit_from_text(read_file(circuit_in));
    gsc::Graph target = load_graph(target_in);
    res = gsc::verify_circuit(c, target, mode, seed);
  }
  if (!report_out.empty()) {
    write_file(report_out, res.to_json_text() + "\n");
  }
  if (res.pass) {
    std::cerr << "verification passed (" << res.z_corrections.size() << " corrections)\n";
    return kExitOk;
  }
  std::cerr << "verification FAILED: " << res.diagnostic << "\n";
  return kExitVerifyFailure;
}

struct BenchRow {
  std::size_t size = 0;
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  std::size_t emitters = 0;
  std::size_t pre = 0;
  std::size_t post = 0;
  bool verified = false;
};

int cmd_bench(const std::vector<std::size_t>& sizes, double density, std::size_t samples,
              std::uint64_t seed, const std::string& order_policy, std::size_t extra,
              const std::string& out, bool as_json, const std::string& reference_path) {
  if (samples < 1 || density <= 0.0 || density > 1.0) {
    throw InputError("bench needs samples >= 1 and density in (0, 1]");
  }
  std::size_t workers = std::max<unsigned>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GSF_THREADS")) {
    workers = std::max<std::size_t>(1, std::stoull(env));
  }
  workers = std::min<std::size_t>(workers, 64);

  // Results land in a preallocated slot per instance, so thread scheduling
  // cannot change the output bytes.
  std::vector<BenchRow> rows(sizes.size() * samples);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto work = [&]() {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= rows.size()) {
        return;
      }
      std::size_t si = idx / samples;
      std::size_t inst = idx % samples;
      BenchRow row;
      row.size = sizes[si];
      row.instance = inst;
      row.seed = seed * 1000003ull + row.size * 10007ull + inst;
      gsc::Graph g = gsc::random_connected(row.size, density, row.seed);
      row.edges = g.edge_count();
      std::vector<std::size_t> order;
      if (order_policy == "dfs") {
        order = gsc::dfs_order(g, 0);
      } else {
        order.resize(g.n);
        for (std::size_t i = 0; i < g.n; ++i) {
          order[i] = i;
        }
      }
      gsc::GeneratorOptions opts;
      opts.extra_emitters = extra;
      if (extra > 0) {
        opts.strategy = gsc::every_jth_extra(2);
      }
      gsc::Recipe r = gsc::generate(g, order, opts);
      gsc::Recipe s = gsc::simplify(r);
      row.pre = r.two_qubit_count();
      row.post = s.two_qubit_count();
      row.emitters = r.emitters_used;
      row.verified = gsc::verify_recipe(r).pass && gsc::verify_recipe(s).pass;
      if (!row.verified) {
        failed = true;
      }
      rows[idx] = row;
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w + 1 < workers; ++w) {
    pool.emplace_back(work);
  }
  work();
  for (auto& t : pool) {
    t.join();
  }

  nlohmann::json reference;
  if (!reference_path.empty()) {
    reference = nlohmann::json::parse(read_file(reference_path));
  }

  std::ostringstream csv;
  csv << "size,instance,seed,edges,emitters,two_qubit_pre,two_qubit_post,verified\n";
  for (const auto& row : rows) {
    csv << row.size << "," << row.instance << "," << row.seed << "," << row.edges << ","
        << row.emitters << "," << row.pre << "," << row.post << ","
        << (row.verified ? 1 : 0) << "\n";
  }
  nlohmann::json summary_json = nlohmann::json::array();
  csv << "# summary: size,verified_samples,mean_post,std_post,max_post\n";
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    // Hard gate: only instances that passed verification feed the summary.
    std::vector<const BenchRow*> good;
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& row = rows[si * samples + i];
      if (row.verified) {
        good.push_back(&row);
      }
    }
    double mean = 0.0;
    std::size_t max_post = 0;
    for (const auto* row : good) {
      mean += double(row->post);
      max_post = std::max(max_post, row->post);
    }
    mean = good.empty() ? 0.0 : mean / double(good.size());
    double var = 0.0;
    for (const auto* row : good) {
      double d = double(row->post) - mean;
      var += d * d;
    }
    double stddev = good.size() > 1 ? std::sqrt(var / double(good.size() - 1)) : 0.0;
    char line[160];
    std::snprintf(line, sizeof line, "# %zu,%zu,%.4f,%.4f,%zu\n", sizes[si], good.size(),
                  mean, stddev, max_post);
    csv << line;
    nlohmann::json entry;
    entry["size"] = sizes[si];
    entry["samples"] = samples;
    entry["verified_samples"] = good.size();
    entry["mean_post"] = mean;
    entry["std_post"] = stddev;
    entry["max_post"] = max_post;
    if (reference.contains("random_graphs")) {
      for (const auto& ref : reference["random_graphs"]) {
        if (ref.at("size") == sizes[si]) {
          entry["reference"] = ref;
        }
      }
    }
    summary_json.push_back(entry);
  }
  if (as_json) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
      j["rows"].push_back({{"size", row.size},
                           {"instance", row.instance},
                           {"seed", row.seed},
                           {"edges", row.edges},
                           {"emitters", row.emitters},
                           {"two_qubit_pre", row.pre},
                           {"two_qubit_post", row.post},
                           {"verified", row.verified}});
    }
    j["summary"] = summary_json;
    write_file(out, j.dump(2) + "\n");
  } else {
    write_file(out, csv.str());
  }
  if (failed) {
    std::cerr << "bench: at least one instance failed verification\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photonic graph state compiler"};
  app.require_subcommand(1);

  auto* zoo = app.add_subcommand("zoo", "emit a benchmark family graph");
  std::string zoo_family, zoo_format = "edges", zoo_out = "-", zoo_order_out;
  zoo->add_option("--family", zoo_family, "family spec, e.g. tree:3,3,3")->required();
  zoo->add_option("--format", zoo_format, "edges|json");
  zoo->add_option("--out", zoo_out, "output file or -");
  zoo->add_option("--order-out", zoo_order_out, "write the canonical order here");

  auto* gen = app.add_subcommand("generate", "build a generation recipe");
  std::string gen_input, gen_order = "natural", gen_out, gen_report, gen_check_report;
  bool gen_simplify = false, gen_check = false, gen_isolated = false;
  std::size_t gen_extra = 0, gen_force_every = 0;
  gen->add_option("--input", gen_input, "graph file (edge list or .json)")->required();
  gen->add_option("--order", gen_order, "natural | dfs[:root] | @file");
  gen->add_flag("--simplify", gen_simplify, "run the recipe simplifier");
  gen->add_option("--extra-emitters", gen_extra, "extra active emitters allowed");
  gen->add_option("--force-every", gen_force_every,
                  "with extra emitters, force a fresh emitter every j-th photon");
  gen->add_flag("--check", gen_check, "assert structural invariants per step");
  gen->add_flag("--allow-isolated", gen_isolated, "permit isolated target nodes");
  gen->add_option("--out", gen_out, "recipe JSON output");
  gen->add_option("--report", gen_report, "cost report JSON output");
  gen->add_option("--check-report", gen_check_report,
                  "write the per-step condition report here (implies --check)");

  auto* simp = app.add_subcommand("simplify", "cancel and merge recipe operations");
  std::string simp_in, simp_out = "-", simp_log;
  simp->add_option("--recipe", simp_in, "recipe JSON input")->required();
  simp->add_option("--out", simp_out, "simplified recipe output");
  simp->add_option("--log", simp_log, "rewrite log output");

  auto* trans = app.add_subcommand("transpile", "expand a recipe into a gate circuit");
  std::string trans_in, trans_out = "-";
  trans->add_option("--recipe", trans_in, "recipe JSON input")->required();
  trans->add_option("--out", trans_out, "circuit text output");

  auto* ver = app.add_subcommand("verify", "simulate and check against the target");
  std::string ver_recipe, ver_circuit, ver_target, ver_report;
  bool ver_random = false;
  std::uint64_t ver_seed = 0;
  ver->add_option("--recipe", ver_recipe, "recipe JSON input");
  ver->add_option("--circuit", ver_circuit, "circuit text input");
  ver->add_option("--target", ver_target, "target graph (for --circuit)");
  ver->add_flag("--random-outcomes", ver_random, "sample measurement outcomes");
  ver->add_option("--seed", ver_seed, "outcome seed");
  ver->add_option("--report", ver_report, "verify report JSON output");

  auto* bench = app.add_subcommand("bench", "random-graph benchmark sweep");
  std::vector<std::size_t> bench_sizes{20};
  double bench_density = 0.1;
  std::size_t bench_samples = 10, bench_extra = 0;
  std::uint64_t bench_seed = 1;
  std::string bench_order = "natural", bench_out = "-", bench_reference;
  bool bench_json = false;
  bench->add_option("--sizes", bench_sizes, "graph sizes")->delimiter(',');
  bench->add_option("--density", bench_density, "edge density in (0,1]");
  bench->add_option("--samples", bench_samples, "instances per size");
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_option("--order", bench_order, "natural|dfs");
  bench->add_option("--extra-emitters", bench_extra, "extra active emitters");
  bench->add_option("--out", bench_out, "CSV (or JSON with --json) output");
  bench->add_flag("--json", bench_json, "machine output");
  bench->add_option("--reference", bench_reference, "published reference counts JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (zoo->parsed()) {
      return cmd_zoo(zoo_family, zoo_format, zoo_out, zoo_order_out);
    }
    if (gen->parsed()) {
      return cmd_generate(gen_input, gen_order, gen_simplify, gen_extra, gen_check,
                          gen_isolated, gen_out, gen_report, gen_check_report,
                          gen_force_every);
    }
    if (simp->parsed()) {
      return cmd_simplify(simp_in, simp_out, simp_log);
    }
    if (trans->parsed()) {
      return cmd_transpile(trans_in, trans_out);
    }
    if (ver->parsed()) {
      return cmd_verify(ver_recipe, ver_circuit, ver_target, ver_random, ver_seed,
                        ver_report);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_sizes, bench_density, bench_samples, bench_seed, bench_order,
                       bench_extra, bench_out, bench_json, bench_reference);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
