#pragma once

// Command-line harness: run matchers on instance files, batch benchmarks
// with CSV reports, generate instances, verify matchings, query the exact
// oracle. Kept in a header so the test suite can call subcommands
// in-process.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hlm/hlm.hpp"

namespace hlm::app {

struct InstanceOptions {
  std::string path;
  std::string format = "auto";   // auto|hgr|metis
  std::string weights = "file";  // file|unit|random
  std::uint64_t weight_seed = 1;
  bool drop_isolated = false;
};

struct StreamOptions {
  std::uint64_t seed = 1;
  std::string generator = "xorshift";  // xorshift|park-miller|splitmix
  std::string noise = "0:100";
  bool uniform = false;  // replace weights with fresh uniform (0,1) draws
};

inline bool is_metis_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos) return false;
  const std::string ext = path.substr(dot + 1);
  return ext == "graph" || ext == "metis";
}

inline Hypergraph load_instance(const InstanceOptions& opts) {
  ParseOptions parse;
  std::vector<std::string> warnings;
  parse.warnings = &warnings;
  parse.degree_zero =
      opts.drop_isolated ? DegreeZeroPolicy::drop_and_renumber : DegreeZeroPolicy::reject;
  const bool metis = opts.format == "metis" || (opts.format == "auto" && is_metis_path(opts.path));
  Hypergraph h = load_instance_file(opts.path, metis, parse);
  for (const auto& w : warnings) std::cerr << "warning: " << opts.path << ": " << w << "\n";
  if (opts.weights == "unit")
    std::fill(h.base_weights.begin(), h.base_weights.end(), 1.0);
  else if (opts.weights == "random")
    h.base_weights = random_weights_1_100(h.num_edges, opts.weight_seed);
  return h;
}

inline WeightStream make_stream(const StreamOptions& opts) {
  WeightStream s;
  s.seed = opts.seed;
  if (opts.generator == "xorshift")
    s.kind = GeneratorKind::xorshift;
  else if (opts.generator == "park-miller")
    s.kind = GeneratorKind::park_miller;
  else if (opts.generator == "splitmix")
    s.kind = GeneratorKind::splitmix;
  else
    throw input_error("unknown generator '" + opts.generator + "'");
  s.mode = opts.uniform ? WeightMode::replace_uniform : WeightMode::perturb_base;
  const auto colon = opts.noise.find(':');
  if (colon == std::string::npos)
    throw input_error("noise interval must look like LO:HI, got '" + opts.noise + "'");
  try {
    s.noise_low = std::stod(opts.noise.substr(0, colon));
    s.noise_high = std::stod(opts.noise.substr(colon + 1));
  } catch (const std::exception&) {
    throw input_error("noise interval must look like LO:HI, got '" + opts.noise + "'");
  }
  check_noise_interval(s);
  return s;
}

inline Variant parse_variant(const std::string& name) {
  if (name == "seq") return Variant::seq;
  if (name == "crcw") return Variant::crcw;
  if (name == "crew") return Variant::crew;
  if (name == "opt") return Variant::work_optimal;
  if (name == "greedy") return Variant::greedy;
  throw input_error("unknown variant '" + name + "'");
}

inline double geometric_mean(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double log_sum = 0.0;
  for (double v : values) log_sum += std::log(v);
  return std::exp(log_sum / static_cast<double>(values.size()));
}

// One CSV row; blank optionals stay blank so the schema never changes.
struct RunRow {
  std::string instance;
  std::string variant;
  std::string workers;
  std::string seed;
  std::string generator;
  std::string repeat;
  std::optional<double> rounds;
  std::optional<double> size;
  std::optional<double> weight;
  std::optional<double> time_ms;
  std::optional<double> edge_visits;
  std::optional<double> pin_visits;
  std::optional<double> ratio_vs_oracle;
};

inline const char* csv_header() {
  return "instance,variant,workers,seed,generator,repeat,rounds,size,weight,time_ms,"
         "edge_visits,pin_visits,ratio_vs_oracle";
}

inline std::string csv_row(const RunRow& row) {
  auto num = [](const std::optional<double>& v, const char* fmt) {
    if (!v) return std::string();
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, *v);
    return std::string(buf);
  };
  std::ostringstream out;
  out << row.instance << ',' << row.variant << ',' << row.workers << ',' << row.seed << ','
      << row.generator << ',' << row.repeat << ',' << num(row.rounds, "%.0f") << ','
      << num(row.size, "%.0f") << ',' << num(row.weight, "%.6f") << ','
      << num(row.time_ms, "%.3f") << ',' << num(row.edge_visits, "%.0f") << ','
      << num(row.pin_visits, "%.0f") << ',' << num(row.ratio_vs_oracle, "%.6f");
  return out.str();
}

struct RunFlags {
  InstanceOptions instance;
  StreamOptions stream;
  std::string variant = "crcw";
  unsigned workers = 0;
  std::uint32_t max_rounds = 0;
  std::size_t grain = 1024;
  bool assert_crew = false;
  bool with_oracle = false;
  std::uint32_t oracle_cap = 22;
  std::string csv_path;
  std::string emit_matching_path;
};

inline RunRow execute_run(const RunFlags& flags, const Hypergraph& h) {
  ParallelConfig cfg;
  cfg.workers = flags.workers;
  cfg.variant = parse_variant(flags.variant);
  cfg.grain = flags.grain;
  cfg.max_rounds = flags.max_rounds;
  cfg.assert_exclusive_writes = flags.assert_crew;

  const WeightStream stream = make_stream(flags.stream);
  MatchResult result = run_variant(h, stream, cfg);

  const VerificationReport check = verify_matching(h, result.matching);
  if (!check.valid())
    throw std::logic_error("internal verification failed: matching is " +
                           std::string(check.disjoint ? "" : "not disjoint ") +
                           std::string(check.maximal ? "" : "not maximal"));

  RunRow row;
  row.instance = flags.instance.path;
  row.variant = flags.variant;
  row.workers = std::to_string(resolve_workers(flags.workers));
  row.seed = std::to_string(flags.stream.seed);
  row.generator = flags.stream.generator;
  row.repeat = "0";
  row.rounds = result.report.rounds;
  row.size = static_cast<double>(result.matching.matched_edges.size());
  row.weight = result.matching.total_weight;
  row.time_ms = result.report.wall_time_ms;
  row.edge_visits = static_cast<double>(result.report.work.total_edge_visits);
  row.pin_visits = static_cast<double>(result.report.work.total_pin_visits);
  if (flags.with_oracle) {
    if (h.num_edges <= flags.oracle_cap) {
      const ExactResult exact = exact_matching(h, h.base_weights, flags.oracle_cap);
      row.ratio_vs_oracle = approximation_ratio(h, result.matching, exact);
    } else {
      std::cerr << "warning: oracle skipped, " << h.num_edges << " edges exceed cap "
                << flags.oracle_cap << "\n";
    }
  }

  if (!flags.emit_matching_path.empty()) {
    std::ofstream out(flags.emit_matching_path);
    if (!out) throw io_error("cannot write matching file " + flags.emit_matching_path);
    write_matching(result.matching, out);
  }
  return row;
}

inline void append_csv(const std::string& path, const std::vector<RunRow>& rows, bool truncate) {
  const bool fresh = truncate || !std::filesystem::exists(path);
  std::ofstream out(path, truncate ? std::ios::trunc : std::ios::app);
  if (!out) throw io_error("cannot open csv file " + path);
  if (fresh) out << csv_header() << '\n';
  for (const auto& row : rows) out << csv_row(row) << '\n';
}

inline int cmd_run(const RunFlags& flags) {
  const Hypergraph h = load_instance(flags.instance);  // untimed
  const RunRow row = execute_run(flags, h);
  std::cout << csv_header() << '\n' << csv_row(row) << '\n';
  if (!flags.csv_path.empty()) append_csv(flags.csv_path, {row}, false);
  return 0;
}

struct BenchFlags {
  std::vector<std::string> instances;
  std::vector<std::string> variants = {"crcw"};
  std::vector<std::uint64_t> seeds = {1};
  std::uint32_t repeats = 3;
  RunFlags base;  // instance format/weight policy, stream, workers, ...
  std::string csv_path;
};

// One data row per (instance, variant, seed, repeat), then per-instance
// arithmetic means and a cross-instance geometric mean per variant. Failed
// runs keep their row with blank measurements and turn the exit code
// nonzero without stopping the batch.
inline int cmd_bench(const BenchFlags& flags, std::ostream& console) {
  std::vector<RunRow> rows;
  bool any_failed = false;

  struct Key {
    std::string instance, variant;
    bool operator<(const Key& o) const {
      return instance != o.instance ? instance < o.instance : variant < o.variant;
    }
  };
  std::map<Key, std::vector<const RunRow*>> by_pair;

  for (const auto& path : flags.instances) {
    std::optional<Hypergraph> h;
    try {
      InstanceOptions io = flags.base.instance;
      io.path = path;
      h = load_instance(io);
    } catch (const std::exception& ex) {
      std::cerr << "error: " << path << ": " << ex.what() << "\n";
    }
    for (const auto& variant : flags.variants) {
      for (std::uint64_t seed : flags.seeds) {
        for (std::uint32_t rep = 0; rep < flags.repeats; ++rep) {
          RunRow row;
          row.instance = path;
          row.variant = variant;
          row.seed = std::to_string(seed);
          row.generator = flags.base.stream.generator;
          row.workers = std::to_string(resolve_workers(flags.base.workers));
          row.repeat = std::to_string(rep);
          if (h) {
            try {
              RunFlags rf = flags.base;
              rf.instance.path = path;
              rf.variant = variant;
              rf.stream.seed = seed;
              row = execute_run(rf, *h);
              row.repeat = std::to_string(rep);
              row.seed = std::to_string(seed);
            } catch (const std::exception& ex) {
              std::cerr << "error: " << path << " variant=" << variant << " seed=" << seed
                        << ": " << ex.what() << "\n";
              any_failed = true;
            }
          } else {
            any_failed = true;
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }

  for (const auto& row : rows)
    if (row.time_ms) by_pair[{row.instance, row.variant}].push_back(&row);

  std::vector<RunRow> summary;
  std::map<std::string, std::vector<double>> variant_times, variant_weights;
  for (const auto& [key, group] : by_pair) {
    RunRow mean;
    mean.instance = key.instance;
    mean.variant = key.variant;
    mean.workers = group.front()->workers;
    mean.generator = group.front()->generator;
    mean.repeat = "mean";
    auto avg = [&](auto field) {
      double sum = 0.0;
      for (const RunRow* r : group) sum += *(r->*field);
      return sum / static_cast<double>(group.size());
    };
    mean.rounds = avg(&RunRow::rounds);
    mean.size = avg(&RunRow::size);
    mean.weight = avg(&RunRow::weight);
    mean.time_ms = avg(&RunRow::time_ms);
    variant_times[key.variant].push_back(*mean.time_ms);
    variant_weights[key.variant].push_back(*mean.weight);
    summary.push_back(std::move(mean));
  }
  for (const auto& [variant, times] : variant_times) {
    RunRow geo;
    geo.instance = "geomean";
    geo.variant = variant;
    geo.repeat = "geomean";
    geo.time_ms = geometric_mean(times);
    const auto& weights = variant_weights[variant];
    if (!weights.empty() &&
        std::all_of(weights.begin(), weights.end(), [](double w) { return w > 0; }))
      geo.weight = geometric_mean(weights);
    summary.push_back(std::move(geo));
  }
  rows.insert(rows.end(), summary.begin(), summary.end());

  if (!flags.csv_path.empty()) {
    append_csv(flags.csv_path, rows, true);
  } else {
    console << csv_header() << '\n';
    for (const auto& row : rows) console << csv_row(row) << '\n';
  }
  return any_failed ? 1 : 0;
}

struct GenerateFlags {
  bool tight = false;
  std::uint32_t d = 3;
  double epsilon = 0.1;
  std::uint32_t n = 100;
  std::uint32_t m = 80;
  std::uint32_t min_size = 2;
  std::uint32_t max_size = 3;
  std::uint64_t seed = 1;
  std::string weights = "unit";  // unit|random
  std::uint64_t weight_seed = 1;
  std::string out_path;
};

inline int cmd_generate(const GenerateFlags& flags) {
  Hypergraph h;
  if (flags.tight) {
    h = generate_tight_family(flags.d, flags.epsilon);
  } else {
    RandomInstanceSpec spec;
    spec.num_vertices = flags.n;
    spec.num_edges = flags.m;
    spec.min_edge_size = flags.min_size;
    spec.max_edge_size = flags.max_size;
    spec.seed = flags.seed;
    h = generate_random(spec);
    if (flags.weights == "random")
      h.base_weights = random_weights_1_100(h.num_edges, flags.weight_seed);
    else if (flags.weights != "unit")
      throw input_error("generate supports weights unit|random");
  }
  std::ofstream out(flags.out_path);
  if (!out) throw io_error("cannot write instance file " + flags.out_path);
  write_hgr(h, out);
  std::cout << "wrote " << flags.out_path << " n=" << h.num_vertices << " m=" << h.num_edges
            << " kappa=" << h.pin_count() << '\n';
  return 0;
}

struct VerifyFlags {
  InstanceOptions instance;
  std::string matching_path;
};

inline int cmd_verify(const VerifyFlags& flags) {
  const Hypergraph h = load_instance(flags.instance);
  std::ifstream in(flags.matching_path);
  if (!in) throw io_error("cannot open matching file " + flags.matching_path);
  Matching m;
  m.matched_edges = parse_matching(in);
  std::sort(m.matched_edges.begin(), m.matched_edges.end());
  const VerificationReport report = verify_matching(h, m);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", report.weight);
  std::cout << "disjoint: " << (report.disjoint ? "yes" : "NO") << '\n'
            << "maximal: " << (report.maximal ? "yes" : "NO") << '\n'
            << "weight: " << buf << '\n';
  return report.valid() ? 0 : 1;
}

struct OracleFlags {
  InstanceOptions instance;
  std::uint32_t cap = 22;
};

inline int cmd_oracle(const OracleFlags& flags) {
  const Hypergraph h = load_instance(flags.instance);
  const ExactResult exact = exact_matching(h, h.base_weights, flags.cap);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", exact.optimal_weight);
  std::cout << "optimal_weight: " << buf << '\n'
            << "optimal_size: " << exact.optimal_edges.size() << '\n'
            << "explored: " << exact.explored << '\n'
            << "edges:";
  for (edge_id e : exact.optimal_edges) std::cout << ' ' << e;
  std::cout << '\n';
  return 0;
}

inline void add_instance_options(CLI::App* cmd, InstanceOptions& opts) {
  cmd->add_option("--instance", opts.path, "instance file")->required();
  cmd->add_option("--format", opts.format, "instance format: auto|hgr|metis")
      ->check(CLI::IsMember({"auto", "hgr", "metis"}));
  cmd->add_option("--weights", opts.weights, "weight policy: file|unit|random")
      ->check(CLI::IsMember({"file", "unit", "random"}));
  cmd->add_option("--weight-seed", opts.weight_seed, "seed for the random weight policy");
  cmd->add_flag("--drop-isolated", opts.drop_isolated,
                "drop degree-0 vertices instead of rejecting the instance");
}

inline void add_stream_options(CLI::App* cmd, StreamOptions& opts) {
  cmd->add_option("--seed", opts.seed, "weight stream seed");
  cmd->add_option("--generator", opts.generator, "xorshift|park-miller|splitmix")
      ->check(CLI::IsMember({"xorshift", "park-miller", "splitmix"}));
  cmd->add_option("--noise", opts.noise, "per-round noise interval LO:HI added to base weights");
  cmd->add_flag("--uniform", opts.uniform,
                "replace weights with fresh uniform (0,1) draws each round");
}

inline int run_cli(std::vector<std::string> args) {
  CLI::App cli{"local-max hypergraph matching harness"};
  cli.require_subcommand(1);

  RunFlags run;
  auto* run_cmd = cli.add_subcommand("run", "run one matcher on one instance");
  add_instance_options(run_cmd, run.instance);
  add_stream_options(run_cmd, run.stream);
  run_cmd->add_option("--variant", run.variant, "seq|crcw|crew|opt|greedy")
      ->check(CLI::IsMember({"seq", "crcw", "crew", "opt", "greedy"}));
  run_cmd->add_option("--workers", run.workers, "worker threads (0 = hardware)");
  run_cmd->add_option("--max-rounds", run.max_rounds, "round safety cap (0 = default)");
  run_cmd->add_option("--grain", run.grain, "parallel chunk grain hint");
  run_cmd->add_flag("--assert-crew", run.assert_crew, "enable crew write-exclusivity checks");
  run_cmd->add_flag("--oracle", run.with_oracle, "run the exact oracle and report the ratio");
  run_cmd->add_option("--oracle-cap", run.oracle_cap, "edge-count cap for the exact oracle");
  run_cmd->add_option("--csv", run.csv_path, "append the result row to this CSV file");
  run_cmd->add_option("--emit-matching", run.emit_matching_path, "write the matching here");

  BenchFlags bench;
  auto* bench_cmd = cli.add_subcommand("bench", "batch runs with CSV aggregation");
  bench_cmd->add_option("--instances", bench.instances, "instance files")->required();
  bench_cmd->add_option("--variants", bench.variants, "variants to run")->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "stream seeds")->delimiter(',');
  bench_cmd->add_option("--repeats", bench.repeats, "repetitions per configuration");
  bench_cmd->add_option("--format", bench.base.instance.format, "auto|hgr|metis")
      ->check(CLI::IsMember({"auto", "hgr", "metis"}));
  bench_cmd->add_option("--weights", bench.base.instance.weights, "file|unit|random")
      ->check(CLI::IsMember({"file", "unit", "random"}));
  bench_cmd->add_option("--weight-seed", bench.base.instance.weight_seed, "weight policy seed");
  bench_cmd->add_flag("--drop-isolated", bench.base.instance.drop_isolated,
                      "drop degree-0 vertices");
  add_stream_options(bench_cmd, bench.base.stream);
  bench_cmd->add_option("--workers", bench.base.workers, "worker threads (0 = hardware)");
  bench_cmd->add_option("--max-rounds", bench.base.max_rounds, "round safety cap");
  bench_cmd->add_flag("--assert-crew", bench.base.assert_crew, "crew write checks");
  bench_cmd->add_option("--csv", bench.csv_path, "write all rows to this CSV file");

  GenerateFlags gen;
  auto* gen_cmd = cli.add_subcommand("generate", "write an instance file");
  auto* tight_cmd = gen_cmd->add_subcommand("tight", "worst-case approximation family");
  tight_cmd->add_option("--d", gen.d, "rank of the heavy edge")->required();
  tight_cmd->add_option("--epsilon", gen.epsilon, "weight surplus of the heavy edge")->required();
  tight_cmd->add_option("--out", gen.out_path, "output .hgr path")->required();
  auto* random_cmd = gen_cmd->add_subcommand("random", "seeded random hypergraph");
  random_cmd->add_option("--n", gen.n, "vertex count")->required();
  random_cmd->add_option("--m", gen.m, "edge count")->required();
  random_cmd->add_option("--min-size", gen.min_size, "minimum edge size");
  random_cmd->add_option("--max-size", gen.max_size, "maximum edge size");
  random_cmd->add_option("--seed", gen.seed, "generator seed");
  random_cmd->add_option("--weights", gen.weights, "unit|random")
      ->check(CLI::IsMember({"unit", "random"}));
  random_cmd->add_option("--weight-seed", gen.weight_seed, "weight policy seed");
  random_cmd->add_option("--out", gen.out_path, "output .hgr path")->required();
  gen_cmd->require_subcommand(1);

  VerifyFlags verify;
  auto* verify_cmd = cli.add_subcommand("verify", "check a matching file against an instance");
  add_instance_options(verify_cmd, verify.instance);
  verify_cmd->add_option("--matching", verify.matching_path, "matching file")->required();

  OracleFlags oracle;
  auto* oracle_cmd = cli.add_subcommand("oracle", "exact maximum-weight matching");
  add_instance_options(oracle_cmd, oracle.instance);
  oracle_cmd->add_option("--cap", oracle.cap, "edge-count cap for the exact search");

  std::reverse(args.begin(), args.end());  // CLI11 consumes args back to front
  try {
    cli.parse(args);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e);
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run);
    if (bench_cmd->parsed()) return cmd_bench(bench, std::cout);
    if (gen_cmd->parsed()) {
      gen.tight = tight_cmd->parsed();
      return cmd_generate(gen);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hlm::app
