#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autoqml/config.hpp"
#include "autoqml/errors.hpp"
#include "autoqml/pipelines.hpp"
#include "autoqml/store.hpp"

namespace autoqml {
namespace cli {

// error=0, warn=1, info=2, debug=3
inline int level_index(const std::string& name) {
  if (name == "error") return 0;
  if (name == "warn") return 1;
  if (name == "debug") return 3;
  return 2;
}

inline int fail(const std::string& message, int code) {
  std::cerr << "error: " << message << "\n";
  return code;
}

inline int cmd_run(const std::string& config, const std::string& store_root,
                   int max_parallel, int level) {
  PipelineOptions opts;
  opts.max_parallel = max_parallel;
  if (level >= 2)
    opts.progress = [](const std::string& line) {
      std::cerr << line << "\n";
    };
  try {
    return run_all(config, store_root, opts);
  } catch (const Error& e) {
    return fail(e.what(), 1);
  }
}

inline int cmd_validate(const std::string& config, int level) {
  try {
    std::ifstream in(config, std::ios::binary);
    if (!in) throw IoError("cannot read config file: " + config);
    std::ostringstream buf;
    buf << in.rdbuf();
    const ExperimentConfig cfg = parse_config(std::move(buf).str());
    if (level >= 1)
      for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << "\n";

    const auto grid = expand_grid(cfg);
    long long total_evals = 0, worst_run = 0;
    for (const auto& spec : grid) {
      const auto t = build_ansatz(
          AnsatzDescriptor{spec.ansatz, spec.num_qubits, spec.repetitions});
      const long long per_run =
          static_cast<long long>(spec.num_epochs) * (1 + 2 * t.num_params);
      total_evals += per_run * spec.num_training_runs;
      worst_run = std::max(worst_run, per_run);
    }
    std::cout << grid.size() << " experiment specification"
              << (grid.size() == 1 ? "" : "s") << "\n";
    std::cout << (static_cast<long long>(grid.size()) *
                  cfg.num_training_runs)
              << " training runs\n";
    char line[160];
    std::snprintf(line, sizeof line,
                  "estimated circuit evaluations: %lld total, %lld max per "
                  "run (ceiling %lld)",
                  total_evals, worst_run,
                  static_cast<long long>(cfg.budget.max_circuit_evaluations));
    std::cout << line << "\n";
    return 0;
  } catch (const Error& e) {
    return fail(e.what(), 1);
  }
}

inline int cmd_report(const std::string& store_root) {
  try {
    ObjectStore store(store_root);
    if (!store.exists("processed/aggregate.csv"))
      throw MissingKey("store has no processed results (run a sweep first)");

    std::istringstream csv(store.get("processed/aggregate.csv"));
    std::vector<std::vector<std::string>> table;
    std::string line;
    while (std::getline(csv, line)) {
      if (line.empty()) continue;
      std::vector<std::string> cells;
      std::istringstream cols(line);
      std::string cell;
      while (std::getline(cols, cell, ',')) cells.push_back(cell);
      table.push_back(std::move(cells));
    }

    std::vector<std::size_t> width;
    for (const auto& row : table)
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c >= width.size()) width.push_back(0);
        width[c] = std::max(width[c], row[c].size());
      }
    for (const auto& row : table) {
      std::string out;
      for (std::size_t c = 0; c < row.size(); ++c) {
        out += row[c];
        if (c + 1 < row.size())
          out += std::string(width[c] - row[c].size() + 2, ' ');
      }
      std::cout << out << "\n";
    }

    const auto selection =
        nlohmann::json::parse(store.get("processed/selection.json"));
    std::cout << "\nwinner: " << selection.at("winner_spec_id")
                                     .get<std::string>()
              << "\n";
    if (selection.contains("per_qubit_winners"))
      for (const auto& [n, id] : selection.at("per_qubit_winners").items())
        std::cout << "winner[N=" << n << "]: " << id.get<std::string>()
                  << "\n";
    return 0;
  } catch (const Error& e) {
    return fail(e.what(), 1);
  }
}

inline int cmd_inspect(const std::string& store_root, const std::string& key) {
  try {
    if (!std::filesystem::is_directory(store_root))
      throw IoError("no store at: " + store_root);
    ObjectStore store(store_root);
    if (!key.empty()) {
      std::cout << store.get(key);
      return 0;
    }
    for (const auto& k : store.list("")) {
      const auto size = std::filesystem::file_size(store.root() / k);
      std::cout << k << "\t" << size << "\n";
    }
    return 0;
  } catch (const Error& e) {
    return fail(e.what(), 1);
  }
}

inline int run_cli(int argc, char** argv) {
  CLI::App app{"AutoQML quantum-GAN hyperparameter search"};
  app.require_subcommand(1);

  std::string config, store_root, key;
  int max_parallel = 0;
  std::string log_level = "info";
  const auto level_check =
      CLI::IsMember({"error", "warn", "info", "debug"});

  auto* run = app.add_subcommand(
      "run", "expand the grid, train every spec, aggregate and plot");
  run->add_option("--config", config, "experiment config JSON")->required();
  run->add_option("--store", store_root, "object store root")
      ->envname("AUTOQML_STORE")
      ->required();
  run->add_option("--max-parallel", max_parallel,
                  "cap on simultaneously active workers (0 = all)");
  run->add_option("--log-level", log_level)->check(level_check);

  auto* validate =
      app.add_subcommand("validate", "parse a config and size the grid");
  validate->add_option("--config", config, "experiment config JSON")
      ->required();
  validate->add_option("--log-level", log_level)->check(level_check);

  auto* report = app.add_subcommand(
      "report", "print the aggregate table and selection winner");
  report->add_option("--store", store_root, "object store root")
      ->envname("AUTOQML_STORE")
      ->required();
  report->add_option("--log-level", log_level)->check(level_check);

  auto* inspect =
      app.add_subcommand("inspect", "list store keys, or dump one blob");
  inspect->add_option("--store", store_root, "object store root")
      ->envname("AUTOQML_STORE")
      ->required();
  inspect->add_option("--key", key, "dump this blob to stdout");
  inspect->add_option("--log-level", log_level)->check(level_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const int level = level_index(log_level);
  if (run->parsed()) return cmd_run(config, store_root, max_parallel, level);
  if (validate->parsed()) return cmd_validate(config, level);
  if (report->parsed()) return cmd_report(store_root);
  return cmd_inspect(store_root, key);
}

}  // namespace cli
}  // namespace autoqml
