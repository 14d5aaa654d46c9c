#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <semaphore>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "autoqml/config.hpp"
#include "autoqml/data.hpp"
#include "autoqml/errors.hpp"
#include "autoqml/experiment.hpp"
#include "autoqml/model_io.hpp"
#include "autoqml/plots.hpp"
#include "autoqml/serialization.hpp"
#include "autoqml/store.hpp"
#include "autoqml/training.hpp"

namespace autoqml {

struct PipelineOptions {
  // 0 runs all workers simultaneously; a positive value caps concurrency
  // without changing blob layout (the schedule is static).
  int max_parallel = 0;
  int entanglement_samples = 50;
  std::chrono::milliseconds trigger_ceiling{300'000};
  // line-oriented progress sink (stage transitions, every 100th run)
  std::function<void(const std::string&)> progress;
};

namespace detail {

inline void report(const PipelineOptions& opts, const std::string& line) {
  if (opts.progress) opts.progress(line);
}

inline std::filesystem::path resolve_data_path(const ObjectStore& store,
                                               const std::string& data_path) {
  if (data_path.empty() || data_path.front() == '/')
    throw InvalidValue("data_path must be relative to the store root: '" +
                       data_path + "'");
  std::istringstream parts(data_path);
  std::string part;
  while (std::getline(parts, part, '/'))
    if (part == "..")
      throw InvalidValue("data_path may not escape the store root: '" +
                         data_path + "'");
  return store.root() / data_path;
}

// Loads and bins one distribution entry; at most the first `samples` rows
// are used so the config controls the dataset size.
inline TargetDistribution load_target(const ObjectStore& store,
                                      const DistributionSpec& dist, int N) {
  const auto path = resolve_data_path(store, dist.data_path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read data file: " + dist.data_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto samples = load_samples(std::move(buf).str());
  if (static_cast<long long>(samples.size()) > dist.samples)
    samples.resize(static_cast<std::size_t>(dist.samples));
  return discretize(samples, N, dist.discretization);
}

// Per-worker cache: each (distribution, qubit-count) pair is loaded and
// binned once, and a load failure is remembered so every affected run gets
// the same error entry.
class TargetCache {
 public:
  TargetCache(const ObjectStore& store, const ExperimentConfig& cfg)
      : store_(store), cfg_(cfg) {}

  const TargetDistribution& get(int dist_index, int N) {
    const auto key = std::make_pair(dist_index, N);
    if (auto it = errors_.find(key); it != errors_.end())
      throw IoError(it->second);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    try {
      auto [it, _] = cache_.emplace(
          key, load_target(store_,
                           cfg_.distributions[static_cast<std::size_t>(
                               dist_index)],
                           N));
      return it->second;
    } catch (const Error& e) {
      errors_[key] = e.what();
      throw;
    }
  }

 private:
  const ObjectStore& store_;
  const ExperimentConfig& cfg_;
  std::map<std::pair<int, int>, TargetDistribution> cache_;
  std::map<std::pair<int, int>, std::string> errors_;
};

inline std::vector<RunResult> read_all_results(const ObjectStore& store) {
  std::vector<RunResult> all;
  for (const auto& key : store.list("raw/"))
    for (auto& r : parse_node_blob(store.get(key)))
      all.push_back(std::move(r));
  return all;
}

}  // namespace detail

// ------------------------------------------------------------------
// Pipeline 1: the worker pool
// ------------------------------------------------------------------
// n_containers workers, each owning a static share of the grid. A worker
// trains num_training_runs runs per assigned spec and publishes exactly one
// blob raw/node-<w>.json; run failures become failed-run records inside the
// blob rather than aborting the pool.
inline void run_pipeline_1(const ExperimentConfig& cfg, ObjectStore& store,
                           const PipelineOptions& opts = {}) {
  if (store.list("config/").empty())
    throw MissingKey("pipeline 1 requires the config blob under config/");

  const auto grid = expand_grid(cfg);
  const auto assignment = schedule_static(grid, cfg.n_containers);
  std::map<std::string, const ExperimentSpec*> by_id;
  for (const auto& s : grid) by_id[s.spec_id] = &s;

  const long long total_runs =
      static_cast<long long>(grid.size()) * cfg.num_training_runs;
  detail::report(opts, "pipeline 1: started (" + std::to_string(grid.size()) +
                           " specs, " + std::to_string(cfg.n_containers) +
                           " workers, " + std::to_string(total_runs) +
                           " runs)");

  const int permits =
      opts.max_parallel > 0 ? opts.max_parallel : cfg.n_containers;
  std::counting_semaphore<0x7fffffff> gate(permits);
  std::atomic<long long> completed{0};
  std::vector<std::string> worker_errors(
      static_cast<std::size_t>(cfg.n_containers));

  auto worker = [&](int w) {
    gate.acquire();
    try {
      detail::TargetCache targets(store, cfg);
      std::vector<RunResult> results;
      for (const auto& spec_id : assignment[static_cast<std::size_t>(w)]) {
        const ExperimentSpec& spec = *by_id.at(spec_id);
        for (int run = 0; run < spec.num_training_runs; ++run) {
          const std::uint64_t seed = derive_run_seed(
              spec_id, static_cast<std::uint64_t>(run), cfg.master_seed);
          RunResult r;
          try {
            const TargetDistribution& target =
                targets.get(spec.distribution_index, spec.num_qubits);
            Rng rng(seed);
            r = train_qgan(spec, target, cfg.budget, rng);
          } catch (const std::exception& e) {
            r = RunResult{};
            r.spec_id = spec_id;
            r.ok = false;
            r.error = e.what();
          }
          r.run_index = run;
          r.seed = seed;
          results.push_back(std::move(r));
          const long long done = completed.fetch_add(1) + 1;
          if (done % 100 == 0)
            detail::report(opts, "pipeline 1: " + std::to_string(done) + "/" +
                                     std::to_string(total_runs) +
                                     " runs complete");
        }
      }
      store.put_atomic("raw/node-" + std::to_string(w) + ".json",
                       serialize_node_blob(results));
    } catch (const std::exception& e) {
      worker_errors[static_cast<std::size_t>(w)] = e.what();
    }
    gate.release();
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(cfg.n_containers));
  for (int w = 0; w < cfg.n_containers; ++w) pool.emplace_back(worker, w);
  for (auto& t : pool) t.join();

  for (int w = 0; w < cfg.n_containers; ++w)
    if (!worker_errors[static_cast<std::size_t>(w)].empty())
      throw IoError("worker " + std::to_string(w) +
                    " could not publish its blob: " +
                    worker_errors[static_cast<std::size_t>(w)]);
  detail::report(opts, "pipeline 1: complete");
}

// ------------------------------------------------------------------
// Pipeline 2: aggregation and selection
// ------------------------------------------------------------------
inline void run_pipeline_2(const ExperimentConfig& cfg, ObjectStore& store,
                           const PipelineOptions& opts = {}) {
  await_trigger({"raw/", cfg.n_containers}, store, opts.trigger_ceiling);
  detail::report(opts, "pipeline 2: started");

  const auto grid = expand_grid(cfg);
  std::map<std::string, std::vector<RunResult>> by_spec;
  for (auto& r : detail::read_all_results(store))
    by_spec[r.spec_id].push_back(std::move(r));
  for (auto& [_, runs] : by_spec)
    std::sort(runs.begin(), runs.end(),
              [](const RunResult& a, const RunResult& b) {
                return a.run_index < b.run_index;
              });

  std::vector<AggregateStats> rows;
  for (const auto& spec : grid) {
    const auto it = by_spec.find(spec.spec_id);
    if (it == by_spec.end()) continue;
    try {
      rows.push_back(aggregate_runs(it->second));
    } catch (const EmptyInput&) {
      // spec had only failed runs; it contributes no aggregate row
    }
  }
  if (rows.empty())
    throw NoSuccessfulRuns("pipeline 2: no spec finished a single run");

  store.put_atomic("processed/aggregate.csv", aggregate_csv(rows, grid));

  const SelectionReport report = select_best(rows);
  const ExperimentSpec* winner = nullptr;
  for (const auto& s : grid)
    if (s.spec_id == report.winner_spec_id) winner = &s;

  const RunResult* best_run = nullptr;
  for (const auto& r : by_spec.at(report.winner_spec_id)) {
    if (!r.ok) continue;
    if (best_run == nullptr || r.final_re < best_run->final_re) best_run = &r;
  }
  store.put_atomic("models/best.qmodel", save_model(*winner, *best_run));

  // Table-style per-qubit-count winners alongside the global one.
  std::map<int, std::vector<AggregateStats>> rows_by_n;
  std::map<std::string, int> qubits_of;
  for (const auto& s : grid) qubits_of[s.spec_id] = s.num_qubits;
  for (const auto& row : rows)
    rows_by_n[qubits_of.at(row.spec_id)].push_back(row);
  std::vector<std::pair<int, std::string>> per_n;
  for (const auto& [n, group] : rows_by_n)
    per_n.emplace_back(n, select_best(group).winner_spec_id);

  store.put_atomic("processed/selection.json",
                   serialize_selection(report, per_n));
  detail::report(opts, "pipeline 2: complete (winner " +
                           report.winner_spec_id + ")");
}

// ------------------------------------------------------------------
// Pipeline 3: report emission
// ------------------------------------------------------------------
inline void run_pipeline_3(const ExperimentConfig& cfg, ObjectStore& store,
                           const PipelineOptions& opts = {}) {
  await_trigger({"processed/", 1}, store, opts.trigger_ceiling);
  detail::report(opts, "pipeline 3: started");

  // validate before writing anything
  std::vector<std::string> requested;
  for (const auto& name : cfg.visualizations) {
    const auto& known = known_visualizations();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw UnknownVisualization("unknown visualization: " + name);
    if (std::find(requested.begin(), requested.end(), name) ==
        requested.end())
      requested.push_back(name);
  }

  const auto grid = expand_grid(cfg);
  for (const auto& name : requested) {
    std::string csv, svg;
    if (name == "entropy_curve") {
      const auto runs = detail::read_all_results(store);
      csv = entropy_curve_csv(grid, runs);
      svg = entropy_curve_svg(grid, runs);
    } else if (name == "entanglement_histogram") {
      const auto bars = entanglement_histogram_data(
          grid, opts.entanglement_samples, cfg.master_seed);
      csv = entanglement_histogram_csv(bars);
      svg = entanglement_histogram_svg(bars);
    } else {  // distribution_overlay
      const SavedModel model = load_model(store.get("models/best.qmodel"));
      const ExperimentSpec* winner = nullptr;
      for (const auto& s : grid)
        if (s.spec_id == model.spec_id) winner = &s;
      if (winner == nullptr)
        throw InvalidValue("best model spec not found in the grid: " +
                           model.spec_id);
      const TargetDistribution target = detail::load_target(
          store,
          cfg.distributions[static_cast<std::size_t>(
              winner->distribution_index)],
          winner->num_qubits);
      const auto probs = model_probabilities(model);
      csv = distribution_overlay_csv(target, probs);
      svg = distribution_overlay_svg(target, probs);
    }
    store.put_atomic("plots/" + name + ".csv", csv);
    store.put_atomic("plots/" + name + ".svg", svg);
    detail::report(opts, "pipeline 3: wrote " + name);
  }
  detail::report(opts, "pipeline 3: complete");
}

// ------------------------------------------------------------------
// Full sequential run
// ------------------------------------------------------------------
// Uploads the config (the initiating event), then runs pipelines 1 -> 2 -> 3
// gated by blob-count triggers. Config and setup errors propagate to the
// caller; pipeline failures are reported via the nonzero return value.
inline int run_all(const std::filesystem::path& config_path,
                   const std::filesystem::path& store_root,
                   const PipelineOptions& opts = {}) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) throw IoError("cannot read config file: " + config_path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string config_bytes = std::move(buf).str();

  const ExperimentConfig cfg = parse_config(config_bytes);
  for (const auto& w : cfg.warnings)
    detail::report(opts, "config warning: " + w);

  ObjectStore store(store_root);
  for (const char* prefix :
       {"config/", "raw/", "processed/", "models/", "plots/"})
    if (!store.list(prefix).empty())
      throw StoreNotEmpty(
          "store already holds results under '" + std::string(prefix) +
          "'; keys are write-once, use a fresh store root");

  std::string name = config_path.filename().string();
  if (name.empty()) name = "experiment.json";
  store.put_atomic("config/" + name, config_bytes);
  detail::report(opts, "uploaded config as config/" + name);

  try {
    run_pipeline_1(cfg, store, opts);
    run_pipeline_2(cfg, store, opts);
    run_pipeline_3(cfg, store, opts);
  } catch (const Error& e) {
    detail::report(opts, std::string("pipeline failure: ") + e.what());
    return 2;
  }
  return 0;
}

}  // namespace autoqml
