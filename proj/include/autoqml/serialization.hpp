#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "autoqml/circuit.hpp"
#include "autoqml/discriminator.hpp"
#include "autoqml/errors.hpp"
#include "autoqml/experiment.hpp"
#include "autoqml/metrics.hpp"
#include "autoqml/run_result.hpp"

namespace autoqml {

// Raw node blobs are JSON arrays of RunResult records, each carrying a
// `format` version. wall_seconds is intentionally absent: blobs from
// same-seed reruns must be byte-identical.

constexpr int kBlobFormatVersion = 1;

namespace detail {

inline nlohmann::json init_to_json(const InitRealization& r) {
  return {{"kind", init_name(r.kind)},
          {"mean", r.mean},
          {"std", r.std},
          {"thetas", r.thetas}};
}

inline InitRealization init_from_json(const nlohmann::json& j) {
  InitRealization r;
  r.kind = parse_init(j.at("kind").get<std::string>());
  r.mean = j.at("mean").get<double>();
  r.std = j.at("std").get<double>();
  r.thetas = j.at("thetas").get<std::vector<double>>();
  return r;
}

inline nlohmann::json net_to_json(const DiscriminatorNet& net) {
  return {{"sizes", net.sizes}, {"weights", net.W}, {"biases", net.b}};
}

inline DiscriminatorNet net_from_json(const nlohmann::json& j) {
  DiscriminatorNet net;
  net.sizes = j.at("sizes").get<std::vector<int>>();
  net.W = j.at("weights").get<std::vector<std::vector<double>>>();
  net.b = j.at("biases").get<std::vector<std::vector<double>>>();
  return net;
}

}  // namespace detail

inline nlohmann::json run_result_to_json(const RunResult& r) {
  return {{"format", kBlobFormatVersion},
          {"spec_id", r.spec_id},
          {"run_index", r.run_index},
          {"seed", r.seed},
          {"ok", r.ok},
          {"error", r.error},
          {"epochs_completed", r.epochs_completed},
          {"generator_loss_curve", r.generator_loss_curve},
          {"discriminator_loss_curve", r.discriminator_loss_curve},
          {"entropy_curve", r.entropy_curve},
          {"final_ks", r.final_ks},
          {"final_re", r.final_re},
          {"transpiled_depth", r.transpiled_depth},
          {"circuit_evaluations", r.circuit_evaluations},
          {"final_generator_params", r.final_generator_params},
          {"budget_exhausted", r.budget_exhausted},
          {"init", detail::init_to_json(r.init)},
          {"discriminator", detail::net_to_json(r.discriminator)}};
}

inline RunResult run_result_from_json(const nlohmann::json& j) {
  if (!j.contains("format") || j.at("format").get<int>() != kBlobFormatVersion)
    throw InvalidValue("run result record has unsupported format version");
  RunResult r;
  r.spec_id = j.at("spec_id").get<std::string>();
  r.run_index = j.at("run_index").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.ok = j.at("ok").get<bool>();
  r.error = j.at("error").get<std::string>();
  r.epochs_completed = j.at("epochs_completed").get<int>();
  r.generator_loss_curve =
      j.at("generator_loss_curve").get<std::vector<double>>();
  r.discriminator_loss_curve =
      j.at("discriminator_loss_curve").get<std::vector<double>>();
  r.entropy_curve = j.at("entropy_curve").get<std::vector<double>>();
  r.final_ks = j.at("final_ks").get<double>();
  r.final_re = j.at("final_re").get<double>();
  r.transpiled_depth = j.at("transpiled_depth").get<int>();
  r.circuit_evaluations = j.at("circuit_evaluations").get<long long>();
  r.final_generator_params =
      j.at("final_generator_params").get<std::vector<double>>();
  r.budget_exhausted = j.at("budget_exhausted").get<bool>();
  r.init = detail::init_from_json(j.at("init"));
  r.discriminator = detail::net_from_json(j.at("discriminator"));
  return r;
}

inline std::string serialize_node_blob(const std::vector<RunResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) arr.push_back(run_result_to_json(r));
  return arr.dump(2) + "\n";
}

inline std::vector<RunResult> parse_node_blob(const std::string& bytes) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("node blob is not valid JSON: ") + e.what());
  }
  if (!arr.is_array()) throw InvalidValue("node blob must be a JSON array");
  std::vector<RunResult> out;
  for (const auto& j : arr) out.push_back(run_result_from_json(j));
  return out;
}

// Shortest text that round-trips an IEEE double exactly.
inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// The processed/aggregate.csv table. Rows follow grid order; the
// initialization and k columns are joined back in from the grid specs.
inline std::string aggregate_csv(const std::vector<AggregateStats>& rows,
                                 const std::vector<ExperimentSpec>& grid) {
  std::string out =
      "spec_id,initialization,k,mu_ks,sigma_ks,mu_re,sigma_re,mu_depth\n";
  for (const auto& s : rows) {
    const ExperimentSpec* spec = nullptr;
    for (const auto& g : grid)
      if (g.spec_id == s.spec_id) {
        spec = &g;
        break;
      }
    if (spec == nullptr)
      throw InvalidValue("aggregate row for unknown spec: " + s.spec_id);
    out += s.spec_id;
    out += ',';
    out += init_name(spec->init.kind);
    out += ',';
    out += std::to_string(spec->repetitions);
    out += ',';
    out += format_double(s.mu_ks);
    out += ',';
    out += format_double(s.sigma_ks);
    out += ',';
    out += format_double(s.mu_re);
    out += ',';
    out += format_double(s.sigma_re);
    out += ',';
    out += format_double(s.mu_depth);
    out += '\n';
  }
  return out;
}

inline std::string serialize_selection(
    const SelectionReport& report,
    const std::vector<std::pair<int, std::string>>& per_qubit_winners) {
  nlohmann::json ranking = nlohmann::json::array();
  for (const auto& r : report.ranking)
    ranking.push_back({{"spec_id", r.spec_id}, {"composite", r.composite}});
  nlohmann::json per_n = nlohmann::json::object();
  for (const auto& [n, id] : per_qubit_winners)
    per_n[std::to_string(n)] = id;
  nlohmann::json j = {{"format", kBlobFormatVersion},
                      {"winner_spec_id", report.winner_spec_id},
                      {"weights",
                       {{"w_re", report.weights.w_re},
                        {"w_ks", report.weights.w_ks},
                        {"w_depth", report.weights.w_depth},
                        {"w_loss", report.weights.w_loss}}},
                      {"ranking", ranking},
                      {"per_qubit_winners", per_n}};
  return j.dump(2) + "\n";
}

}  // namespace autoqml
