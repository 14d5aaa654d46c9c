#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "autoqml/circuit.hpp"
#include "autoqml/discriminator.hpp"
#include "autoqml/errors.hpp"
#include "autoqml/experiment.hpp"
#include "autoqml/run_result.hpp"
#include "autoqml/serialization.hpp"
#include "autoqml/statevector.hpp"

namespace autoqml {

// .qmodel: a line-oriented text document, one `key value...` record per
// line, doubles printed with %.17g so reloading is bit-exact. Layout:
//
//   autoqml-model 1
//   spec_id <id>
//   family <zoufal|vallecorsa|herr_1>
//   num_qubits <N>
//   repetitions <k>
//   init uniform | init normal <mean> <std> | init random <n> <theta...>
//   params <P> <v...>
//   disc_sizes <L> <s...>
//   disc_W<l> <count> <row-major values...>   (one line per layer)
//   disc_b<l> <count> <values...>
//   seed <u64>
//   epochs_completed <n>
//   final_re <v>
//   final_ks <v>
//   transpiled_depth <d>
//   end

constexpr int kModelFormatVersion = 1;

struct SavedModel {
  std::string spec_id;
  AnsatzDescriptor descriptor{AnsatzFamily::zoufal, 1, 1};
  InitRealization init;
  std::vector<double> params;
  DiscriminatorNet discriminator;
  std::uint64_t seed = 0;
  int epochs_completed = 0;
  double final_re = 0.0;
  double final_ks = 0.0;
  int transpiled_depth = 0;
};

namespace detail {

inline void append_doubles(std::string& out, const std::vector<double>& xs) {
  out += ' ';
  out += std::to_string(xs.size());
  for (double x : xs) {
    out += ' ';
    out += format_double(x);
  }
}

}  // namespace detail

inline std::string save_model(const ExperimentSpec& spec, const RunResult& run) {
  std::string out = "autoqml-model " + std::to_string(kModelFormatVersion) + "\n";
  out += "spec_id " + run.spec_id + "\n";
  out += std::string("family ") + family_name(spec.ansatz) + "\n";
  out += "num_qubits " + std::to_string(spec.num_qubits) + "\n";
  out += "repetitions " + std::to_string(spec.repetitions) + "\n";

  out += std::string("init ") + init_name(run.init.kind);
  if (run.init.kind == InitKind::normal)
    out += " " + format_double(run.init.mean) + " " +
           format_double(run.init.std);
  if (run.init.kind == InitKind::random) {
    std::string tail;
    detail::append_doubles(tail, run.init.thetas);
    out += tail;
  }
  out += "\n";

  out += "params";
  detail::append_doubles(out, run.final_generator_params);
  out += "\n";

  out += "disc_sizes " + std::to_string(run.discriminator.sizes.size());
  for (int s : run.discriminator.sizes) out += " " + std::to_string(s);
  out += "\n";
  for (std::size_t l = 0; l < run.discriminator.W.size(); ++l) {
    out += "disc_W" + std::to_string(l);
    detail::append_doubles(out, run.discriminator.W[l]);
    out += "\ndisc_b" + std::to_string(l);
    detail::append_doubles(out, run.discriminator.b[l]);
    out += "\n";
  }

  out += "seed " + std::to_string(run.seed) + "\n";
  out += "epochs_completed " + std::to_string(run.epochs_completed) + "\n";
  out += "final_re " + format_double(run.final_re) + "\n";
  out += "final_ks " + format_double(run.final_ks) + "\n";
  out += "transpiled_depth " + std::to_string(run.transpiled_depth) + "\n";
  out += "end\n";
  return out;
}

namespace detail {

class ModelReader {
 public:
  explicit ModelReader(const std::string& text) : in_(text) {}

  // Next non-empty line split into tokens; empty vector at end of input.
  std::vector<std::string> next_line() {
    std::string line;
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      std::istringstream toks(line);
      std::vector<std::string> out;
      std::string t;
      while (toks >> t) out.push_back(t);
      return out;
    }
    return {};
  }

 private:
  std::istringstream in_;
};

inline double parse_model_double(const std::string& tok) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size())
    throw InvalidValue("qmodel: malformed number '" + tok + "'");
  return v;
}

inline long long parse_model_int(const std::string& tok) {
  const double v = parse_model_double(tok);
  if (v != static_cast<long long>(v))
    throw InvalidValue("qmodel: expected integer, got '" + tok + "'");
  return static_cast<long long>(v);
}

inline std::vector<double> parse_counted_doubles(
    const std::vector<std::string>& toks, std::size_t from,
    const std::string& what) {
  if (from >= toks.size())
    throw InvalidValue("qmodel: missing count for " + what);
  const auto count = static_cast<std::size_t>(parse_model_int(toks[from]));
  if (toks.size() != from + 1 + count)
    throw InvalidValue("qmodel: wrong value count for " + what);
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = parse_model_double(toks[from + 1 + i]);
  return out;
}

}  // namespace detail

inline SavedModel load_model(const std::string& text) {
  detail::ModelReader reader(text);
  auto header = reader.next_line();
  if (header.size() != 2 || header[0] != "autoqml-model")
    throw InvalidValue("qmodel: missing header line");
  if (detail::parse_model_int(header[1]) != kModelFormatVersion)
    throw InvalidValue("qmodel: unsupported format version " + header[1]);

  SavedModel m;
  bool saw_end = false;
  for (auto toks = reader.next_line(); !toks.empty();
       toks = reader.next_line()) {
    const std::string& key = toks[0];
    if (key == "end") {
      saw_end = true;
      break;
    } else if (key == "spec_id" && toks.size() == 2) {
      m.spec_id = toks[1];
    } else if (key == "family" && toks.size() == 2) {
      m.descriptor.family = parse_family(toks[1]);
    } else if (key == "num_qubits" && toks.size() == 2) {
      m.descriptor.num_qubits =
          static_cast<int>(detail::parse_model_int(toks[1]));
    } else if (key == "repetitions" && toks.size() == 2) {
      m.descriptor.repetitions =
          static_cast<int>(detail::parse_model_int(toks[1]));
    } else if (key == "init" && toks.size() >= 2) {
      m.init.kind = parse_init(toks[1]);
      if (m.init.kind == InitKind::normal) {
        if (toks.size() != 4)
          throw InvalidValue("qmodel: init normal needs mean and std");
        m.init.mean = detail::parse_model_double(toks[2]);
        m.init.std = detail::parse_model_double(toks[3]);
      } else if (m.init.kind == InitKind::random) {
        m.init.thetas = detail::parse_counted_doubles(toks, 2, "init random");
      } else if (toks.size() != 2) {
        throw InvalidValue("qmodel: init uniform takes no arguments");
      }
    } else if (key == "params") {
      m.params = detail::parse_counted_doubles(toks, 1, "params");
    } else if (key == "disc_sizes" && toks.size() >= 2) {
      const auto count =
          static_cast<std::size_t>(detail::parse_model_int(toks[1]));
      if (toks.size() != 2 + count)
        throw InvalidValue("qmodel: wrong value count for disc_sizes");
      m.discriminator.sizes.clear();
      for (std::size_t i = 0; i < count; ++i)
        m.discriminator.sizes.push_back(
            static_cast<int>(detail::parse_model_int(toks[2 + i])));
    } else if (key.rfind("disc_W", 0) == 0) {
      m.discriminator.W.push_back(
          detail::parse_counted_doubles(toks, 1, key));
    } else if (key.rfind("disc_b", 0) == 0) {
      m.discriminator.b.push_back(
          detail::parse_counted_doubles(toks, 1, key));
    } else if (key == "seed" && toks.size() == 2) {
      m.seed = static_cast<std::uint64_t>(
          std::strtoull(toks[1].c_str(), nullptr, 10));
    } else if (key == "epochs_completed" && toks.size() == 2) {
      m.epochs_completed = static_cast<int>(detail::parse_model_int(toks[1]));
    } else if (key == "final_re" && toks.size() == 2) {
      m.final_re = detail::parse_model_double(toks[1]);
    } else if (key == "final_ks" && toks.size() == 2) {
      m.final_ks = detail::parse_model_double(toks[1]);
    } else if (key == "transpiled_depth" && toks.size() == 2) {
      m.transpiled_depth = static_cast<int>(detail::parse_model_int(toks[1]));
    } else {
      throw InvalidValue("qmodel: unrecognized record '" + key + "'");
    }
  }
  if (!saw_end) throw InvalidValue("qmodel: missing end record");

  const CircuitTemplate t = build_ansatz(m.descriptor);
  if (static_cast<int>(m.params.size()) != t.num_params)
    throw InvalidValue("qmodel: parameter count does not match the ansatz");
  if (m.discriminator.sizes.size() < 2 ||
      m.discriminator.W.size() + 1 != m.discriminator.sizes.size() ||
      m.discriminator.b.size() != m.discriminator.W.size())
    throw InvalidValue("qmodel: inconsistent discriminator layout");
  return m;
}

// Rebuilds the trained generator state: realized init state through the
// ansatz at the saved parameters.
inline StateVector model_state(const SavedModel& m) {
  const CircuitTemplate t = build_ansatz(m.descriptor);
  const StateVector init = state_from_realization(m.init, m.descriptor.num_qubits);
  return apply_circuit(init, t, m.params);
}

inline std::vector<double> model_probabilities(const SavedModel& m) {
  return analytic_probabilities(model_state(m));
}

}  // namespace autoqml
