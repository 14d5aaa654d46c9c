#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "autoqml/circuit.hpp"
#include "autoqml/discriminator.hpp"
#include "autoqml/errors.hpp"
#include "autoqml/experiment.hpp"
#include "autoqml/run_result.hpp"

namespace autoqml {

// ------------------------------------------------------------------
// Lenient JSON
// ------------------------------------------------------------------
// Config files in the wild carry Windows paths with unescaped backslashes,
// repeated keys, and trailing commas. The parser accepts all three: unknown
// escapes are kept literally, object members are stored in source order with
// duplicates preserved, and a comma before a closing bracket is ignored.

struct JsonValue {
  enum class Kind { null_v, bool_v, number_v, string_v, array_v, object_v };
  Kind kind = Kind::null_v;
  bool boolean = false;
  double number = 0.0;
  std::string string;
  std::vector<JsonValue> items;
  std::vector<std::pair<std::string, JsonValue>> members;

  bool is_object() const { return kind == Kind::object_v; }
  bool is_array() const { return kind == Kind::array_v; }
  bool is_string() const { return kind == Kind::string_v; }
  bool is_number() const { return kind == Kind::number_v; }

  // Last occurrence wins for scalar lookup; duplicate-aware callers walk
  // `members` directly.
  const JsonValue* find(const std::string& key) const {
    const JsonValue* hit = nullptr;
    for (const auto& [k, v] : members)
      if (k == key) hit = &v;
    return hit;
  }
};

namespace detail {

class JsonParser {
 public:
  explicit JsonParser(const std::string& text) : text_(text) {}

  JsonValue parse_document() {
    skip_ws();
    JsonValue v = parse_value();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after document");
    return v;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError("syntax error at byte " + std::to_string(pos_) + ": " +
                      msg);
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect_literal(const char* word) {
    for (const char* p = word; *p; ++p)
      if (pos_ >= text_.size() || text_[pos_++] != *p)
        fail(std::string("expected '") + word + "'");
  }

  JsonValue parse_value() {
    switch (peek()) {
      case '{': return parse_object();
      case '[': return parse_array();
      case '"': return make_string(parse_string());
      case 't': expect_literal("true"); return make_bool(true);
      case 'f': expect_literal("false"); return make_bool(false);
      case 'n': expect_literal("null"); return JsonValue{};
      default: return parse_number();
    }
  }

  static JsonValue make_string(std::string s) {
    JsonValue v;
    v.kind = JsonValue::Kind::string_v;
    v.string = std::move(s);
    return v;
  }

  static JsonValue make_bool(bool b) {
    JsonValue v;
    v.kind = JsonValue::Kind::bool_v;
    v.boolean = b;
    return v;
  }

  JsonValue parse_number() {
    const char* start = text_.c_str() + pos_;
    char* end = nullptr;
    double x = std::strtod(start, &end);
    if (end == start) fail("unexpected character");
    pos_ += static_cast<std::size_t>(end - start);
    JsonValue v;
    v.kind = JsonValue::Kind::number_v;
    v.number = x;
    return v;
  }

  std::string parse_string() {
    ++pos_;  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string");
      char c = text_[pos_++];
      if (c == '"') return out;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (pos_ >= text_.size()) fail("unterminated escape");
      char e = text_[pos_++];
      switch (e) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case '/': out += '/'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case 'u': out += parse_unicode_escape(); break;
        default:
          out += '\\';
          out += e;
      }
    }
  }

  std::string parse_unicode_escape() {
    if (pos_ + 4 > text_.size()) return "\\u";
    unsigned cp = 0;
    for (int i = 0; i < 4; ++i) {
      char c = text_[pos_ + i];
      unsigned d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else return "\\u";
      cp = cp * 16 + d;
    }
    pos_ += 4;
    std::string out;
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
  }

  JsonValue parse_object() {
    ++pos_;  // '{'
    JsonValue v;
    v.kind = JsonValue::Kind::object_v;
    while (true) {
      skip_ws();
      if (consume('}')) return v;
      if (peek() != '"') fail("expected string key");
      std::string key = parse_string();
      skip_ws();
      if (!consume(':')) fail("expected ':' after key");
      skip_ws();
      v.members.emplace_back(std::move(key), parse_value());
      skip_ws();
      if (consume(',')) continue;
      if (consume('}')) return v;
      fail("expected ',' or '}' in object");
    }
  }

  JsonValue parse_array() {
    ++pos_;  // '['
    JsonValue v;
    v.kind = JsonValue::Kind::array_v;
    while (true) {
      skip_ws();
      if (consume(']')) return v;
      v.items.push_back(parse_value());
      skip_ws();
      if (consume(',')) continue;
      if (consume(']')) return v;
      fail("expected ',' or ']' in array");
    }
  }
};

}  // namespace detail

inline JsonValue parse_lenient_json(const std::string& text) {
  return detail::JsonParser(text).parse_document();
}

// ------------------------------------------------------------------
// Experiment configuration
// ------------------------------------------------------------------

struct DistributionSpec {
  std::string data_path;
  long long samples = 0;
  std::string discretization = "optimal";
};

struct AnsatzGridEntry {
  AnsatzFamily family = AnsatzFamily::zoufal;
  std::vector<int> repetitions;
};

// The full parsed search configuration. `warnings` collects non-fatal
// oddities (unknown fields, ignored hparams) for the caller to log.
struct ExperimentConfig {
  std::string name;
  std::string goal;
  std::string metrics = "relative_entropy";
  int n_containers = 1;
  std::vector<std::string> visualizations;
  std::vector<DistributionSpec> distributions;
  std::vector<AnsatzGridEntry> ansaetze;
  std::vector<InitStrategy> initializations;
  std::vector<int> num_qubits;
  int batch_size = 512;
  int num_epochs = 1;
  int num_training_runs = 1;
  std::vector<DiscriminatorSpec> discriminators;
  std::vector<double> generator_lrs;
  double generator_beta1 = 0.7;
  double generator_beta2 = 0.99;
  TrainingBudget budget;
  std::uint64_t master_seed = 0;
  std::vector<std::string> warnings;
};

namespace detail {

inline const JsonValue& require_field(const JsonValue& obj, const char* key) {
  if (const JsonValue* v = obj.find(key)) return *v;
  throw MissingField(std::string("missing required field: ") + key);
}

inline std::string as_string(const JsonValue& v, const std::string& field) {
  if (!v.is_string()) throw InvalidValue(field + ": expected a string");
  return v.string;
}

inline double as_number(const JsonValue& v, const std::string& field) {
  if (!v.is_number()) throw InvalidValue(field + ": expected a number");
  return v.number;
}

inline long long as_integer(const JsonValue& v, const std::string& field) {
  double x = as_number(v, field);
  if (x != std::floor(x) || std::abs(x) > 9e15)
    throw InvalidValue(field + ": expected an integer");
  return static_cast<long long>(x);
}

inline std::vector<int> as_int_list(const JsonValue& v,
                                    const std::string& field) {
  if (!v.is_array()) throw InvalidValue(field + ": expected a list");
  std::vector<int> out;
  for (const auto& e : v.items)
    out.push_back(static_cast<int>(as_integer(e, field)));
  return out;
}

template <typename T>
inline void reject_duplicates(const std::vector<T>& xs,
                              const std::string& field) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) throw InvalidValue(field + ": duplicate entry");
}

inline DistributionSpec parse_distribution(const JsonValue& v,
                                           std::vector<std::string>& warnings) {
  if (!v.is_object())
    throw InvalidValue("distributions: entries must be objects");
  DistributionSpec d;
  d.data_path = as_string(require_field(v, "data_path"), "data_path");
  d.samples = as_integer(require_field(v, "samples"), "samples");
  if (d.samples < 1) throw InvalidValue("samples: must be >= 1");
  d.discretization =
      as_string(require_field(v, "discretization"), "discretization");
  if (d.discretization != "optimal")
    warnings.push_back("discretization '" + d.discretization +
                       "' is not recognized; equal-width binning is used");
  for (const auto& [k, _] : v.members)
    if (k != "data_path" && k != "samples" && k != "discretization")
      warnings.push_back("distributions: unknown field '" + k + "' ignored");
  return d;
}

inline AnsatzGridEntry parse_ansatz_entry(const JsonValue& v) {
  if (!v.is_object()) throw InvalidValue("ansaetze: entries must be objects");
  AnsatzGridEntry a;
  const std::string type = as_string(require_field(v, "type"), "ansaetze.type");
  try {
    a.family = parse_family(type);
  } catch (const UnknownFamily& e) {
    throw InvalidValue(std::string("ansaetze.type: ") + e.what());
  }
  a.repetitions =
      as_int_list(require_field(v, "repetitions"), "ansaetze.repetitions");
  if (a.repetitions.empty())
    throw InvalidValue("ansaetze.repetitions: must be non-empty");
  for (int k : a.repetitions)
    if (k < 1) throw InvalidValue("ansaetze.repetitions: must be >= 1");
  reject_duplicates(a.repetitions, "ansaetze.repetitions");
  return a;
}

inline InitStrategy parse_initialization(const JsonValue& v,
                                         std::vector<std::string>& warnings) {
  if (!v.is_object())
    throw InvalidValue("initializations: entries must be objects");
  InitStrategy st;
  bool have_type = false;
  for (const auto& [key, val] : v.members) {
    if (key == "type") {
      st.kind = parse_init(as_string(val, "initializations.type"));
      have_type = true;
    } else if (key == "mean") {
      st.mean = as_number(val, "initializations.mean");
      st.has_mean = true;
    } else if (key == "std") {
      st.std = as_number(val, "initializations.std");
      if (st.std <= 0.0) throw InvalidValue("initializations.std: must be > 0");
      st.has_std = true;
    } else if (key == "seed") {
      long long s = as_integer(val, "initializations.seed");
      if (s < 0) throw InvalidValue("initializations.seed: must be >= 0");
      st.seed = static_cast<std::uint64_t>(s);
      st.has_seed = true;
    } else {
      warnings.push_back("initializations: unknown field '" + key +
                         "' ignored");
    }
  }
  if (!have_type)
    throw MissingField("missing required field: initializations[].type");
  return st;
}

inline DiscriminatorSpec parse_hparams(const std::string& type,
                                       const JsonValue& hp,
                                       std::vector<std::string>& warnings) {
  if (!hp.is_object())
    throw InvalidValue("discriminator.hparams: expected an object");
  DiscriminatorSpec spec;
  spec.type_name = type;
  bool have_lr = false, have_hidden = false;
  for (const auto& [key, val] : hp.members) {
    if (key == "lr") {
      if (val.is_array()) {
        if (val.items.empty())
          throw InvalidValue("discriminator.lr: must be non-empty");
        if (val.items.size() > 1)
          warnings.push_back(
              "discriminator.lr: grids are not searched; using first value");
        spec.lr = as_number(val.items.front(), "discriminator.lr");
      } else {
        spec.lr = as_number(val, "discriminator.lr");
      }
      have_lr = true;
    } else if (key == "n_hidden") {
      spec.hidden = as_int_list(val, "discriminator.n_hidden");
      if (spec.hidden.empty())
        throw InvalidValue("discriminator.n_hidden: must be non-empty");
      for (int h : spec.hidden)
        if (h < 1) throw InvalidValue("discriminator.n_hidden: must be >= 1");
      have_hidden = true;
    } else if (key == "n_input") {
      // scalar samples fix the input width at 1; the field is checked and
      // dropped
      if (as_integer(val, "discriminator.n_input") < 1)
        throw InvalidValue("discriminator.n_input: must be >= 1");
      warnings.push_back(
          "discriminator.n_input is ignored (input dimension is 1)");
    } else if (key == "betas") {
      if (!val.is_array() || val.items.size() != 2)
        throw InvalidValue("discriminator.betas: expected [beta1, beta2]");
      spec.beta1 = as_number(val.items[0], "discriminator.betas");
      spec.beta2 = as_number(val.items[1], "discriminator.betas");
    } else {
      warnings.push_back("discriminator.hparams: unknown field '" + key +
                         "' ignored");
    }
  }
  if (!have_lr) throw MissingField("missing required field: discriminator.lr");
  if (spec.lr <= 0.0) throw InvalidValue("discriminator.lr: must be > 0");
  try {
    validate_betas(spec.beta1, spec.beta2);
  } catch (const InvalidValue& e) {
    throw InvalidValue(std::string("discriminator.betas: ") + e.what());
  }
  if (!have_hidden) {
    spec.hidden = discriminator_hidden_sizes(type);
  } else {
    try {
      if (discriminator_hidden_sizes(type) != spec.hidden)
        warnings.push_back("discriminator '" + type +
                           "': n_hidden overrides the type's default widths");
    } catch (const InvalidValue&) {
      // unnamed custom type, defined entirely by n_hidden
    }
  }
  return spec;
}

// The configuration schema repeats "type"/"hparams" pairs inside a single
// object; the duplicate-preserving parser lets this walk them in order and
// zip each type with the hparams block that follows it.
inline std::vector<DiscriminatorSpec> parse_discriminators(
    const JsonValue& v, std::vector<std::string>& warnings) {
  if (!v.is_object()) throw InvalidValue("discriminator: expected an object");
  std::vector<DiscriminatorSpec> out;
  std::string pending_type;
  bool have_type = false;
  for (const auto& [key, val] : v.members) {
    if (key == "type") {
      if (have_type)
        throw InvalidValue("discriminator: 'type' without following 'hparams'");
      pending_type = as_string(val, "discriminator.type");
      have_type = true;
    } else if (key == "hparams") {
      if (!have_type)
        throw InvalidValue("discriminator: 'hparams' without preceding 'type'");
      out.push_back(parse_hparams(pending_type, val, warnings));
      have_type = false;
    } else {
      warnings.push_back("discriminator: unknown field '" + key + "' ignored");
    }
  }
  if (have_type)
    throw InvalidValue("discriminator: 'type' without following 'hparams'");
  if (out.empty())
    throw MissingField("missing required field: discriminator.type");
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i].type_name == out[j].type_name)
        throw InvalidValue("discriminator: duplicate type '" +
                           out[i].type_name + "'");
  return out;
}

}  // namespace detail

inline ExperimentConfig parse_config(const std::string& text) {
  using detail::as_integer;
  using detail::as_number;
  using detail::as_string;
  using detail::require_field;

  const JsonValue root = parse_lenient_json(text);
  if (!root.is_object()) throw SyntaxError("top-level value must be an object");

  ExperimentConfig cfg;

  static constexpr std::array<const char*, 16> known = {
      "name",           "goal",        "metrics",
      "n_containers",   "visualizations", "distributions",
      "ansaetze",       "initializations", "num_qubits",
      "batch_size",     "num_epochs",  "num_training_runs",
      "discriminator",  "optimizer",   "budget",
      "master_seed"};
  for (const auto& [key, _] : root.members)
    if (std::find_if(known.begin(), known.end(), [&](const char* k) {
          return key == k;
        }) == known.end())
      cfg.warnings.push_back("unknown field '" + key + "' ignored");

  if (const JsonValue* v = root.find("name"))
    cfg.name = as_string(*v, "name");
  if (const JsonValue* v = root.find("goal"))
    cfg.goal = as_string(*v, "goal");
  if (const JsonValue* v = root.find("metrics")) {
    cfg.metrics = as_string(*v, "metrics");
    if (cfg.metrics != "relative_entropy")
      cfg.warnings.push_back("metric '" + cfg.metrics +
                             "' is not recognized; selection uses "
                             "relative_entropy and the KS statistic");
  }

  cfg.n_containers = static_cast<int>(
      as_integer(require_field(root, "n_containers"), "n_containers"));
  if (cfg.n_containers < 1) throw InvalidValue("n_containers: must be >= 1");

  if (const JsonValue* v = root.find("visualizations")) {
    if (!v->is_array()) throw InvalidValue("visualizations: expected a list");
    for (const auto& e : v->items)
      cfg.visualizations.push_back(as_string(e, "visualizations"));
  }

  const JsonValue& dists = require_field(root, "distributions");
  if (!dists.is_array() || dists.items.empty())
    throw InvalidValue("distributions: must be a non-empty list");
  for (const auto& e : dists.items)
    cfg.distributions.push_back(detail::parse_distribution(e, cfg.warnings));

  const JsonValue& ans = require_field(root, "ansaetze");
  if (!ans.is_array() || ans.items.empty())
    throw InvalidValue("ansaetze: must be a non-empty list");
  for (const auto& e : ans.items)
    cfg.ansaetze.push_back(detail::parse_ansatz_entry(e));
  {
    std::vector<std::string> names;
    for (const auto& a : cfg.ansaetze) names.push_back(family_name(a.family));
    detail::reject_duplicates(names, "ansaetze.type");
  }

  const JsonValue& inits = require_field(root, "initializations");
  if (!inits.is_array() || inits.items.empty())
    throw InvalidValue("initializations: must be a non-empty list");
  for (const auto& e : inits.items)
    cfg.initializations.push_back(detail::parse_initialization(e, cfg.warnings));
  {
    std::vector<std::string> names;
    for (const auto& st : cfg.initializations)
      names.push_back(init_name(st.kind));
    detail::reject_duplicates(names, "initializations.type");
  }

  cfg.num_qubits =
      detail::as_int_list(require_field(root, "num_qubits"), "num_qubits");
  if (cfg.num_qubits.empty())
    throw InvalidValue("num_qubits: must be non-empty");
  for (int n : cfg.num_qubits)
    if (n < 1 || n > 12)
      throw InvalidValue("num_qubits: " + std::to_string(n) +
                         " outside the simulator range [1, 12]");
  detail::reject_duplicates(cfg.num_qubits, "num_qubits");

  cfg.batch_size = static_cast<int>(
      as_integer(require_field(root, "batch_size"), "batch_size"));
  if (cfg.batch_size < 1) throw InvalidValue("batch_size: must be >= 1");
  cfg.num_epochs = static_cast<int>(
      as_integer(require_field(root, "num_epochs"), "num_epochs"));
  if (cfg.num_epochs < 1) throw InvalidValue("num_epochs: must be >= 1");
  cfg.num_training_runs = static_cast<int>(as_integer(
      require_field(root, "num_training_runs"), "num_training_runs"));
  if (cfg.num_training_runs < 1)
    throw InvalidValue("num_training_runs: must be >= 1");

  cfg.discriminators = detail::parse_discriminators(
      require_field(root, "discriminator"), cfg.warnings);

  const JsonValue& opt = require_field(root, "optimizer");
  if (!opt.is_object()) throw InvalidValue("optimizer: expected an object");
  const JsonValue& lrs = require_field(opt, "lr");
  if (!lrs.is_array() || lrs.items.empty())
    throw InvalidValue("optimizer.lr: must be a non-empty list");
  for (const auto& e : lrs.items) {
    double lr = as_number(e, "optimizer.lr");
    if (lr <= 0.0) throw InvalidValue("optimizer.lr: must be > 0");
    cfg.generator_lrs.push_back(lr);
  }
  detail::reject_duplicates(cfg.generator_lrs, "optimizer.lr");
  if (const JsonValue* v = opt.find("betas")) {
    if (!v->is_array() || v->items.size() != 2)
      throw InvalidValue("optimizer.betas: expected [beta1, beta2]");
    cfg.generator_beta1 = as_number(v->items[0], "optimizer.betas");
    cfg.generator_beta2 = as_number(v->items[1], "optimizer.betas");
    try {
      validate_betas(cfg.generator_beta1, cfg.generator_beta2);
    } catch (const InvalidValue& e) {
      throw InvalidValue(std::string("optimizer.betas: ") + e.what());
    }
  }
  for (const auto& [key, _] : opt.members)
    if (key != "lr" && key != "betas")
      cfg.warnings.push_back("optimizer: unknown field '" + key + "' ignored");

  if (const JsonValue* v = root.find("budget")) {
    if (!v->is_object()) throw InvalidValue("budget: expected an object");
    if (const JsonValue* w = v->find("max_wall_seconds")) {
      cfg.budget.max_wall_seconds = as_number(*w, "budget.max_wall_seconds");
      if (cfg.budget.max_wall_seconds <= 0.0)
        throw InvalidValue("budget.max_wall_seconds: must be > 0");
    }
    if (const JsonValue* w = v->find("max_circuit_evaluations")) {
      cfg.budget.max_circuit_evaluations =
          as_integer(*w, "budget.max_circuit_evaluations");
      if (cfg.budget.max_circuit_evaluations < 1)
        throw InvalidValue("budget.max_circuit_evaluations: must be >= 1");
    }
    for (const auto& [key, _] : v->members)
      if (key != "max_wall_seconds" && key != "max_circuit_evaluations")
        cfg.warnings.push_back("budget: unknown field '" + key + "' ignored");
  }

  if (const JsonValue* v = root.find("master_seed")) {
    long long s = as_integer(*v, "master_seed");
    if (s < 0) throw InvalidValue("master_seed: must be >= 0");
    cfg.master_seed = static_cast<std::uint64_t>(s);
  }

  return cfg;
}

// Cartesian product over every grid axis; the result is sorted by spec_id so
// downstream scheduling and aggregation see one canonical order.
inline std::vector<ExperimentSpec> expand_grid(const ExperimentConfig& cfg) {
  std::vector<ExperimentSpec> specs;
  for (std::size_t d = 0; d < cfg.distributions.size(); ++d)
    for (const auto& a : cfg.ansaetze)
      for (int k : a.repetitions)
        for (const auto& init : cfg.initializations)
          for (int n : cfg.num_qubits)
            for (const auto& disc : cfg.discriminators)
              for (double lr : cfg.generator_lrs) {
                ExperimentSpec s;
                s.distribution_index = static_cast<int>(d);
                s.ansatz = a.family;
                s.repetitions = k;
                s.init = init;
                s.num_qubits = n;
                s.discriminator = disc;
                s.generator_lr = lr;
                s.beta1 = cfg.generator_beta1;
                s.beta2 = cfg.generator_beta2;
                s.batch_size = cfg.batch_size;
                s.num_epochs = cfg.num_epochs;
                s.num_training_runs = cfg.num_training_runs;
                s.spec_id = make_spec_id(s);
                specs.push_back(std::move(s));
              }
  std::sort(specs.begin(), specs.end(),
            [](const ExperimentSpec& x, const ExperimentSpec& y) {
              return x.spec_id < y.spec_id;
            });
  for (std::size_t i = 0; i + 1 < specs.size(); ++i)
    if (specs[i].spec_id == specs[i + 1].spec_id)
      throw InvalidValue("grid produces duplicate spec_id: " +
                         specs[i].spec_id);
  return specs;
}

// Round-robin partition of the sorted grid; set sizes differ by at most one
// and the assignment depends only on (grid order, n_containers).
inline std::vector<std::vector<std::string>> schedule_static(
    const std::vector<ExperimentSpec>& specs, int n_containers) {
  if (n_containers < 1) throw InvalidValue("n_containers: must be >= 1");
  std::vector<std::vector<std::string>> sets(
      static_cast<std::size_t>(n_containers));
  for (std::size_t i = 0; i < specs.size(); ++i)
    sets[i % static_cast<std::size_t>(n_containers)].push_back(
        specs[i].spec_id);
  return sets;
}

}  // namespace autoqml
