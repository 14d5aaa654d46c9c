#pragma once

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "autoqml/errors.hpp"
#include "autoqml/rng.hpp"
#include "autoqml/statevector.hpp"

namespace autoqml {

// Binned view of a sample set over its full value range, with the raw
// samples retained for resampling. Immutable once built.
struct TargetDistribution {
  double a = 0.0, b = 0.0;
  int num_qubits = 0;
  std::vector<double> bin_probabilities;
  std::vector<double> raw_samples;

  std::size_t num_bins() const { return bin_probabilities.size(); }
};

// Parses a single-column numeric CSV (LF or CRLF, optional one-line header).
inline std::vector<double> load_samples(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  int line_no = 0;
  bool saw_any_line = false;
  while (pos <= text.size()) {
    if (pos == text.size() && out.empty() && !saw_any_line) break;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const bool last = eol >= text.size();
    pos = eol + 1;
    ++line_no;
    saw_any_line = true;
    if (line.empty()) {
      if (last) break;  // trailing newline
      throw MalformedRow("empty row at line " + std::to_string(line_no));
    }
    const char* begin = line.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    const bool parsed = end != begin && end && *end == '\0';
    if (!parsed) {
      if (line_no == 1) continue;  // header
      throw MalformedRow("malformed row at line " + std::to_string(line_no));
    }
    if (!std::isfinite(v))
      throw NonFiniteValue("non-finite value at line " +
                           std::to_string(line_no));
    out.push_back(v);
    if (last) break;
  }
  if (out.empty()) throw EmptyFile("no data rows");
  return out;
}

// Equal-width histogram over [min, max] with 2^N bins; bin i covers
// [a + i*w, a + (i+1)*w), last bin closed at b.
inline TargetDistribution discretize(const std::vector<double>& samples,
                                     int N, const std::string& mode) {
  if (mode != "optimal")
    throw InvalidValue("unknown discretization mode: " + mode);
  StateVector::check_qubits(N);
  if (samples.empty()) throw EmptyInput("discretize: no samples");
  double a = samples.front(), b = samples.front();
  for (double v : samples) {
    a = std::min(a, v);
    b = std::max(b, v);
  }
  if (a == b) throw DegenerateData("all sample values equal");

  TargetDistribution t;
  t.a = a;
  t.b = b;
  t.num_qubits = N;
  t.raw_samples = samples;
  const std::size_t nbins = std::size_t{1} << N;
  const double w = (b - a) / static_cast<double>(nbins);
  std::vector<long long> counts(nbins, 0);
  for (double v : samples) {
    auto idx = static_cast<long long>((v - a) / w);
    if (idx < 0) idx = 0;
    if (idx >= static_cast<long long>(nbins))
      idx = static_cast<long long>(nbins) - 1;
    ++counts[static_cast<std::size_t>(idx)];
  }
  t.bin_probabilities.resize(nbins);
  for (std::size_t i = 0; i < nbins; ++i)
    t.bin_probabilities[i] =
        static_cast<double>(counts[i]) / static_cast<double>(samples.size());
  return t;
}

// n draws with replacement from the raw samples.
inline std::vector<double> resample(const TargetDistribution& target, int n,
                                    Rng& rng) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (auto& v : out)
    v = target.raw_samples[rng.uniform_int(target.raw_samples.size())];
  return out;
}

// Bimodal price-like synthetic distribution: a uniform floor over [8, 72]
// plus two truncated Gaussian modes. Stands in for intraday electricity
// price data; substitute a real single-column CSV to train on actual prices.
inline std::vector<double> synthetic_bimodal_samples(int n, Rng& rng) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  constexpr double lo = 8.0, hi = 72.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    double v;
    if (u < 0.30) {
      v = rng.uniform(lo, hi);
    } else {
      const double mean = u < 0.70 ? 26.0 : 56.0;
      const double sd = u < 0.70 ? 8.0 : 7.0;
      do {
        v = rng.normal(mean, sd);
      } while (v < lo || v > hi);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace autoqml
