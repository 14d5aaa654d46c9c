#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "autoqml/data.hpp"
#include "autoqml/rng.hpp"

// Emits a single-column CSV of the synthetic bimodal price distribution,
// the stand-in target used by the sample configs. Point a config's
// data_path at a real price CSV to train on actual data instead.
int main(int argc, char** argv) {
  CLI::App app{"write a synthetic bimodal price dataset as CSV"};
  std::string out_path = "prices.csv";
  int rows = 20000;
  unsigned long long seed = 7;
  app.add_option("--out", out_path, "output CSV path");
  app.add_option("--rows", rows, "number of samples")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  autoqml::Rng rng(seed);
  const auto samples = autoqml::synthetic_bimodal_samples(rows, rng);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << "\n";
    return 1;
  }
  out << "price\n";
  char buf[64];
  for (double v : samples) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    out << buf;
  }
  if (!out.flush()) {
    std::cerr << "error: short write to " << out_path << "\n";
    return 1;
  }
  std::cerr << "wrote " << samples.size() << " rows to " << out_path << "\n";
  return 0;
}
