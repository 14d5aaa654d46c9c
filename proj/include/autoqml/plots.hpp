#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "autoqml/data.hpp"
#include "autoqml/entanglement.hpp"
#include "autoqml/errors.hpp"
#include "autoqml/experiment.hpp"
#include "autoqml/run_result.hpp"
#include "autoqml/serialization.hpp"

namespace autoqml {

inline const std::vector<std::string>& known_visualizations() {
  static const std::vector<std::string> names = {
      "entropy_curve", "entanglement_histogram", "distribution_overlay"};
  return names;
}

namespace detail {

inline std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline const char* series_color(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                  "#d62728", "#9467bd", "#8c564b",
                                  "#e377c2", "#17becf"};
  return palette[i % (sizeof palette / sizeof palette[0])];
}

// Fixed-size canvas with a margin for axes; callers work in data space and
// use px()/py() to land in the plot rectangle.
class SvgCanvas {
 public:
  static constexpr double kWidth = 640.0, kHeight = 400.0;
  static constexpr double kLeft = 60.0, kRight = 20.0, kTop = 20.0,
                          kBottom = 50.0;

  SvgCanvas(double x_min, double x_max, double y_min, double y_max)
      : x_min_(x_min), x_max_(x_max > x_min ? x_max : x_min + 1.0),
        y_min_(y_min), y_max_(y_max > y_min ? y_max : y_min + 1.0) {
    body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
             fmt6(kWidth) + " " + fmt6(kHeight) + "\">\n";
    body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  double px(double x) const {
    return kLeft + (x - x_min_) / (x_max_ - x_min_) *
                       (kWidth - kLeft - kRight);
  }
  double py(double y) const {
    return kHeight - kBottom -
           (y - y_min_) / (y_max_ - y_min_) * (kHeight - kTop - kBottom);
  }

  void axes(const std::string& x_label, const std::string& y_label) {
    line(kLeft, kTop, kLeft, kHeight - kBottom, "#000000", 1.0);
    line(kLeft, kHeight - kBottom, kWidth - kRight, kHeight - kBottom,
         "#000000", 1.0);
    text(kWidth / 2.0, kHeight - 12.0, x_label, 13, "middle");
    body_ += "<text x=\"16\" y=\"" + fmt6(kHeight / 2.0) +
             "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
             "16 " +
             fmt6(kHeight / 2.0) + ")\" font-family=\"sans-serif\">" +
             escape(y_label) + "</text>\n";
    // min/max ticks keep the scale readable without a full tick engine
    text(kLeft, kHeight - kBottom + 16.0, fmt6(x_min_), 11, "middle");
    text(kWidth - kRight, kHeight - kBottom + 16.0, fmt6(x_max_), 11, "middle");
    text(kLeft - 6.0, kHeight - kBottom, fmt6(y_min_), 11, "end");
    text(kLeft - 6.0, kTop + 8.0, fmt6(y_max_), 11, "end");
  }

  void line(double x1, double y1, double x2, double y2,
            const std::string& color, double width) {
    body_ += "<line x1=\"" + fmt6(x1) + "\" y1=\"" + fmt6(y1) + "\" x2=\"" +
             fmt6(x2) + "\" y2=\"" + fmt6(y2) + "\" stroke=\"" + color +
             "\" stroke-width=\"" + fmt6(width) + "\"/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts,
                const std::string& color) {
    body_ += "<polyline fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : pts)
      body_ += fmt6(px(x)) + "," + fmt6(py(y)) + " ";
    body_ += "\"/>\n";
  }

  void rect(double x, double y, double w, double h, const std::string& fill) {
    body_ += "<rect x=\"" + fmt6(x) + "\" y=\"" + fmt6(y) + "\" width=\"" +
             fmt6(w) + "\" height=\"" + fmt6(h) + "\" fill=\"" + fill +
             "\"/>\n";
  }

  void text(double x, double y, const std::string& s, int size,
            const std::string& anchor) {
    body_ += "<text x=\"" + fmt6(x) + "\" y=\"" + fmt6(y) + "\" font-size=\"" +
             std::to_string(size) + "\" text-anchor=\"" + anchor +
             "\" font-family=\"sans-serif\">" + escape(s) + "</text>\n";
  }

  void legend_entry(std::size_t slot, const std::string& color,
                    const std::string& label) {
    const double y = kTop + 14.0 * static_cast<double>(slot);
    rect(kWidth - kRight - 160.0, y, 10.0, 10.0, color);
    text(kWidth - kRight - 146.0, y + 9.0, label, 11, "start");
  }

  std::string finish() && { return std::move(body_) + "</svg>\n"; }

 private:
  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '&') out += "&amp;";
      else if (c == '<') out += "&lt;";
      else if (c == '>') out += "&gt;";
      else out += c;
    }
    return out;
  }

  double x_min_, x_max_, y_min_, y_max_;
  std::string body_;
};

inline std::string series_label(const ExperimentSpec& s) {
  return std::string(init_name(s.init.kind)) + " " + family_name(s.ansatz) +
         " k=" + std::to_string(s.repetitions) + " N=" +
         std::to_string(s.num_qubits);
}

// Mean relative-entropy trajectory per spec over its successful runs.
inline std::vector<std::pair<const ExperimentSpec*, std::vector<double>>>
entropy_series(const std::vector<ExperimentSpec>& grid,
               const std::vector<RunResult>& runs) {
  std::vector<std::pair<const ExperimentSpec*, std::vector<double>>> series;
  for (const auto& spec : grid) {
    std::vector<double> sum;
    std::vector<int> count;
    for (const auto& r : runs) {
      if (r.spec_id != spec.spec_id || !r.ok) continue;
      if (r.entropy_curve.size() > sum.size()) {
        sum.resize(r.entropy_curve.size(), 0.0);
        count.resize(r.entropy_curve.size(), 0);
      }
      for (std::size_t e = 0; e < r.entropy_curve.size(); ++e) {
        sum[e] += r.entropy_curve[e];
        count[e] += 1;
      }
    }
    if (sum.empty()) continue;
    std::vector<double> mean(sum.size());
    for (std::size_t e = 0; e < sum.size(); ++e) mean[e] = sum[e] / count[e];
    series.emplace_back(&spec, std::move(mean));
  }
  return series;
}

}  // namespace detail

// ------------------------------------------------------------------
// entropy_curve: relative entropy per epoch, one series per spec
// ------------------------------------------------------------------

inline std::string entropy_curve_csv(const std::vector<ExperimentSpec>& grid,
                                     const std::vector<RunResult>& runs) {
  std::string out = "spec_id,initialization,ansatz,k,epoch,mean_re\n";
  for (const auto& [spec, mean] : detail::entropy_series(grid, runs))
    for (std::size_t e = 0; e < mean.size(); ++e)
      out += spec->spec_id + "," + init_name(spec->init.kind) + "," +
             family_name(spec->ansatz) + "," +
             std::to_string(spec->repetitions) + "," + std::to_string(e) +
             "," + format_double(mean[e]) + "\n";
  return out;
}

inline std::string entropy_curve_svg(const std::vector<ExperimentSpec>& grid,
                                     const std::vector<RunResult>& runs) {
  const auto series = detail::entropy_series(grid, runs);
  double x_max = 1.0, y_max = 0.0;
  for (const auto& [spec, mean] : series) {
    x_max = std::max(x_max, static_cast<double>(mean.size() - 1));
    for (double v : mean) y_max = std::max(y_max, v);
  }
  detail::SvgCanvas canvas(0.0, x_max, 0.0, y_max > 0.0 ? y_max * 1.05 : 1.0);
  canvas.axes("epoch", "relative entropy");
  std::size_t slot = 0;
  for (const auto& [spec, mean] : series) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t e = 0; e < mean.size(); ++e)
      pts.emplace_back(static_cast<double>(e), mean[e]);
    const std::string color = detail::series_color(slot);
    canvas.polyline(pts, color);
    canvas.legend_entry(slot, color, detail::series_label(*spec));
    ++slot;
  }
  return std::move(canvas).finish();
}

// ------------------------------------------------------------------
// entanglement_histogram: entangling capability per distinct ansatz shape
// ------------------------------------------------------------------

struct EntanglementBar {
  std::string family;
  int num_qubits = 0;
  int repetitions = 0;
  double capability = 0.0;
};

// Single-qubit shapes are skipped (the measure needs at least two qubits).
// Each bar gets its own named substream so the estimate for a shape does not
// depend on which other shapes are present.
inline std::vector<EntanglementBar> entanglement_histogram_data(
    const std::vector<ExperimentSpec>& grid, int n_param_samples,
    std::uint64_t seed) {
  std::map<std::tuple<std::string, int, int>, bool> shapes;
  for (const auto& s : grid)
    if (s.num_qubits >= 2)
      shapes[{family_name(s.ansatz), s.num_qubits, s.repetitions}] = true;
  std::vector<EntanglementBar> bars;
  for (const auto& [shape, _] : shapes) {
    const auto& [family, n, k] = shape;
    const CircuitTemplate t = build_ansatz({parse_family(family), n, k});
    Rng rng = Rng(seed).substream("entanglement-" + family + "-n" +
                                  std::to_string(n) + "-k" +
                                  std::to_string(k));
    bars.push_back(
        {family, n, k, entangling_capability(t, n_param_samples, rng)});
  }
  return bars;
}

inline std::string entanglement_histogram_csv(
    const std::vector<EntanglementBar>& bars) {
  std::string out = "ansatz,num_qubits,k,entangling_capability\n";
  for (const auto& b : bars)
    out += b.family + "," + std::to_string(b.num_qubits) + "," +
           std::to_string(b.repetitions) + "," + format_double(b.capability) +
           "\n";
  return out;
}

inline std::string entanglement_histogram_svg(
    const std::vector<EntanglementBar>& bars) {
  const double n = static_cast<double>(bars.empty() ? 1 : bars.size());
  detail::SvgCanvas canvas(0.0, n, 0.0, 1.0);
  canvas.axes("ansatz shape", "entangling capability");
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const double x0 = canvas.px(static_cast<double>(i) + 0.15);
    const double x1 = canvas.px(static_cast<double>(i) + 0.85);
    const double y0 = canvas.py(bars[i].capability);
    const double y1 = canvas.py(0.0);
    canvas.rect(x0, y0, x1 - x0, y1 - y0, detail::series_color(i));
    canvas.text((x0 + x1) / 2.0, y1 + 14.0,
                bars[i].family + " N" + std::to_string(bars[i].num_qubits) +
                    " k" + std::to_string(bars[i].repetitions),
                9, "middle");
    canvas.text((x0 + x1) / 2.0, y0 - 4.0, detail::fmt6(bars[i].capability),
                9, "middle");
  }
  return std::move(canvas).finish();
}

// ------------------------------------------------------------------
// distribution_overlay: target histogram vs best-model histogram
// ------------------------------------------------------------------

inline std::string distribution_overlay_csv(
    const TargetDistribution& target, const std::vector<double>& model_probs) {
  if (model_probs.size() != target.num_bins())
    throw BinMismatch("distribution_overlay: bin count mismatch");
  const double w =
      (target.b - target.a) / static_cast<double>(target.num_bins());
  std::string out = "bin,lo,hi,target_p,model_p\n";
  for (std::size_t i = 0; i < target.num_bins(); ++i) {
    const double lo = target.a + w * static_cast<double>(i);
    out += std::to_string(i) + "," + format_double(lo) + "," +
           format_double(lo + w) + "," +
           format_double(target.bin_probabilities[i]) + "," +
           format_double(model_probs[i]) + "\n";
  }
  return out;
}

inline std::string distribution_overlay_svg(
    const TargetDistribution& target, const std::vector<double>& model_probs) {
  if (model_probs.size() != target.num_bins())
    throw BinMismatch("distribution_overlay: bin count mismatch");
  double y_max = 0.0;
  for (double p : target.bin_probabilities) y_max = std::max(y_max, p);
  for (double p : model_probs) y_max = std::max(y_max, p);
  const double n = static_cast<double>(target.num_bins());
  detail::SvgCanvas canvas(0.0, n, 0.0, y_max > 0.0 ? y_max * 1.1 : 1.0);
  canvas.axes("bin", "probability");
  for (std::size_t i = 0; i < target.num_bins(); ++i) {
    const double base = static_cast<double>(i);
    const double x0 = canvas.px(base + 0.10), x1 = canvas.px(base + 0.50);
    const double x2 = canvas.px(base + 0.90);
    canvas.rect(x0, canvas.py(target.bin_probabilities[i]), x1 - x0,
                canvas.py(0.0) - canvas.py(target.bin_probabilities[i]),
                "#9ecae1");
    canvas.rect(x1, canvas.py(model_probs[i]), x2 - x1,
                canvas.py(0.0) - canvas.py(model_probs[i]), "#08519c");
    canvas.text((x0 + x2) / 2.0, canvas.py(0.0) + 14.0, std::to_string(i), 9,
                "middle");
  }
  canvas.legend_entry(0, "#9ecae1", "target");
  canvas.legend_entry(1, "#08519c", "best model");
  return std::move(canvas).finish();
}

}  // namespace autoqml
