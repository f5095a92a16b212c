// Copyright 2026 The unibid Authors.
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

#include "unibid/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "unibid/error.h"

namespace unibid {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr int kFitPoints = 40;

std::string Num(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, x);
  return buf;
}

void CheckNonEmpty(std::span<const RegretTrace> traces) {
  if (traces.empty()) throw Error(ErrorCode::kEmptyTrace, "no traces");
  for (const RegretTrace& tr : traces) {
    if (tr.rounds.empty()) {
      throw Error(ErrorCode::kEmptyTrace,
                  "run " + std::to_string(tr.run) + " has no rounds");
    }
  }
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

struct Band {
  std::vector<double> mean, low, high;
};

Band Aggregate(std::span<const RegretTrace> traces) {
  std::size_t horizon = traces[0].rounds.size();
  for (const RegretTrace& tr : traces) {
    horizon = std::min(horizon, tr.rounds.size());
  }
  Band band;
  band.mean.assign(horizon, 0.0);
  band.low.assign(horizon, std::numeric_limits<double>::infinity());
  band.high.assign(horizon, -std::numeric_limits<double>::infinity());
  for (const RegretTrace& tr : traces) {
    for (std::size_t t = 0; t < horizon; ++t) {
      const double r = tr.rounds[t].cum_expected_regret;
      band.mean[t] += r / traces.size();
      band.low[t] = std::min(band.low[t], r);
      band.high[t] = std::max(band.high[t], r);
    }
  }
  return band;
}

// Indices of roughly log-spaced rounds, always including the last.
std::vector<std::size_t> LogSpaced(std::size_t horizon, int points) {
  std::vector<std::size_t> idx;
  const double top = std::log(static_cast<double>(horizon));
  for (int i = 0; i < points; ++i) {
    const double t = std::exp(top * i / (points - 1));
    const auto k = static_cast<std::size_t>(std::llround(t)) - 1;
    if (idx.empty() || k > idx.back()) idx.push_back(std::min(k, horizon - 1));
  }
  return idx;
}

}  // namespace

std::string FormatCsv(std::span<const RegretTrace> traces) {
  CheckNonEmpty(traces);
  std::string out = std::string(kCsvHeader) + "\n";
  for (const RegretTrace& tr : traces) {
    for (std::size_t t = 0; t < tr.rounds.size(); ++t) {
      const RoundRecord& r = tr.rounds[t];
      char line[512];
      std::snprintf(line, sizeof(line),
                    "%d,%zu,%.12g,%.12g,%.12g,%.12g,%.12g,%d\n", tr.run, t + 1,
                    r.realized_utility, r.expected_utility,
                    r.cum_expected_regret, r.discretization_bound, r.price,
                    r.allocation);
      out += line;
    }
  }
  return out;
}

void WriteCsv(std::span<const RegretTrace> traces, const std::string& path) {
  WriteFile(path, FormatCsv(traces));
}

double FitLogLogSlope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kWrongLength, "x and y differ in length");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  const double denom = n * sxx - sx * sx;
  if (n < 2 || denom <= 0.0) {
    throw Error(ErrorCode::kEmptyTrace,
                "need two distinct positive points to fit a slope");
  }
  return (n * sxy - sx * sy) / denom;
}

std::string FormatSvg(std::span<const RegretTrace> traces, PlotScale scale) {
  CheckNonEmpty(traces);
  const Band band = Aggregate(traces);
  const std::size_t horizon = band.mean.size();
  const bool log_scale = scale == PlotScale::kLogLog;

  // Points that can be drawn on the chosen scale.
  std::vector<std::size_t> shown;
  for (std::size_t t = 0; t < horizon; ++t) {
    if (!log_scale || (band.mean[t] > 0.0 && band.low[t] > 0.0)) {
      shown.push_back(t);
    }
  }
  auto fx = [&](std::size_t t) {
    return log_scale ? std::log10(static_cast<double>(t + 1))
                     : static_cast<double>(t + 1);
  };
  auto fy = [&](double v) { return log_scale ? std::log10(v) : v; };

  double x0 = fx(0), x1 = fx(horizon - 1);
  double y0 = std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();
  for (std::size_t t : shown) {
    y0 = std::min(y0, fy(band.low[t]));
    y1 = std::max(y1, fy(band.high[t]));
  }
  if (shown.empty()) y0 = 0.0, y1 = 1.0;
  if (!log_scale) y0 = std::min(y0, 0.0);
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) y1 = y0 + 1.0;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * ph; };
  auto point = [&](double x, double y) {
    return Num("%.2f", px(x)) + "," + Num("%.2f", py(y)) + " ";
  };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
      "height=\"500\" viewBox=\"0 0 800 500\" font-family=\"sans-serif\" "
      "font-size=\"12\">\n"
      "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + Num("%.0f", kLeft) + "\" y=\"" + Num("%.0f", kTop) +
         "\" width=\"" + Num("%.0f", pw) + "\" height=\"" + Num("%.0f", ph) +
         "\" fill=\"none\" stroke=\"#444\"/>\n";

  // Axis ticks at five evenly spaced positions.
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    const double xl = log_scale ? std::pow(10.0, xv) : xv;
    const double yl = log_scale ? std::pow(10.0, yv) : yv;
    svg += "<text x=\"" + Num("%.2f", px(xv)) + "\" y=\"" +
           Num("%.2f", kTop + ph + 18) + "\" text-anchor=\"middle\">" +
           Num("%.4g", xl) + "</text>\n";
    svg += "<text x=\"" + Num("%.2f", kLeft - 6) + "\" y=\"" +
           Num("%.2f", py(yv) + 4) + "\" text-anchor=\"end\">" +
           Num("%.4g", yl) + "</text>\n";
  }
  svg += "<text x=\"" + Num("%.2f", kLeft + pw / 2) + "\" y=\"" +
         Num("%.2f", kHeight - 15) +
         "\" text-anchor=\"middle\">round t</text>\n";
  svg += "<text x=\"20\" y=\"" + Num("%.2f", kTop + ph / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         Num("%.2f", kTop + ph / 2) +
         ")\">cumulative expected regret</text>\n";

  if (!shown.empty()) {
    std::string band_points;
    for (std::size_t t : shown) band_points += point(fx(t), fy(band.high[t]));
    for (auto it = shown.rbegin(); it != shown.rend(); ++it) {
      band_points += point(fx(*it), fy(band.low[*it]));
    }
    svg += "<polygon points=\"" + band_points +
           "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    std::string mean_points;
    for (std::size_t t : shown) mean_points += point(fx(t), fy(band.mean[t]));
    svg += "<polyline points=\"" + mean_points +
           "\" fill=\"none\" stroke=\"#08519c\" stroke-width=\"1.5\"/>\n";
  }

  std::string title = std::to_string(traces.size()) + " run(s), mean with min-max band";
  if (log_scale) {
    std::vector<double> xs, ys;
    for (std::size_t t : LogSpaced(horizon, kFitPoints)) {
      xs.push_back(static_cast<double>(t + 1));
      ys.push_back(band.mean[t]);
    }
    try {
      title += ", fitted slope " + Num("%.3f", FitLogLogSlope(xs, ys));
    } catch (const Error&) {
      title += ", slope unavailable";
    }
  }
  svg += "<text x=\"" + Num("%.2f", kLeft) + "\" y=\"24\">" + title +
         "</text>\n</svg>\n";
  return svg;
}

void WriteSvg(std::span<const RegretTrace> traces, const std::string& path,
              PlotScale scale) {
  WriteFile(path, FormatSvg(traces, scale));
}

}  // namespace unibid
