#include "bench/plot.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bench {

namespace {

// Figure palette in legend order, matching the reference charts.
const char* kPalette[] = {"#0000ff", "#00bfff", "#000000", "#808080",
                          "#d3d3d3", "#d62728", "#2ca02c", "#ff7f0e"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

struct WideData {
  std::vector<std::string> labels;          // rule columns, without T
  std::vector<double> times;
  std::vector<std::vector<double>> series;  // one vector per label
};

WideData parse_wide(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("plot: cannot read '" + path + "'");

  WideData data;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::stringstream row(line);
    if (line_no == 1) {
      std::string name;
      while (row >> name) data.labels.push_back(name);
      if (data.labels.size() < 2 || data.labels.front() != "T")
        throw std::invalid_argument(path + ":1: header must be 'T' plus at least one column");
      data.labels.erase(data.labels.begin());
      data.series.resize(data.labels.size());
      continue;
    }
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    double t;
    if (!(row >> t))
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": malformed time value");
    data.times.push_back(t);
    for (std::size_t c = 0; c < data.labels.size(); ++c) {
      double v;
      if (!(row >> v))
        throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": expected " +
                                    std::to_string(data.labels.size() + 1) + " numeric fields");
      data.series[c].push_back(v);
    }
    std::string extra;
    if (row >> extra)
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": trailing field '" +
                                  extra + "'");
  }
  if (line_no == 0) throw std::invalid_argument(path + ":1: file is empty");
  if (data.times.empty())
    throw std::invalid_argument(path + ":2: no data rows");
  return data;
}

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[40];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

}  // namespace

void emit_plot(const std::string& data_path, const std::string& output_path,
               const std::string& title) {
  const WideData data = parse_wide(data_path);

  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  for (double t : data.times) {
    x_min = std::min(x_min, t);
    x_max = std::max(x_max, t);
  }
  double y_min = std::numeric_limits<double>::infinity(), y_max = -y_min;
  for (const auto& column : data.series)
    for (double v : column)
      if (std::isfinite(v)) {
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
      }
  if (!std::isfinite(y_min)) throw std::invalid_argument(data_path + ": no finite data values");
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) {
    const double pad = std::max(1e-12, std::abs(y_min) * 0.1 + 0.1);
    y_min -= pad;
    y_max += pad;
  }

  constexpr double kWidth = 900, kHeight = 560;
  constexpr double kLeft = 90, kRight = 760, kTop = 60, kBottom = 500;
  const auto sx = [&](double t) { return kLeft + (t - x_min) / (x_max - x_min) * (kRight - kLeft); };
  const auto sy = [&](double v) {
    return kBottom - (v - y_min) / (y_max - y_min) * (kBottom - kTop);
  };

  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("plot: cannot write '" + output_path + "'");

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  const std::string chart_title =
      title.empty() ? std::filesystem::path(data_path).stem().string() : title;
  out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"32\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"18\">" << chart_title << "</text>\n";

  // axes
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\""
      << kBottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kBottom << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double t = x_min + (x_max - x_min) * i / 4.0;
    const double px = sx(t);
    out << "<line x1=\"" << fmt(px) << "\" y1=\"" << kBottom << "\" x2=\"" << fmt(px)
        << "\" y2=\"" << kBottom + 6 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(px) << "\" y=\"" << kBottom + 22
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << fmt(t, "%.4g") << "</text>\n";

    const double v = y_min + (y_max - y_min) * i / 4.0;
    const double py = sy(v);
    out << "<line x1=\"" << kLeft - 6 << "\" y1=\"" << fmt(py) << "\" x2=\"" << kLeft
        << "\" y2=\"" << fmt(py) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kLeft - 10 << "\" y=\"" << fmt(py + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << fmt(v, "%.4g")
        << "</text>\n";
  }
  out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 45
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">Time (s)</text>\n";
  out << "<text x=\"24\" y=\"" << (kTop + kBottom) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
      << "transform=\"rotate(-90 24 " << (kTop + kBottom) / 2 << ")\">Expected Utility</text>\n";

  // curves; non-finite values split the polyline
  for (std::size_t c = 0; c < data.series.size(); ++c) {
    const char* color = kPalette[c % kPaletteSize];
    std::string points;
    const auto flush = [&] {
      if (!points.empty()) {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
            << points << "\"/>\n";
        points.clear();
      }
    };
    for (std::size_t i = 0; i < data.times.size(); ++i) {
      const double v = data.series[c][i];
      if (!std::isfinite(v)) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += fmt(sx(data.times[i])) + "," + fmt(sy(v));
    }
    flush();
  }

  // legend, outer right
  for (std::size_t c = 0; c < data.labels.size(); ++c) {
    const double y = kTop + 10 + 22 * static_cast<double>(c);
    out << "<line x1=\"" << kRight + 18 << "\" y1=\"" << fmt(y) << "\" x2=\"" << kRight + 48
        << "\" y2=\"" << fmt(y) << "\" stroke=\"" << kPalette[c % kPaletteSize]
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kRight + 54 << "\" y=\"" << fmt(y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << data.labels[c] << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace bench
