#pragma once

// CSV telemetry/summary emission and the self-contained SVG trend chart.
// All reals print as fixed 6-decimal text so outputs are byte-stable.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bridgeworld/config.hpp"
#include "bridgeworld/experiment.hpp"

namespace bridgeworld {

inline std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

inline constexpr std::string_view kTelemetryHeader =
    "iteration,deaths_total,deaths_starved,deaths_drowned,mean_courage,"
    "mean_generosity,mean_honesty,death_rate,death_rate_plot";

inline constexpr std::string_view kSummaryHeader =
    "condition,repeats,mean_death_rate,sd_death_rate,base_seed";

inline void write_telemetry_csv(std::ostream& out,
                                std::span<const TelemetryRow> rows) {
  if (rows.empty()) throw std::invalid_argument("telemetry: empty row series");
  out << kTelemetryHeader << '\n';
  for (const TelemetryRow& row : rows) {
    out << row.iteration << ',' << row.deaths_total << ',' << row.deaths_starved
        << ',' << row.deaths_drowned << ',' << format_real(row.mean_courage) << ','
        << format_real(row.mean_generosity) << ',' << format_real(row.mean_honesty)
        << ',' << format_real(row.death_rate) << ','
        << format_real(row.death_rate_plot) << '\n';
  }
}

inline void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  if (rows.empty()) throw std::invalid_argument("summary: empty row series");
  out << kSummaryHeader << '\n';
  for (const SummaryRow& row : rows) {
    out << condition_name(row.condition) << ',' << row.repeats << ','
        << format_real(row.mean_death_rate) << ',' << format_real(row.sd_death_rate)
        << ',' << row.base_seed << '\n';
  }
}

namespace detail {

template <typename Rows, typename Writer>
void write_file(const std::string& path, const Rows& rows, Writer writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  writer(out, rows);
  out.flush();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace detail

inline void write_telemetry_csv(const std::string& path,
                                std::span<const TelemetryRow> rows) {
  detail::write_file(path, rows, [](std::ostream& out, auto r) {
    write_telemetry_csv(out, r);
  });
}

inline void write_summary_csv(const std::string& path,
                              std::span<const SummaryRow> rows) {
  detail::write_file(path, rows, [](std::ostream& out, auto r) {
    write_summary_csv(out, r);
  });
}

// Line chart of the three population-mean virtues plus the scaled death rate
// over iteration. The y-axis is fixed to [-1, 1]; series are clipped to the
// plot box rather than rescaled.
inline void render_svg(std::ostream& out, std::span<const TelemetryRow> rows) {
  if (rows.size() < 2) throw std::invalid_argument("svg: needs at least 2 rows");

  constexpr double kWidth = 900.0, kHeight = 520.0;
  constexpr double kLeft = 60.0, kRight = 870.0, kTop = 40.0, kBottom = 460.0;
  const double x_min = rows.front().iteration;
  const double x_max = rows.back().iteration;
  const auto x_of = [&](double iteration) {
    return kLeft + (kRight - kLeft) * (iteration - x_min) / (x_max - x_min);
  };
  const auto y_of = [&](double value) {
    return kBottom - (kBottom - kTop) * (value - (-1.0)) / 2.0;
  };
  const auto coord = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  struct Series {
    const char* label;
    const char* color;
    double TelemetryRow::* field;
  };
  constexpr Series kSeries[] = {
      {"mean_courage", "#1f77b4", &TelemetryRow::mean_courage},
      {"mean_generosity", "#2ca02c", &TelemetryRow::mean_generosity},
      {"mean_honesty", "#9467bd", &TelemetryRow::mean_honesty},
      {"death_rate_plot", "#d62728", &TelemetryRow::death_rate_plot},
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<clipPath id=\"plot\"><rect x=\"" << kLeft << "\" y=\"" << kTop
      << "\" width=\"" << kRight - kLeft << "\" height=\"" << kBottom - kTop
      << "\"/></clipPath>\n";

  // axes and y gridlines at -1, -0.5, 0, 0.5, 1
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << kRight - kLeft << "\" height=\"" << kBottom - kTop
      << "\" fill=\"none\" stroke=\"#333333\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double value = -1.0 + 0.5 * i;
    const double y = y_of(value);
    out << "<line x1=\"" << kLeft << "\" y1=\"" << coord(y) << "\" x2=\"" << kRight
        << "\" y2=\"" << coord(y) << "\" stroke=\"#dddddd\"/>\n";
    char label[16];
    std::snprintf(label, sizeof label, "%.1f", value);
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << coord(y + 4)
        << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">"
        << label << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double iteration = x_min + (x_max - x_min) * i / 4.0;
    const double x = x_of(iteration);
    out << "<text x=\"" << coord(x) << "\" y=\"" << kBottom + 18
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
        << static_cast<long long>(iteration) << "</text>\n";
  }
  out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 40
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">"
         "iteration</text>\n";

  out << "<g clip-path=\"url(#plot)\">\n";
  for (const Series& series : kSeries) {
    out << "<polyline fill=\"none\" stroke=\"" << series.color
        << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const TelemetryRow& row : rows) {
      if (!first) out << ' ';
      first = false;
      out << coord(x_of(row.iteration)) << ',' << coord(y_of(row.*series.field));
    }
    out << "\"/>\n";
  }
  out << "</g>\n";

  // legend
  double legend_x = kLeft + 10;
  for (const Series& series : kSeries) {
    out << "<line x1=\"" << coord(legend_x) << "\" y1=\"" << kTop - 16 << "\" x2=\""
        << coord(legend_x + 22) << "\" y2=\"" << kTop - 16 << "\" stroke=\""
        << series.color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << coord(legend_x + 28) << "\" y=\"" << kTop - 12
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << series.label
        << "</text>\n";
    legend_x += 28 + 13 + 7.2 * static_cast<double>(std::string(series.label).size());
  }
  out << "</svg>\n";
}

inline void render_svg(const std::string& path, std::span<const TelemetryRow> rows) {
  detail::write_file(path, rows, [](std::ostream& out, auto r) {
    render_svg(out, r);
  });
}

}  // namespace bridgeworld
