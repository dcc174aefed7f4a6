#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "facelim/error.hpp"
#include "facelim/experiments.hpp"

namespace facelim {

namespace {

constexpr double kWidth = 860, kHeight = 520;
constexpr double kLeft = 72, kRight = 28, kTop = 40, kBottom = 64;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Series {
    std::string name;
    std::string color;
    std::vector<std::pair<double, double>> points;  // (x, y), x ascending
};

// Minimal line chart: light grid, per-value x ticks, five y ticks, one
// polyline with dot markers per series, legend when more than one series.
void write_chart(const std::string& path, const std::vector<Series>& series,
                 const std::string& x_label, const std::string& y_label) {
    double x_min = 1e300, x_max = -1e300, y_max = 0;
    for (const Series& s : series) {
        for (auto [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max <= x_min) x_max = x_min + 1;
    if (y_max <= 0) y_max = 1;
    y_max *= 1.08;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) { return kTop + plot_h - y / y_max * plot_h; };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(kWidth) << ' '
        << fmt(kHeight) << "\" font-family=\"sans-serif\" font-size=\"13\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // y grid and ticks
    for (int i = 0; i <= 5; ++i) {
        const double y = y_max * i / 5;
        out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(sy(y)) << "\" x2=\""
            << fmt(kWidth - kRight) << "\" y2=\"" << fmt(sy(y))
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n"
            << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(sy(y) + 4)
            << "\" text-anchor=\"end\">" << fmt(y) << "</text>\n";
    }
    // x ticks at the data points of the first series
    for (auto [x, y] : series.front().points) {
        out << "<line x1=\"" << fmt(sx(x)) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\""
            << fmt(sx(x)) << "\" y2=\"" << fmt(kTop + plot_h + 5)
            << "\" stroke=\"#444444\"/>\n"
            << "<text x=\"" << fmt(sx(x)) << "\" y=\"" << fmt(kTop + plot_h + 20)
            << "\" text-anchor=\"middle\">" << fmt(x) << "</text>\n";
    }
    // axes
    out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft)
        << "\" y2=\"" << fmt(kTop + plot_h) << "\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n"
        << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\""
        << fmt(kWidth - kRight) << "\" y2=\"" << fmt(kTop + plot_h)
        << "\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n"
        << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 16)
        << "\" text-anchor=\"middle\">" << x_label << "</text>\n"
        << "<text x=\"18\" y=\"" << fmt(kTop + plot_h / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << fmt(kTop + plot_h / 2)
        << ")\">" << y_label << "</text>\n";

    for (const Series& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\" points=\"";
        for (auto [x, y] : s.points) out << fmt(sx(x)) << ',' << fmt(sy(y)) << ' ';
        out << "\"/>\n";
        for (auto [x, y] : s.points) {
            out << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y))
                << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
        }
    }

    if (series.size() > 1) {
        const double lx = kWidth - kRight - 200, ly = kTop + 10;
        out << "<rect x=\"" << fmt(lx - 10) << "\" y=\"" << fmt(ly - 14) << "\" width=\"210\" height=\""
            << fmt(series.size() * 20 + 8.0) << "\" fill=\"white\" stroke=\"#bbbbbb\"/>\n";
        for (std::size_t i = 0; i < series.size(); ++i) {
            const double y = ly + 20 * static_cast<double>(i);
            out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(lx + 26)
                << "\" y2=\"" << fmt(y) << "\" stroke=\"" << series[i].color
                << "\" stroke-width=\"2\"/>\n"
                << "<text x=\"" << fmt(lx + 34) << "\" y=\"" << fmt(y + 4) << "\">" << series[i].name
                << "</text>\n";
        }
    }
    out << "</svg>\n";
    if (!out) throw Error("write failed: " + path);
}

}  // namespace

void emit_plot(const std::vector<ExperimentRow>& rows, const std::string& path) {
    if (rows.size() < 2) throw DomainError("plot needs at least 2 rows");
    Series ratio{"primes per combination", "#1f77b4", {}};
    for (const ExperimentRow& r : rows) ratio.points.emplace_back(r.log2_combinations, r.ratio);
    std::sort(ratio.points.begin(), ratio.points.end());
    write_chart(path, {ratio}, "log2(combinations)", "primes per combination");
}

void emit_plot(const std::vector<BitStatsRow>& rows, const std::string& path) {
    if (rows.size() < 2) throw DomainError("plot needs at least 2 rows");
    Series observed{"observed ratio", "#1f77b4", {}};
    Series base_g{"1/ln(2^g), g = max prime bits", "#d62728", {}};
    Series base_h{"1/ln(2^h), h = min prime bits", "#2ca02c", {}};
    for (const BitStatsRow& r : rows) {
        const double x = static_cast<double>(r.list_length) - 1;  // log2(combinations)
        observed.points.emplace_back(x, r.observed_ratio);
        base_g.points.emplace_back(x, r.baseline_max);
        base_h.points.emplace_back(x, r.baseline_min);
    }
    for (Series* s : {&observed, &base_g, &base_h}) std::sort(s->points.begin(), s->points.end());
    write_chart(path, {observed, base_h, base_g}, "log2(combinations)", "probability");
}

}  // namespace facelim
