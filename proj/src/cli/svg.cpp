#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>

namespace torusquake::cli {

namespace {

constexpr int kWidth = 800, kHeight = 600;
constexpr int kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;

const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ffbf00", "#ff7f0e", "#e377c2",
                                "#17becf", "#40e0d0", "#87cefa", "#7f7f7f", "#8c564b", "#9467bd"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace

void write_svg(const std::string& path, const std::string& title, const std::string& xlabel,
               const std::string& ylabel, const std::vector<Series>& series) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const Series& s : series) {
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x), xmax = std::max(xmax, x);
            ymin = std::min(ymin, y), ymax = std::max(ymax, y);
        }
    }
    if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (xmax - xmin < 1e-12) xmin -= 0.5, xmax += 0.5;
    if (ymax - ymin < 1e-12) ymin -= 0.5, ymax += 0.5;
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return kTop + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << escape(title)
        << "</text>\n";
    out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4, yv = ymin + (ymax - ymin) * i / 4;
        out << "<text x=\"" << num(px(xv)) << "\" y=\"" << kHeight - kBottom + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << tick(xv) << "</text>\n";
        out << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(py(yv) + 4)
            << "\" text-anchor=\"end\" font-size=\"11\">" << tick(yv) << "</text>\n";
    }
    out << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << kHeight - 15
        << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(xlabel) << "</text>\n";
    out << "<text x=\"18\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << num(kTop + ph / 2) << ")\">" << escape(ylabel) << "</text>\n";

    // One color per distinct label, assigned in order of first appearance.
    std::map<std::string, std::size_t> colors;
    std::vector<std::string> order;
    for (const Series& s : series) {
        if (colors.emplace(s.label, colors.size()).second) order.push_back(s.label);
    }
    constexpr std::size_t kColors = sizeof kPalette / sizeof kPalette[0];
    for (const Series& s : series) {
        out << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << kPalette[colors[s.label] % kColors]
            << "\" points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            out << (i ? " " : "") << num(px(s.points[i].first)) << ',' << num(py(s.points[i].second));
        }
        out << "\"/>\n";
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        const double y = kTop + 12 + 18.0 * i;
        const int x = kWidth - kRight + 15;
        out << "<line x1=\"" << x << "\" y1=\"" << num(y) << "\" x2=\"" << x + 20 << "\" y2=\"" << num(y)
            << "\" stroke-width=\"3\" stroke=\"" << kPalette[i % kColors] << "\"/>\n";
        out << "<text x=\"" << x + 26 << "\" y=\"" << num(y + 4) << "\" font-size=\"12\">" << escape(order[i])
            << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace torusquake::cli
