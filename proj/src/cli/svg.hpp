#pragma once

#include <string>
#include <utility>
#include <vector>

namespace torusquake::cli {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// 800×600 plot of polylines with axes labels and a legend keyed by series label.
void write_svg(const std::string& path, const std::string& title, const std::string& xlabel,
               const std::string& ylabel, const std::vector<Series>& series);

}  // namespace torusquake::cli
