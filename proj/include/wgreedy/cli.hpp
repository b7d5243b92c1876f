#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wgreedy {

/// Entry point of the wgreedy tool. Exit codes: 0 success or skip, 1 violation,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hand-written SVG line chart; series share the x axis.
struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};
std::string line_chart_svg(const std::string& title, const std::string& x_label, const std::vector<Series>& series);

}  // namespace wgreedy
