#pragma once

#include <string>
#include <vector>

namespace kgwell::cli {

/// Plain line chart of y against x with axis labels and the data range.
std::string svg_line_plot(const std::vector<double>& x, const std::vector<double>& y, const std::string& title,
                          const std::string& x_label, const std::string& y_label);

}  // namespace kgwell::cli
