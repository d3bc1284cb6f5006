#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace netocc {

/// Heatmap of a nodes x parameters matrix: one rect per cell, diverging
/// color scale symmetric about 0, value printed in each cell.
std::string svg_heatmap(const Eigen::MatrixXd& m,
                        const std::vector<std::string>& row_labels,
                        const std::vector<std::string>& col_labels,
                        const std::string& title);

/// Grouped bar chart: one labeled bar per (row, column) pair.
std::string svg_bar_chart(const Eigen::MatrixXd& m,
                          const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels,
                          const std::string& title);

}  // namespace netocc
