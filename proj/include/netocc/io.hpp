#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "netocc/fitting.hpp"
#include "netocc/network.hpp"

namespace netocc {

/// Locale-independent formatting with 12 significant digits; identical
/// inputs always produce identical text.
std::string format_number(double v);

UrbanNetwork read_network_json(const std::string& path);

/// CSV with a header row of node ids (in network order) and one snapshot per
/// data row.
std::vector<Eigen::VectorXd> read_snapshot_csv(const std::string& path,
                                               const UrbanNetwork& net);

/// JSON object mapping node id -> value; every node must be present.
Eigen::VectorXd read_node_vector_json(const std::string& path,
                                      const UrbanNetwork& net);

Eigen::MatrixXd read_matrix_csv(const std::string& path);

std::string vector_table_csv(const UrbanNetwork& net, const Eigen::VectorXd& x,
                             const std::string& value_header);

std::string matrix_csv(const Eigen::MatrixXd& m,
                       const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels);

void write_file(const std::string& path, const std::string& content);

}  // namespace netocc
