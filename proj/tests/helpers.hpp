#pragma once

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "netocc/network.hpp"

namespace netocc::testing {

inline UrbanNetwork p3() {
  return UrbanNetwork({{"V1", "wing A"}, {"V2", "hall"}, {"V3", "wing B"}},
                      {{0, 1}, {1, 2}});
}

inline UrbanNetwork k2() {
  return UrbanNetwork({{"V1", ""}, {"V2", ""}}, {{0, 1}});
}

inline UrbanNetwork c4() {
  return UrbanNetwork({{"V1", ""}, {"V2", ""}, {"V3", ""}, {"V4", ""}},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline Eigen::MatrixXd p3_adjacency() {
  Eigen::MatrixXd a(3, 3);
  a << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  return a;
}

inline Eigen::VectorXd toy_weights() {
  Eigen::VectorXd w(3);
  w << 2.0, 1.0 / 3.0, 1.0;
  return w;
}

// Random spanning tree plus extra edges; always connected.
inline UrbanNetwork random_connected_network(std::mt19937& rng, int n) {
  std::vector<Node> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back({"N" + std::to_string(i + 1), ""});
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(pick(rng), i);
  }
  std::uniform_int_distribution<int> node_pick(0, n - 1);
  std::bernoulli_distribution extra(0.4);
  for (int tries = 0; tries < n; ++tries) {
    int a = node_pick(rng), b = node_pick(rng);
    if (a == b || !extra(rng)) continue;
    bool dup = false;
    for (auto& [p, q] : edges)
      if ((p == std::min(a, b) && q == std::max(a, b)) ||
          (q == std::min(a, b) && p == std::max(a, b)))
        dup = true;
    if (!dup) edges.emplace_back(a, b);
  }
  return UrbanNetwork(std::move(nodes), std::move(edges));
}

inline Eigen::VectorXd random_positive(std::mt19937& rng, int n,
                                       double lo = 0.2, double hi = 3.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = dist(rng);
  return v;
}

inline Eigen::VectorXd random_nonnegative(std::mt19937& rng, int n,
                                          double hi = 100.0) {
  std::uniform_real_distribution<double> dist(0.0, hi);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = dist(rng);
  return v;
}

// Symmetric nonnegative irreducible matrix built from a random connected
// support pattern with random positive entries.
inline Eigen::MatrixXd random_symmetric_irreducible(std::mt19937& rng, int n) {
  UrbanNetwork net = random_connected_network(rng, n);
  std::uniform_real_distribution<double> dist(0.1, 2.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [i, j] : net.edges()) {
    double v = dist(rng);
    m(i, j) = v;
    m(j, i) = v;
  }
  return m;
}

}  // namespace netocc::testing
