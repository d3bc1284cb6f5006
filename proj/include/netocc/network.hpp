#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netocc/errors.hpp"

namespace netocc {

struct Node {
  std::string id;
  std::string label;
};

/// Undirected connected graph of streets / spatial entities, with optional
/// positive edge lengths (metric distance or travel time).
class UrbanNetwork {
 public:
  UrbanNetwork(std::vector<Node> nodes,
               std::vector<std::pair<int, int>> edges,
               std::optional<std::vector<double>> edge_lengths = std::nullopt);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_lengths() const { return lengths_.has_value(); }
  const std::vector<double>& lengths() const;

  int index_of(const std::string& id) const;  // throws IngestError if absent

 private:
  std::vector<Node> nodes_;
  std::vector<std::pair<int, int>> edges_;
  std::optional<std::vector<double>> lengths_;
};

enum class DistanceMode { Hop, Metric, UserSupplied };

/// Symmetric hollow matrix of pairwise shortest-path distances.
struct DistanceMatrix {
  Eigen::MatrixXd d;
  DistanceMode mode = DistanceMode::Hop;
};

enum class MatrixKind { Adjacency, Harmonic, Gravity, Weighted, Scaled };

/// Nonnegative square matrix of relationships between nodes, with provenance.
struct RelationshipMatrix {
  Eigen::MatrixXd m;
  MatrixKind kind = MatrixKind::Adjacency;
  bool symmetric = true;
  double perron_scale = 1.0;  // lambda divided out by normalize_to_unit_radius
};

RelationshipMatrix build_adjacency(const UrbanNetwork& net);

DistanceMatrix shortest_path_distances(const UrbanNetwork& net, bool metric);

RelationshipMatrix build_harmonic(const DistanceMatrix& dist);
RelationshipMatrix build_gravity(const DistanceMatrix& dist);

/// Column scaling M = B diag(w); all weights must be positive.
RelationshipMatrix apply_weights(const RelationshipMatrix& base,
                                 const Eigen::VectorXd& w);

/// True iff the support digraph of the nonnegative matrix is strongly
/// connected.
bool is_irreducible(const Eigen::MatrixXd& m);

}  // namespace netocc
