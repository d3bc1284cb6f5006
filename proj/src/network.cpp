#include "netocc/network.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace netocc {

namespace {

std::string component_diagnostic(const std::vector<Node>& nodes,
                                 const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : adj[v]) {
        if (comp[u] < 0) {
          comp[u] = ncomp;
          q.push(u);
        }
      }
    }
    ++ncomp;
  }
  std::ostringstream oss;
  oss << "network is disconnected (" << ncomp << " components):";
  for (int c = 0; c < ncomp; ++c) {
    oss << " [";
    bool first = true;
    for (int v = 0; v < n; ++v) {
      if (comp[v] != c) continue;
      if (!first) oss << " ";
      oss << nodes[v].id;
      first = false;
    }
    oss << "]";
  }
  return oss.str();
}

}  // namespace

UrbanNetwork::UrbanNetwork(std::vector<Node> nodes,
                           std::vector<std::pair<int, int>> edges,
                           std::optional<std::vector<double>> edge_lengths)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      lengths_(std::move(edge_lengths)) {
  const int n = size();
  if (n == 0) throw IngestError("network has no nodes");

  std::set<std::string> seen;
  for (const auto& node : nodes_) {
    if (node.id.empty()) throw IngestError("node with empty id");
    if (!seen.insert(node.id).second)
      throw IngestError("duplicate node id '" + node.id + "'");
  }

  std::set<std::pair<int, int>> edge_set;
  for (auto& [a, b] : edges_) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw IngestError("edge endpoint index out of range (" +
                        std::to_string(a) + "," + std::to_string(b) + ")");
    if (a == b)
      throw IngestError("self-loop at node '" + nodes_[a].id + "' rejected");
    if (a > b) std::swap(a, b);
    if (!edge_set.insert({a, b}).second)
      throw IngestError("duplicate edge " + nodes_[a].id + "-" + nodes_[b].id);
  }

  if (lengths_) {
    if (lengths_->size() != edges_.size())
      throw IngestError("edge length count does not match edge count");
    for (size_t k = 0; k < lengths_->size(); ++k) {
      if (!((*lengths_)[k] > 0.0))
        throw IngestError("nonpositive length on edge " +
                          nodes_[edges_[k].first].id + "-" +
                          nodes_[edges_[k].second].id);
    }
  }

  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> visited(n, 0);
  std::queue<int> q;
  q.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v]) {
      if (!visited[u]) {
        visited[u] = 1;
        ++reached;
        q.push(u);
      }
    }
  }
  if (reached != n) throw IngestError(component_diagnostic(nodes_, adj));
}

const std::vector<double>& UrbanNetwork::lengths() const {
  if (!lengths_) throw IngestError("network has no edge lengths");
  return *lengths_;
}

int UrbanNetwork::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i) {
    if (nodes_[i].id == id) return i;
  }
  throw IngestError("unknown node id '" + id + "'");
}

RelationshipMatrix build_adjacency(const UrbanNetwork& net) {
  const int n = net.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [i, j] : net.edges()) {
    a(i, j) = 1.0;
    a(j, i) = 1.0;
  }
  return {a, MatrixKind::Adjacency, true};
}

DistanceMatrix shortest_path_distances(const UrbanNetwork& net, bool metric) {
  const int n = net.size();
  if (metric && !net.has_lengths())
    throw IngestError("metric distances requested but edge lengths missing");

  constexpr double inf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, inf);
  d.diagonal().setZero();
  for (size_t k = 0; k < net.edges().size(); ++k) {
    const auto& [i, j] = net.edges()[k];
    double w = metric ? net.lengths()[k] : 1.0;
    d(i, j) = std::min(d(i, j), w);
    d(j, i) = d(i, j);
  }
  // Floyd-Warshall; dense n is small by design.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d(i, k) + d(k, j) < d(i, j)) d(i, j) = d(i, k) + d(k, j);

  return {d, metric ? DistanceMode::Metric : DistanceMode::Hop};
}

RelationshipMatrix build_harmonic(const DistanceMatrix& dist) {
  const int n = static_cast<int>(dist.d.rows());
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e(i, j) = 1.0 / dist.d(i, j);
  return {e, MatrixKind::Harmonic, true};
}

RelationshipMatrix build_gravity(const DistanceMatrix& dist) {
  const int n = static_cast<int>(dist.d.rows());
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e(i, j) = 1.0 / (dist.d(i, j) * dist.d(i, j));
  return {e, MatrixKind::Gravity, true};
}

RelationshipMatrix apply_weights(const RelationshipMatrix& base,
                                 const Eigen::VectorXd& w) {
  if (w.size() != base.m.rows())
    throw IngestError("weight vector dimension does not match matrix");
  if ((w.array() <= 0.0).any())
    throw IngestError("weights must be strictly positive");
  RelationshipMatrix out;
  out.m = base.m * w.asDiagonal();
  out.kind = MatrixKind::Weighted;
  out.symmetric = out.m.isApprox(out.m.transpose());
  return out;
}

namespace {

// BFS over the support pattern; `transpose` walks edges backwards.
int support_reach(const Eigen::MatrixXd& m, bool transpose) {
  const int n = static_cast<int>(m.rows());
  std::vector<char> visited(n, 0);
  std::queue<int> q;
  q.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u = 0; u < n; ++u) {
      double entry = transpose ? m(u, v) : m(v, u);
      if (entry != 0.0 && !visited[u]) {
        visited[u] = 1;
        ++reached;
        q.push(u);
      }
    }
  }
  return reached;
}

}  // namespace

bool is_irreducible(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw IngestError("matrix is not square");
  const int n = static_cast<int>(m.rows());
  if (n == 1) return m(0, 0) != 0.0;
  return support_reach(m, false) == n && support_reach(m, true) == n;
}

}  // namespace netocc
