#include "netocc/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace netocc {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  std::array<char, 64> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 12);
  return std::string(buf.data(), ptr);
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open '" + path + "'");
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream iss(line);
  while (std::getline(iss, field, ',')) {
    // trim
    size_t a = field.find_first_not_of(" \t\r");
    size_t b = field.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
  }
  return out;
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw IngestError("cannot parse number '" + s + "' in " + where);
  }
}

}  // namespace

UrbanNetwork read_network_json(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw IngestError("invalid JSON in '" + path + "': " + e.what());
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_array())
    throw IngestError("network file needs a 'nodes' array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw IngestError("network file needs an 'edges' array");

  std::vector<Node> nodes;
  for (const auto& jn : doc["nodes"]) {
    if (!jn.contains("id"))
      throw IngestError("node entry without an 'id' field");
    nodes.push_back({jn["id"].get<std::string>(),
                     jn.value("label", std::string{})});
  }
  auto index_of = [&](const std::string& id) -> int {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].id == id) return static_cast<int>(i);
    throw IngestError("edge references unknown node '" + id + "'");
  };

  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> edge_keys;
  for (const auto& je : doc["edges"]) {
    if (!je.is_array() || je.size() != 2)
      throw IngestError("each edge must be a pair of node ids");
    std::string a = je[0].get<std::string>();
    std::string b = je[1].get<std::string>();
    edges.emplace_back(index_of(a), index_of(b));
    edge_keys.push_back(a + "-" + b);
  }

  std::optional<std::vector<double>> lengths;
  if (doc.contains("lengths")) {
    const auto& jl = doc["lengths"];
    std::vector<double> vals;
    for (size_t k = 0; k < edges.size(); ++k) {
      std::string key = edge_keys[k];
      std::string rev = nodes[edges[k].second].id + "-" +
                        nodes[edges[k].first].id;
      if (jl.contains(key))
        vals.push_back(jl[key].get<double>());
      else if (jl.contains(rev))
        vals.push_back(jl[rev].get<double>());
      else
        throw IngestError("missing length for edge " + key);
    }
    lengths = std::move(vals);
  }
  return UrbanNetwork(std::move(nodes), std::move(edges), std::move(lengths));
}

std::vector<Eigen::VectorXd> read_snapshot_csv(const std::string& path,
                                               const UrbanNetwork& net) {
  std::istringstream in(slurp(path));
  std::string line;
  if (!std::getline(in, line))
    throw IngestError("empty snapshot file '" + path + "'");
  auto header = split_csv_line(line);
  const int n = net.size();
  if (static_cast<int>(header.size()) != n)
    throw IngestError("snapshot header has " + std::to_string(header.size()) +
                      " columns, network has " + std::to_string(n) + " nodes");
  for (int i = 0; i < n; ++i) {
    if (header[i] != net.nodes()[i].id)
      throw IngestError("snapshot column " + std::to_string(i + 1) + " is '" +
                        header[i] + "', expected node '" + net.nodes()[i].id +
                        "'");
  }
  std::vector<Eigen::VectorXd> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != n)
      throw IngestError("row " + std::to_string(lineno) + " of '" + path +
                        "' has " + std::to_string(fields.size()) + " fields");
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i)
      v(i) = parse_double(fields[i],
                          "'" + path + "' row " + std::to_string(lineno));
    rows.push_back(std::move(v));
  }
  if (rows.empty()) throw IngestError("no data rows in '" + path + "'");
  return rows;
}

Eigen::VectorXd read_node_vector_json(const std::string& path,
                                      const UrbanNetwork& net) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw IngestError("invalid JSON in '" + path + "': " + e.what());
  }
  if (!doc.is_object())
    throw IngestError("'" + path + "' must be an object of node id -> value");
  Eigen::VectorXd v(net.size());
  for (int i = 0; i < net.size(); ++i) {
    const std::string& id = net.nodes()[i].id;
    if (!doc.contains(id))
      throw IngestError("'" + path + "' is missing node '" + id + "'");
    v(i) = doc[id].get<double>();
  }
  return v;
}

Eigen::MatrixXd read_matrix_csv(const std::string& path) {
  std::istringstream in(slurp(path));
  std::string line;
  std::vector<std::vector<double>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split_csv_line(line);
    std::vector<double> row;
    for (const auto& f : fields)
      row.push_back(
          parse_double(f, "'" + path + "' row " + std::to_string(lineno)));
    if (!rows.empty() && row.size() != rows.front().size())
      throw IngestError("ragged rows in '" + path + "'");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw IngestError("no data in '" + path + "'");
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::string vector_table_csv(const UrbanNetwork& net, const Eigen::VectorXd& x,
                             const std::string& value_header) {
  std::ostringstream oss;
  oss << "id,label," << value_header << "\n";
  for (int i = 0; i < net.size(); ++i)
    oss << net.nodes()[i].id << "," << net.nodes()[i].label << ","
        << format_number(x(i)) << "\n";
  return oss.str();
}

std::string matrix_csv(const Eigen::MatrixXd& m,
                       const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels) {
  std::ostringstream oss;
  oss << "node";
  for (const auto& c : col_labels) oss << "," << c;
  oss << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    oss << row_labels[i];
    for (int j = 0; j < m.cols(); ++j) oss << "," << format_number(m(i, j));
    oss << "\n";
  }
  return oss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IngestError("cannot write '" + path + "'");
  out << content;
}

}  // namespace netocc
