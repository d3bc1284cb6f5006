// Command-line surface: ingestion, model runs, reports, plot emission.
//
// Exit codes: 0 success, 1 usage/IO, 2 model infeasibility, 3 estimation
// failure.

#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netocc/fitting.hpp"
#include "netocc/inverse.hpp"
#include "netocc/io.hpp"
#include "netocc/network.hpp"
#include "netocc/sensitivity.hpp"
#include "netocc/shifted.hpp"
#include "netocc/spectral.hpp"
#include "netocc/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string network_path;
  std::string snapshots_path;
  std::string forced_path;
  std::string kind = "adjacency";
  std::string weights_path;
  bool fit_weights = false;
  bool unit_weights = false;
  double total = 1.0;
  std::string out_dir = ".";
  std::string formats = "csv,json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_network = true) {
  auto* net = cmd->add_option("--network", o.network_path, "network JSON file");
  if (need_network) net->required();
  cmd->add_option("--snapshots", o.snapshots_path, "occupancy snapshot CSV");
  cmd->add_option("--forced", o.forced_path, "forced-occupancy CSV");
  cmd->add_option("--kind", o.kind, "relationship matrix kind")
      ->check(CLI::IsMember({"adjacency", "harmonic", "gravity"}));
  cmd->add_option("--weights", o.weights_path, "node weight JSON file");
  cmd->add_flag("--fit", o.fit_weights, "estimate weights from snapshots");
  cmd->add_flag("--unit", o.unit_weights, "use unit weights");
  cmd->add_option("--total", o.total, "total occupancy N");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--format", o.formats, "comma-separated: csv,json,svg");
}

std::set<std::string> parse_formats(const std::string& s) {
  std::set<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.insert(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  for (const auto& f : out)
    if (f != "csv" && f != "json" && f != "svg")
      throw netocc::IngestError("unknown output format '" + f + "'");
  return out;
}

netocc::MatrixKind parse_kind(const std::string& s) {
  if (s == "adjacency") return netocc::MatrixKind::Adjacency;
  if (s == "harmonic") return netocc::MatrixKind::Harmonic;
  if (s == "gravity") return netocc::MatrixKind::Gravity;
  throw netocc::IngestError("unknown kind '" + s + "'");
}

netocc::RelationshipMatrix build_base(const netocc::UrbanNetwork& net,
                                      const std::string& kind) {
  switch (parse_kind(kind)) {
    case netocc::MatrixKind::Adjacency:
      return netocc::build_adjacency(net);
    case netocc::MatrixKind::Harmonic:
      return netocc::build_harmonic(
          netocc::shortest_path_distances(net, false));
    default:
      return netocc::build_gravity(netocc::shortest_path_distances(net, false));
  }
}

// Resolves the weight vector from exactly one of --weights/--fit/--unit.
Eigen::VectorXd resolve_weights(const CommonOpts& o,
                                const netocc::UrbanNetwork& net,
                                const netocc::RelationshipMatrix& base) {
  int sources = (!o.weights_path.empty()) + o.fit_weights + o.unit_weights;
  if (sources > 1)
    throw netocc::IngestError(
        "choose exactly one weight source: --weights, --fit or --unit");
  if (!o.weights_path.empty())
    return netocc::read_node_vector_json(o.weights_path, net);
  if (o.fit_weights) {
    if (o.snapshots_path.empty())
      throw netocc::IngestError("--fit needs --snapshots");
    netocc::SnapshotSet snaps;
    snaps.snapshots = netocc::read_snapshot_csv(o.snapshots_path, net);
    if (!o.forced_path.empty())
      snaps.forced = netocc::read_snapshot_csv(o.forced_path, net);
    netocc::FitResult fit =
        snaps.forced ? netocc::fit_weights_known_f(base.m, snaps, false)
                     : netocc::fit_joint(base.m, snaps, false);
    return fit.w;
  }
  return Eigen::VectorXd::Ones(net.size());
}

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw netocc::IngestError("cannot create output directory '" + dir +
                                    "': " + ec.message());
}

std::vector<std::string> node_ids(const netocc::UrbanNetwork& net) {
  std::vector<std::string> out;
  for (const auto& n : net.nodes()) out.push_back(n.id);
  return out;
}

json vector_json(const netocc::UrbanNetwork& net, const Eigen::VectorXd& x) {
  json out = json::object();
  for (int i = 0; i < net.size(); ++i)
    out[net.nodes()[i].id] = netocc::format_number(x(i));
  return out;
}

int run_centrality(const CommonOpts& o) {
  netocc::UrbanNetwork net = netocc::read_network_json(o.network_path);
  netocc::RelationshipMatrix base = build_base(net, o.kind);
  Eigen::VectorXd w = resolve_weights(o, net, base);
  Eigen::VectorXd x =
      netocc::eigen_centrality(net, parse_kind(o.kind), w, o.total);
  ensure_out_dir(o.out_dir);
  auto formats = parse_formats(o.formats);
  if (formats.count("csv"))
    netocc::write_file(o.out_dir + "/centrality.csv",
                       netocc::vector_table_csv(net, x, "centrality"));
  if (formats.count("json")) {
    json doc;
    doc["kind"] = o.kind;
    doc["total"] = netocc::format_number(o.total);
    doc["centrality"] = vector_json(net, x);
    netocc::write_file(o.out_dir + "/centrality.json", doc.dump(2) + "\n");
  }
  for (int i = 0; i < net.size(); ++i)
    std::cout << net.nodes()[i].id << " " << netocc::format_number(x(i))
              << "\n";
  return 0;
}

int run_solve_shifted(const CommonOpts& o) {
  if (o.forced_path.empty())
    throw netocc::IngestError("solve-shifted needs --forced");
  netocc::UrbanNetwork net = netocc::read_network_json(o.network_path);
  netocc::RelationshipMatrix base = build_base(net, o.kind);
  Eigen::VectorXd w = resolve_weights(o, net, base);
  auto forced_rows = netocc::read_snapshot_csv(o.forced_path, net);
  Eigen::VectorXd f = forced_rows.front();

  if (f.isZero(0.0))
    throw netocc::ModelError(
        "verdict EIGENVECTOR_CASE: f = 0 belongs to the eigenvector model "
        "(use the centrality command)");

  netocc::ShiftedModel model = netocc::make_shifted_model(base.m, w, f,
                                                          o.total);
  Eigen::MatrixXd m_eff = model.mu * base.m * w.asDiagonal();
  double rho = netocc::spectral_radius(base.m * w.asDiagonal());
  double conservation =
      model.x.sum() - ((m_eff * model.x).sum() + f.sum());

  ensure_out_dir(o.out_dir);
  auto formats = parse_formats(o.formats);
  if (formats.count("csv"))
    netocc::write_file(o.out_dir + "/occupancy.csv",
                       netocc::vector_table_csv(net, model.x, "occupancy"));
  if (formats.count("json")) {
    json doc;
    doc["mu"] = netocc::format_number(model.mu);
    doc["rho_bw"] = netocc::format_number(rho);
    doc["rho_effective"] = netocc::format_number(model.mu * rho);
    doc["total"] = netocc::format_number(o.total);
    doc["conservation_defect"] = netocc::format_number(conservation);
    doc["occupancy"] = vector_json(net, model.x);
    netocc::write_file(o.out_dir + "/occupancy.json", doc.dump(2) + "\n");
  }
  std::cout << "mu " << netocc::format_number(model.mu) << "\n";
  for (int i = 0; i < net.size(); ++i)
    std::cout << net.nodes()[i].id << " " << netocc::format_number(model.x(i))
              << "\n";
  return 0;
}

int run_fit(const CommonOpts& o, bool constrained) {
  if (o.snapshots_path.empty())
    throw netocc::IngestError("fit needs --snapshots");
  netocc::UrbanNetwork net = netocc::read_network_json(o.network_path);
  netocc::RelationshipMatrix base = build_base(net, o.kind);
  netocc::SnapshotSet snaps;
  snaps.snapshots = netocc::read_snapshot_csv(o.snapshots_path, net);
  if (!o.forced_path.empty())
    snaps.forced = netocc::read_snapshot_csv(o.forced_path, net);

  netocc::FitResult fit =
      snaps.forced ? netocc::fit_weights_known_f(base.m, snaps, constrained)
                   : netocc::fit_joint(base.m, snaps, constrained);
  netocc::FitDiagnostics diag = netocc::goodness_of_fit(fit, base.m, snaps);

  ensure_out_dir(o.out_dir);
  auto formats = parse_formats(o.formats);
  if (formats.count("csv"))
    netocc::write_file(o.out_dir + "/weights.csv",
                       netocc::vector_table_csv(net, fit.w, "weight"));
  if (formats.count("json")) {
    json doc;
    doc["mode"] = snaps.forced ? "known-f" : "joint";
    doc["constrained"] = fit.constrained;
    doc["weights"] = vector_json(net, fit.w);
    if (fit.f) doc["forced"] = vector_json(net, *fit.f);
    doc["residual_norm"] = netocc::format_number(fit.residual_norm);
    doc["r_squared"] = netocc::format_number(fit.r_squared);
    doc["rmse"] = netocc::format_number(diag.rmse);
    json per_snap = json::array();
    for (int k = 0; k < diag.per_snapshot_residual.size(); ++k)
      per_snap.push_back(
          netocc::format_number(diag.per_snapshot_residual(k)));
    doc["per_snapshot_residual"] = per_snap;
    netocc::write_file(o.out_dir + "/fit.json", doc.dump(2) + "\n");
  }
  for (int i = 0; i < net.size(); ++i)
    std::cout << "w[" << net.nodes()[i].id
              << "] " << netocc::format_number(fit.w(i)) << "\n";
  if (fit.f)
    for (int i = 0; i < net.size(); ++i)
      std::cout << "f[" << net.nodes()[i].id << "] "
                << netocc::format_number((*fit.f)(i)) << "\n";
  std::cout << "residual " << netocc::format_number(fit.residual_norm) << "\n";
  return 0;
}

int run_sensitivity(const CommonOpts& o,
                    const std::vector<std::string>& param_specs) {
  netocc::UrbanNetwork net = netocc::read_network_json(o.network_path);
  netocc::RelationshipMatrix base = build_base(net, o.kind);
  Eigen::VectorXd w = resolve_weights(o, net, base);

  std::vector<netocc::Parameter> params;
  for (const auto& spec : param_specs) {
    if (spec.size() < 3 || spec[1] != ':' || (spec[0] != 'w' && spec[0] != 'f'))
      throw netocc::IngestError("bad --param '" + spec +
                                "' (expected w:INDEX or f:INDEX, 1-based)");
    int idx = std::stoi(spec.substr(2)) - 1;
    if (idx < 0 || idx >= net.size())
      throw netocc::IngestError("--param index out of range in '" + spec +
                                "'");
    params.push_back({spec[0] == 'w' ? netocc::ParamKind::Weight
                                     : netocc::ParamKind::Shift,
                      idx});
  }

  netocc::SensitivityReport report;
  if (o.forced_path.empty()) {
    report = netocc::full_report_unshifted(base.m, w, o.total, params);
  } else {
    auto forced_rows = netocc::read_snapshot_csv(o.forced_path, net);
    netocc::ShiftedModel model =
        netocc::make_shifted_model(base.m, w, forced_rows.front(), o.total);
    report = netocc::full_report_shifted(model, params);
  }

  ensure_out_dir(o.out_dir);
  auto formats = parse_formats(o.formats);
  std::vector<std::string> ids = node_ids(net);
  std::vector<std::string> col_labels;
  for (const auto& p : params) col_labels.push_back(netocc::to_string(p));

  if (formats.count("csv")) {
    netocc::write_file(o.out_dir + "/base.csv",
                       netocc::vector_table_csv(net, report.base_x, "x"));
    if (!params.empty()) {
      netocc::write_file(o.out_dir + "/derivatives.csv",
                         netocc::matrix_csv(report.derivatives, ids,
                                            col_labels));
      netocc::write_file(o.out_dir + "/elasticities.csv",
                         netocc::matrix_csv(report.elasticities, ids,
                                            col_labels));
    }
  }
  if (formats.count("json")) {
    json doc;
    doc["base"] = vector_json(net, report.base_x);
    doc["total"] = netocc::format_number(report.total);
    json dj = json::object(), ej = json::object();
    for (size_t j = 0; j < params.size(); ++j) {
      json dcol = json::array(), ecol = json::array();
      for (int i = 0; i < net.size(); ++i) {
        dcol.push_back(netocc::format_number(report.derivatives(i, j)));
        ecol.push_back(netocc::format_number(report.elasticities(i, j)));
      }
      dj[col_labels[j]] = dcol;
      ej[col_labels[j]] = ecol;
    }
    doc["derivatives"] = dj;
    doc["elasticities"] = ej;
    netocc::write_file(o.out_dir + "/sensitivity.json", doc.dump(2) + "\n");
  }
  if (formats.count("svg") && !params.empty()) {
    netocc::write_file(
        o.out_dir + "/elasticity_heatmap.svg",
        netocc::svg_heatmap(report.elasticities, ids, col_labels,
                            "Elasticities"));
    netocc::write_file(
        o.out_dir + "/elasticity_bars.svg",
        netocc::svg_bar_chart(report.elasticities, ids, col_labels,
                              "Elasticities"));
  }
  for (int i = 0; i < net.size(); ++i)
    std::cout << ids[i] << " " << netocc::format_number(report.base_x(i))
              << "\n";
  return 0;
}

int run_inverse(const CommonOpts& o, const std::string& matrix_path,
                double lambda) {
  Eigen::MatrixXd m;
  std::vector<std::string> ids;
  std::optional<netocc::UrbanNetwork> net;
  if (!matrix_path.empty()) {
    m = netocc::read_matrix_csv(matrix_path);
    for (int i = 0; i < m.rows(); ++i) ids.push_back("n" + std::to_string(i + 1));
  } else if (!o.network_path.empty()) {
    net = netocc::read_network_json(o.network_path);
    m = build_base(*net, o.kind).m;
    ids = node_ids(*net);
  } else {
    throw netocc::IngestError("inverse needs --matrix or --network");
  }

  if (!netocc::is_fully_indecomposable(m))
    throw netocc::ModelError(
        "matrix is not fully indecomposable: a forbidden p x q zero "
        "submatrix with p + q = n exists, so the reciprocal eigenvector "
        "theorem does not apply");

  Eigen::VectorXd x = netocc::solve_inverse(m, lambda);
  double residual =
      (lambda * x.cwiseInverse() - m * x).cwiseAbs().maxCoeff();

  ensure_out_dir(o.out_dir);
  auto formats = parse_formats(o.formats);
  if (formats.count("csv")) {
    std::ostringstream oss;
    oss << "id,x\n";
    for (int i = 0; i < x.size(); ++i)
      oss << ids[i] << "," << netocc::format_number(x(i)) << "\n";
    netocc::write_file(o.out_dir + "/inverse.csv", oss.str());
  }
  if (formats.count("json")) {
    json doc;
    doc["lambda"] = netocc::format_number(lambda);
    doc["residual"] = netocc::format_number(residual);
    json xv = json::object();
    for (int i = 0; i < x.size(); ++i)
      xv[ids[i]] = netocc::format_number(x(i));
    doc["x"] = xv;
    netocc::write_file(o.out_dir + "/inverse.json", doc.dump(2) + "\n");
  }
  for (int i = 0; i < x.size(); ++i)
    std::cout << ids[i] << " " << netocc::format_number(x(i)) << "\n";
  std::cout << "residual " << netocc::format_number(residual) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Occupancy and centrality models for urban networks"};
  app.require_subcommand(1);

  CommonOpts centrality_opts, shifted_opts, fit_opts, sens_opts, inv_opts;
  std::vector<std::string> param_specs;
  std::string matrix_path;
  double lambda = 1.0;
  bool constrained = false;

  auto* cmd_centrality =
      app.add_subcommand("centrality", "eigenvector centrality/occupancy");
  add_common(cmd_centrality, centrality_opts);

  auto* cmd_shifted =
      app.add_subcommand("solve-shifted", "shifted occupancy model");
  add_common(cmd_shifted, shifted_opts);

  auto* cmd_fit = app.add_subcommand("fit", "estimate weights (and f)");
  add_common(cmd_fit, fit_opts);
  cmd_fit->add_flag("--nonnegative", constrained,
                    "constrain estimates to be nonnegative");

  auto* cmd_sens = app.add_subcommand("sensitivity",
                                      "derivatives and elasticities");
  add_common(cmd_sens, sens_opts);
  cmd_sens->add_option("--param", param_specs,
                       "parameter w:INDEX or f:INDEX (repeatable, 1-based)");

  auto* cmd_inv = app.add_subcommand("inverse", "reciprocal eigenvector model");
  add_common(cmd_inv, inv_opts, false);
  cmd_inv->add_option("--matrix", matrix_path, "matrix CSV (overrides kind)");
  cmd_inv->add_option("--lambda", lambda, "eigenvalue lambda");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_centrality->parsed()) return run_centrality(centrality_opts);
    if (cmd_shifted->parsed()) return run_solve_shifted(shifted_opts);
    if (cmd_fit->parsed()) return run_fit(fit_opts, constrained);
    if (cmd_sens->parsed()) return run_sensitivity(sens_opts, param_specs);
    if (cmd_inv->parsed()) return run_inverse(inv_opts, matrix_path, lambda);
  } catch (const netocc::FitError& e) {
    std::cerr << "error[estimation]: " << e.what() << "\n";
    return 3;
  } catch (const netocc::ModelError& e) {
    std::cerr << "error[model]: " << e.what() << "\n";
    return 2;
  } catch (const netocc::Error& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
