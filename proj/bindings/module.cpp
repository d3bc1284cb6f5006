#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netocc/fitting.hpp"
#include "netocc/inverse.hpp"
#include "netocc/io.hpp"
#include "netocc/network.hpp"
#include "netocc/sensitivity.hpp"
#include "netocc/shifted.hpp"
#include "netocc/spectral.hpp"

namespace py = pybind11;
using namespace netocc;

PYBIND11_MODULE(_netocc, m) {
  m.doc() = "Shifted-eigenvector centrality and occupancy models";

  py::register_exception<IngestError>(m, "IngestError");
  py::register_exception<ModelError>(m, "ModelError");
  py::register_exception<FitError>(m, "FitError");

  py::class_<Node>(m, "Node")
      .def(py::init<std::string, std::string>(), py::arg("id"),
           py::arg("label") = "")
      .def_readonly("id", &Node::id)
      .def_readonly("label", &Node::label);

  py::class_<UrbanNetwork>(m, "UrbanNetwork")
      .def(py::init<std::vector<Node>, std::vector<std::pair<int, int>>,
                    std::optional<std::vector<double>>>(),
           py::arg("nodes"), py::arg("edges"),
           py::arg("edge_lengths") = std::nullopt)
      .def_property_readonly("size", &UrbanNetwork::size)
      .def("index_of", &UrbanNetwork::index_of);

  py::enum_<MatrixKind>(m, "MatrixKind")
      .value("ADJACENCY", MatrixKind::Adjacency)
      .value("HARMONIC", MatrixKind::Harmonic)
      .value("GRAVITY", MatrixKind::Gravity)
      .value("WEIGHTED", MatrixKind::Weighted)
      .value("SCALED", MatrixKind::Scaled);

  py::class_<RelationshipMatrix>(m, "RelationshipMatrix")
      .def_readonly("m", &RelationshipMatrix::m)
      .def_readonly("kind", &RelationshipMatrix::kind)
      .def_readonly("symmetric", &RelationshipMatrix::symmetric)
      .def_readonly("perron_scale", &RelationshipMatrix::perron_scale);

  m.def("read_network_json", &read_network_json, py::arg("path"));
  m.def(
      "build_adjacency",
      [](const UrbanNetwork& net) { return build_adjacency(net).m; },
      py::arg("net"));
  m.def(
      "shortest_path_distances",
      [](const UrbanNetwork& net, bool metric) {
        return shortest_path_distances(net, metric).d;
      },
      py::arg("net"), py::arg("metric") = false);
  m.def(
      "build_harmonic",
      [](const Eigen::MatrixXd& d) {
        return build_harmonic({d, DistanceMode::UserSupplied}).m;
      },
      py::arg("distances"));
  m.def(
      "build_gravity",
      [](const Eigen::MatrixXd& d) {
        return build_gravity({d, DistanceMode::UserSupplied}).m;
      },
      py::arg("distances"));
  m.def(
      "apply_weights",
      [](const Eigen::MatrixXd& b, const Eigen::VectorXd& w) {
        return apply_weights({b, MatrixKind::Adjacency, true}, w).m;
      },
      py::arg("b"), py::arg("w"));
  m.def("is_irreducible", &is_irreducible, py::arg("m"));

  py::class_<PerronPair>(m, "PerronPair")
      .def_readonly("lam", &PerronPair::lambda)
      .def_readonly("right", &PerronPair::right)
      .def_readonly("left", &PerronPair::left)
      .def_readonly("biorthonormalized", &PerronPair::biorthonormalized)
      .def_readonly("residual", &PerronPair::residual);

  m.def(
      "perron_pair",
      [](const Eigen::MatrixXd& mat, double tol, int max_iter) {
        return perron_pair(mat, tol, max_iter);
      },
      py::arg("m"), py::arg("tol") = kDefaultEigTol,
      py::arg("max_iter") = kDefaultEigMaxIter);
  m.def("spectral_radius", &spectral_radius, py::arg("m"),
        py::arg("tol") = kDefaultEigTol,
        py::arg("max_iter") = kDefaultEigMaxIter);
  m.def(
      "eigen_centrality",
      [](const UrbanNetwork& net, MatrixKind kind,
         std::optional<Eigen::VectorXd> weights, double total) {
        return eigen_centrality(net, kind, std::move(weights), total);
      },
      py::arg("net"), py::arg("kind") = MatrixKind::Adjacency,
      py::arg("weights") = std::nullopt, py::arg("total") = 1.0);

  py::enum_<Feasibility>(m, "Feasibility")
      .value("UNIQUE_POSITIVE", Feasibility::UniquePositive)
      .value("EIGENVECTOR_CASE", Feasibility::EigenvectorCase)
      .value("INFEASIBLE", Feasibility::Infeasible)
      .value("SUPERCRITICAL", Feasibility::Supercritical);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("feasibility", &Verdict::feasibility)
      .def_readonly("rho", &Verdict::rho);

  m.def("classify", &classify, py::arg("m"), py::arg("f"));
  m.def("solve_shifted", &solve_shifted, py::arg("m"), py::arg("f"),
        py::arg("tol") = 1e-10);
  m.def(
      "calibrate_mu",
      [](const Eigen::MatrixXd& b, const Eigen::VectorXd& w,
         const Eigen::VectorXd& f, double total) {
        Calibration c = calibrate_mu(b, w, f, total);
        return py::make_tuple(c.mu, c.x);
      },
      py::arg("b"), py::arg("w"), py::arg("f"), py::arg("total"));

  py::class_<ShiftedModel>(m, "ShiftedModel")
      .def_readonly("mu", &ShiftedModel::mu)
      .def_readonly("x", &ShiftedModel::x)
      .def_readonly("total", &ShiftedModel::total);
  m.def("make_shifted_model", &make_shifted_model, py::arg("b"), py::arg("w"),
        py::arg("f"), py::arg("total"));

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("w", &FitResult::w)
      .def_readonly("f", &FitResult::f)
      .def_readonly("residual_norm", &FitResult::residual_norm)
      .def_readonly("r_squared", &FitResult::r_squared)
      .def_readonly("constrained", &FitResult::constrained);

  m.def(
      "fit_weights_known_f",
      [](const Eigen::MatrixXd& b, std::vector<Eigen::VectorXd> xs,
         std::vector<Eigen::VectorXd> fs, bool constrained) {
        SnapshotSet snaps{std::move(xs), std::move(fs)};
        return fit_weights_known_f(b, snaps, constrained);
      },
      py::arg("b"), py::arg("snapshots"), py::arg("forced"),
      py::arg("constrained") = false);
  m.def(
      "fit_joint",
      [](const Eigen::MatrixXd& b, std::vector<Eigen::VectorXd> xs,
         bool constrained) {
        SnapshotSet snaps{std::move(xs), std::nullopt};
        return fit_joint(b, snaps, constrained);
      },
      py::arg("b"), py::arg("snapshots"), py::arg("constrained") = false);

  py::enum_<ParamKind>(m, "ParamKind")
      .value("WEIGHT", ParamKind::Weight)
      .value("SHIFT", ParamKind::Shift);

  m.def("derivative_unshifted", &derivative_unshifted, py::arg("b"),
        py::arg("w"), py::arg("i"), py::arg("total"));
  m.def(
      "derivative_shifted",
      [](const ShiftedModel& model, ParamKind kind, int index) {
        return derivative_shifted(model, {kind, index});
      },
      py::arg("model"), py::arg("kind"), py::arg("index"));
  m.def("elasticity", &elasticity, py::arg("x"), py::arg("x_prime"),
        py::arg("t0"));

  m.def(
      "is_fully_indecomposable",
      [](const Eigen::MatrixXd& mat) { return is_fully_indecomposable(mat); },
      py::arg("m"));
  m.def(
      "solve_inverse",
      [](const Eigen::MatrixXd& mat, double lambda, double tol, int max_iter) {
        return solve_inverse(mat, lambda, tol, max_iter);
      },
      py::arg("m"), py::arg("lam") = 1.0, py::arg("tol") = 1e-12,
      py::arg("max_iter") = 100000);
}
