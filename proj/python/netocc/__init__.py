"""Shifted-eigenvector centrality and occupancy models for networks."""

from ._netocc import (  # noqa: F401
    Feasibility,
    FitResult,
    IngestError,
    MatrixKind,
    ModelError,
    FitError,
    Node,
    ParamKind,
    PerronPair,
    ShiftedModel,
    UrbanNetwork,
    Verdict,
    apply_weights,
    build_adjacency,
    build_gravity,
    build_harmonic,
    calibrate_mu,
    classify,
    derivative_shifted,
    derivative_unshifted,
    eigen_centrality,
    elasticity,
    fit_joint,
    fit_weights_known_f,
    is_fully_indecomposable,
    is_irreducible,
    make_shifted_model,
    perron_pair,
    read_network_json,
    shortest_path_distances,
    solve_inverse,
    solve_shifted,
    spectral_radius,
)

__all__ = [name for name in dir() if not name.startswith("_")]
