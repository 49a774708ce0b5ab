"""Computational verification of the algebra of instanton moduli spaces
over connected sums of CP^2: index arithmetic, restriction kernels,
Hilbert-series cross-checks and the monad equations."""

from ._core import (
    __version__,
    chosen_classes,
    coupled_line_index,
    dirac_index,
    enumerate_spinc,
    gauge_act,
    hilbert_report,
    identity_check,
    integrability_residual,
    intersection,
    kernel_report,
    m0_config,
    m0_dimension_check,
    m0_subspaces,
    monad_maps,
    monad_report,
    relations_in_kernel,
    sample_blowup_points,
    surjectivity_report,
)

__all__ = [
    "__version__",
    "chosen_classes",
    "coupled_line_index",
    "dirac_index",
    "enumerate_spinc",
    "gauge_act",
    "hilbert_report",
    "identity_check",
    "integrability_residual",
    "intersection",
    "kernel_report",
    "m0_config",
    "m0_dimension_check",
    "m0_subspaces",
    "monad_maps",
    "monad_report",
    "relations_in_kernel",
    "sample_blowup_points",
    "surjectivity_report",
]
