"""Bargmann transform, Fock space and radial symmetry numerics."""

from ._core import (
    DEFAULT_RADIAL_TOL,
    FockSeries,
    FormatError,
    HermiteExpansion,
    NotRadialError,
    RadialProfile,
    RadialReport,
    SampledFunction,
    a2_inner,
    a2_inner_quadrature,
    bargmann,
    bargmann_kernel,
    bargmann_of_samples,
    bridge_residual,
    enumerate_multi_indices,
    enumerate_shell,
    eval_F0,
    eval_via_E0,
    extract_profile,
    gauss_hermite,
    gauss_laguerre,
    gaussian_profile,
    hermite_eval,
    hermite_functions,
    inverse_bargmann,
    inverse_bridge_residual,
    l2_inner,
    preset_h0,
    preset_h2_shell,
    radial_test,
    reduce_dimension,
    shell_weight,
    stft_from_bargmann,
    stft_gaussian,
    synth_gaussian,
    synth_radial,
    verification_check_names,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
