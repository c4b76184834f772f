"""Tight-frame measurements, channel unravelings, Kirkwood-Dirac matrices
and the entropy and eigenvalue-location bounds they obey."""

from .bounds import (
    BoundReport,
    Interval,
    eigen_interval,
    etf_eigen_interval,
    etf_spectral_bound,
    gershgorin_disks,
    gram_frobenius_sq,
    ic_upper_bound,
    kd_frobenius_norm,
    max_eig_upper_bound,
    pure_state_margin,
    renyi_uncertainty_bound,
    singular_interval,
    tsallis_uncertainty_bound,
)
from .channels import (
    Unraveling,
    apply_channel,
    extremal_unraveling,
    kd_matrix,
    principal_kraus,
    transform_unraveling,
    unraveling_gram,
    unraveling_probabilities,
)
from .entropy import (
    alpha_log,
    index_of_coincidence,
    renyi_entropy,
    renyi_interpolation_bound,
    tsallis_entropy,
)
from .frames import (
    DensityMatrix,
    EtfParameters,
    Frame,
    Povm,
    coherence_constant,
    complement_etf,
    frame_mixture,
    frame_operator,
    gram_matrix,
    is_equiangular,
    is_tight,
    orthonormal_frame,
    outcome_probabilities,
    povm_from_frame,
    purity,
    random_density_matrix,
    random_pure_state,
    sic_qubit,
)
from .linalg import (
    NUMERIC_TOL,
    SATURATION_TOL,
    STRUCTURAL_TOL,
    Spectrum,
    haar_unitary,
    hermitian_eig,
    hs_inner,
    schatten_norm,
    singular_values,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DensityMatrix",
    "EtfParameters",
    "Frame",
    "Interval",
    "NUMERIC_TOL",
    "Povm",
    "SATURATION_TOL",
    "STRUCTURAL_TOL",
    "Spectrum",
    "Unraveling",
    "alpha_log",
    "apply_channel",
    "coherence_constant",
    "complement_etf",
    "eigen_interval",
    "etf_eigen_interval",
    "etf_spectral_bound",
    "extremal_unraveling",
    "frame_mixture",
    "frame_operator",
    "gershgorin_disks",
    "gram_frobenius_sq",
    "gram_matrix",
    "haar_unitary",
    "hermitian_eig",
    "hs_inner",
    "ic_upper_bound",
    "index_of_coincidence",
    "is_equiangular",
    "is_tight",
    "kd_frobenius_norm",
    "kd_matrix",
    "max_eig_upper_bound",
    "orthonormal_frame",
    "outcome_probabilities",
    "povm_from_frame",
    "principal_kraus",
    "pure_state_margin",
    "purity",
    "random_density_matrix",
    "random_pure_state",
    "renyi_entropy",
    "renyi_interpolation_bound",
    "renyi_uncertainty_bound",
    "schatten_norm",
    "sic_qubit",
    "singular_interval",
    "singular_values",
    "tsallis_entropy",
    "tsallis_uncertainty_bound",
    "transform_unraveling",
    "unraveling_gram",
    "unraveling_probabilities",
]
