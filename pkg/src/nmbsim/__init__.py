"""Covariance-matrix simulator for oscillator-bath models with
entanglement- and fidelity-based non-Markovianity quantifiers."""

from .analytic import analytic_as_cm, equivalence_frame_w, large_detuning_eo
from .measures import (
    fidelity_nm,
    gaussian_fidelity_1mode,
    log_negativity,
    mean_energy,
    nmbq,
    occupancy,
    system_energy,
)
from .models import (
    ModelSpec,
    build_w,
    effective_resonant_coupling,
    effective_w_large_detuning,
    effective_w_small_detuning,
    mode_frequencies,
)
from .spectral import DiscretizedBath, SpectralDensity, discretize, eval_j
from .states import (
    assemble_initial_state,
    single_mode_squeezed_cm,
    thermal_cm,
    thermal_variance,
    two_mode_squeezed_cm,
)
from .symplectic import (
    SpectralFactorization,
    build_propagator,
    build_propagator_expm,
    check_physical,
    evolve_cm,
    evolve_quadrature_sums,
    evolve_reduced,
    factorize_coupling_block,
    reduce_to_modes,
    symplectic_eigenvalues,
    symplectic_form,
)

__version__ = "0.1.0"
