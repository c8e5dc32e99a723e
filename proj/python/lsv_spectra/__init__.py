"""Bound states of a neutral spin-1/2 particle in a Coulomb-like potential.

Thin bindings over the C++ core: closed-form Coulomb-like spectra and Kummer
wavefunctions, the Heun frequency quantization of the perturbed oscillator and
the finite-difference eigenvalue oracle used to verify both.
"""

from ._core import (
    Background,
    DegenerateDelta,
    GridSpec,
    GridTooCoarse,
    InvalidInput,
    InvalidParameter,
    LsvError,
    NonUniformGrid,
    NoPositiveRoot,
    OracleResult,
    QuantumNumbers,
    RepulsiveBranch,
    coulomb_delta,
    coulomb_energy,
    coulomb_level,
    coulomb_residual,
    coulomb_wavefunction,
    count_bound_states,
    default_coulomb_grid,
    default_oscillator_grid,
    degeneracy_partner,
    effective_nu,
    eigensolve_coulomb,
    eigensolve_oscillator,
    energy_from_zeta_sq,
    heun_coeffs,
    kummer_m,
    oscillator_energy,
    oscillator_residual,
    oscillator_wavefunction,
    oscillator_zeta_sq,
    quantization_residual,
    simpson,
    solve_frequencies,
    zeta_sq_from_energy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
