"""Position-representation quantisation of the 1D electromagnetic field.

Localized photon wave packets, their dispersion-free transport, the
non-local field observables built from the regularisation kernel, the
energy observable, and a brute-force validation suite on truncated Fock
spaces.
"""

from ._core import (
    Direction,
    EnergyBreakdown,
    FieldProfile,
    FockMode,
    FockOperatorSet,
    Grid,
    Kernel,
    PhysicalConstants,
    Polarization,
    WavePacket,
    apply_h_dyn,
    build_kernel,
    commutator_norm,
    conservation_probe,
    detection_probability,
    energy_expectation,
    field_profile,
    fit_tail_exponent,
    from_momentum,
    heisenberg_shift_deviation,
    inner_product,
    intensity_profile,
    make_blip,
    make_gaussian,
    make_grid,
    make_plane_wave,
    normalize,
    packet_moments,
    position_distribution,
    poynting_profile,
    regularize,
    run_validation_suite,
    schrodinger_residual,
    shift_evolve,
    spectral_evolve,
    to_momentum,
)

__all__ = [
    "Direction",
    "EnergyBreakdown",
    "FieldProfile",
    "FockMode",
    "FockOperatorSet",
    "Grid",
    "Kernel",
    "PhysicalConstants",
    "Polarization",
    "WavePacket",
    "apply_h_dyn",
    "build_kernel",
    "commutator_norm",
    "conservation_probe",
    "detection_probability",
    "energy_expectation",
    "field_profile",
    "fit_tail_exponent",
    "from_momentum",
    "heisenberg_shift_deviation",
    "inner_product",
    "intensity_profile",
    "make_blip",
    "make_gaussian",
    "make_grid",
    "make_plane_wave",
    "normalize",
    "packet_moments",
    "position_distribution",
    "poynting_profile",
    "regularize",
    "run_validation_suite",
    "schrodinger_residual",
    "shift_evolve",
    "spectral_evolve",
    "to_momentum",
]
