"""Exact invariants of Lie-theoretic Lefschetz fibrations on adjoint orbits."""
from .fukaya import DirectedCategory, build_directed_category, category_from_slf, hom_euler, lg2_category
from .hodge import (
    HodgeDiamond,
    LengthProfile,
    diamond_checks,
    flag_diamond,
    flag_length_profile,
    flag_poincare,
    length_profile_from_degrees,
    mirror_reflect,
)
from .mirror import ComplexRational, MirrorFiberReport, classify_fiber, critical_levels, mirror_consistency_report
from .roots import (
    CartanType,
    InputError,
    OrbitTooLarge,
    ParabolicData,
    RootSystem,
    build_root_system,
    is_regular,
    pairing,
    reflect,
    stabilizer_data,
    weyl_orbit,
)
from .slf import SLFReport, critical_set, critical_values, fiber_betti, orbit_dimension, slf_report

__version__ = "0.1.0"
