"""Invariants of the height function f_H(x) = <H, x> on the adjoint orbit of H0.

The critical points of f_H are the Weyl orbit W.H0 inside the Cartan
subalgebra, so everything here reduces to exact root-system arithmetic.
A regular fiber has the homology of the flag manifold F0 = G/P_Theta with
the k critical points removed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .hodge import flag_length_profile, length_profile_from_degrees, poincare_from_profile
from .roots import (
    DEFAULT_ORBIT_CAP,
    CartanVector,
    InputError,
    OrbitTooLarge,
    ParabolicData,
    Root,
    RootSystem,
    is_regular,
    pairing,
    stabilizer_data,
    vector,
    weyl_orbit,
)

LEFSCHETZ = "Lefschetz"
DEGENERATE = "degenerate"

FORM_NOTE = (
    "critical values use the invariant form B_ij = d_i*a_ij with short roots of "
    "squared length 2; any other invariant Hermitian normalization rescales all "
    "values by one positive constant"
)


class PointOrbitError(InputError):
    """H0 = 0: the orbit is a single point and carries no fibration."""

    def __init__(self):
        super().__init__("orbit is a point, no fibration (H0 = 0)")


def critical_set(rs: RootSystem, h0, cap: int = DEFAULT_ORBIT_CAP) -> list[CartanVector]:
    return weyl_orbit(rs, h0, cap)


def value_collisions(values: list[Fraction]) -> list[list[int]]:
    groups: dict[Fraction, list[int]] = {}
    for i, v in enumerate(values):
        groups.setdefault(v, []).append(i)
    return [g for g in groups.values() if len(g) > 1]


def critical_values(rs: RootSystem, h, critical_points: list[CartanVector]) -> tuple[list[Fraction], list[list[int]]]:
    values = [pairing(rs, h, x) for x in critical_points]
    return values, value_collisions(values)


def nonvanishing_positive_roots(rs: RootSystem, h0) -> list[Root]:
    return [beta for beta in rs.positive_roots if pairing(rs, beta, h0) != 0]


def orbit_dimension(rs: RootSystem, h0) -> tuple[int, int]:
    """(complex, real) dimension of Ad(G).H0: the roots of both signs not vanishing on H0."""
    complex_dim = 2 * len(nonvanishing_positive_roots(rs, h0))
    return complex_dim, 2 * complex_dim


def fiber_betti_from_flag(flag_betti: tuple[int, ...] | list[int], k: int) -> list[int]:
    """Betti numbers of F0 minus k points, from those of the closed manifold F0."""
    d = len(flag_betti) - 1
    betti = list(flag_betti[: d - 1]) + [flag_betti[d - 1] + k - 1, 0]
    return betti


def _flag_betti(rs: RootSystem, theta, cap: int) -> tuple[int, ...]:
    try:
        profile = flag_length_profile(rs, theta, cap)
    except OrbitTooLarge:
        profile = length_profile_from_degrees(rs, theta)
    return poincare_from_profile(profile)


def fiber_betti(rs: RootSystem, h0, cap: int = DEFAULT_ORBIT_CAP) -> list[int]:
    """Betti numbers b_0..b_d (d = real dimension of F0) of a regular fiber.

    Past the cap the flag Betti numbers come from the degree-product formula
    instead of coset enumeration.
    """
    h0 = vector(h0)
    if not any(h0):
        raise PointOrbitError()
    data = stabilizer_data(rs, h0)
    return fiber_betti_from_flag(_flag_betti(rs, data.theta, cap), data.orbit_index)


@dataclass
class SLFReport:
    cartan_type: str
    h0: CartanVector
    h: CartanVector
    h_regular: bool
    regularity_witness: Root | None
    theta: ParabolicData
    weyl_order: int
    k: int
    critical_points: list[CartanVector] | None
    critical_values: list[Fraction] | None
    value_collisions: list[list[int]] | None
    points_truncated: bool
    orbit_dim_complex: int
    orbit_dim_real: int
    flag_dim_real: int
    flag_betti: list[int]
    fiber_betti: list[int]
    status: str
    explanation: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def middle_betti(self) -> int:
        return self.fiber_betti[self.flag_dim_real - 1]

    @property
    def is_lefschetz(self) -> bool:
        return self.status == LEFSCHETZ


def slf_report(rs: RootSystem, h0, h, cap: int = DEFAULT_ORBIT_CAP) -> SLFReport:
    h0, h = vector(h0), vector(h)
    if len(h0) != rs.rank or len(h) != rs.rank:
        raise InputError(f"H0 and H must have length {rs.rank}")
    if not any(h0):
        raise PointOrbitError()
    data = stabilizer_data(rs, h0)
    regular, witness = is_regular(rs, h)
    explanation = []
    try:
        points = critical_set(rs, h0, cap)
        values, collisions = critical_values(rs, h, points)
        truncated = False
    except OrbitTooLarge:
        points = values = collisions = None
        truncated = True
        explanation.append(
            f"orbit has {data.orbit_index} points (> cap {cap}); critical points and values "
            "omitted, distinctness of critical values not checked"
        )
    if not regular:
        explanation.append(f"H is not regular: root {list(witness)} is orthogonal to H")
    if collisions:
        explanation.append(f"critical values collide in groups {collisions}")
    status = LEFSCHETZ if regular and not collisions else DEGENERATE
    orbit_c, orbit_r = orbit_dimension(rs, h0)
    flag_betti = list(_flag_betti(rs, data.theta, cap))
    return SLFReport(
        cartan_type=str(rs.cartan_type),
        h0=h0,
        h=h,
        h_regular=regular,
        regularity_witness=witness,
        theta=data,
        weyl_order=rs.weyl_order,
        k=data.orbit_index,
        critical_points=points,
        critical_values=values,
        value_collisions=collisions,
        points_truncated=truncated,
        orbit_dim_complex=orbit_c,
        orbit_dim_real=orbit_r,
        flag_dim_real=orbit_c,
        flag_betti=flag_betti,
        fiber_betti=fiber_betti_from_flag(flag_betti, data.orbit_index),
        status=status,
        explanation=explanation,
        notes=[FORM_NOTE] + rs.cartan_type.notes,
    )
