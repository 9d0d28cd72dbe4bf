"""Hodge diamonds of flag manifolds G/P_Theta and the 45-degree mirror reflection.

A flag manifold has a cell decomposition indexed by the minimal coset
representatives W^Theta, with one cell of complex dimension l(w) for each w.
Hence h^{p,p} = #{w in W^Theta : l(w) = p} and every other Hodge number is 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .roots import (
    DEFAULT_ORBIT_CAP,
    InputError,
    RootSystem,
    degrees_from_roots,
    orbit_with_lengths,
    parabolic_data,
    subsystem_positive_roots,
)


@dataclass(frozen=True)
class LengthProfile:
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def dimension(self) -> int:
        return len(self.counts) - 1


def _check_theta(rs: RootSystem, theta: Iterable[int]) -> frozenset[int]:
    theta = frozenset(theta)
    bad = [i for i in theta if not 0 <= i < rs.rank]
    if bad:
        raise InputError(f"theta indices {bad} outside 0..{rs.rank - 1}")
    return theta


def flag_length_profile(rs: RootSystem, theta: Iterable[int] = (), cap: int = DEFAULT_ORBIT_CAP) -> LengthProfile:
    """Count minimal coset representatives of W/W_Theta by length.

    Raises OrbitTooLarge when |W^Theta| exceeds ``cap``; use
    :func:`length_profile_from_degrees` in that case.
    """
    theta = _check_theta(rs, theta)
    dist = orbit_with_lengths(rs, theta, cap)
    counts = [0] * (max(dist.values()) + 1)
    for length in dist.values():
        counts[length] += 1
    return LengthProfile(tuple(counts))


def _q_integer(d: int) -> list[int]:
    return [1] * d


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c, r = divmod(num[k + len(den) - 1], den[-1])
        if r:
            raise ArithmeticError("polynomial division is not exact")
        q[k] = c
        for j, y in enumerate(den):
            num[k + j] -= c * y
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    return q


def length_profile_from_degrees(rs: RootSystem, theta: Iterable[int] = ()) -> LengthProfile:
    """Enumeration-free length profile: prod [d_i]_t / prod [d'_j]_t.

    ``d_i`` are the degrees of W and ``d'_j`` those of W_Theta, with
    ``[d]_t = 1 + t + ... + t^(d-1)``.
    """
    theta = _check_theta(rs, theta)
    num = [1]
    for d in rs.degrees:
        num = _poly_mul(num, _q_integer(d))
    den = [1]
    for d in degrees_from_roots(subsystem_positive_roots(rs, theta)):
        den = _poly_mul(den, _q_integer(d))
    return LengthProfile(tuple(_poly_divexact(num, den)))


def flag_poincare(rs: RootSystem, theta: Iterable[int] = (), cap: int = DEFAULT_ORBIT_CAP) -> tuple[int, ...]:
    """Betti numbers b_0..b_{2m} of G/P_Theta (odd ones vanish)."""
    return poincare_from_profile(flag_length_profile(rs, theta, cap))


def poincare_from_profile(profile: LengthProfile) -> tuple[int, ...]:
    betti = []
    for c in profile.counts:
        betti.extend([c, 0])
    return tuple(betti[:-1])


@dataclass(frozen=True)
class HodgeDiamond:
    n: int
    h: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError("diamond dimension must be >= 0")
        if len(self.h) != self.n + 1 or any(len(row) != self.n + 1 for row in self.h):
            raise InputError(f"diamond grid must be {self.n + 1}x{self.n + 1}")
        for row in self.h:
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise InputError(f"Hodge numbers must be nonnegative integers, got {x!r}")

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[int]]) -> "HodgeDiamond":
        return cls(len(grid) - 1, tuple(tuple(row) for row in grid))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "HodgeDiamond":
        n = len(entries) - 1
        return cls(n, tuple(tuple(entries[p] if p == q else 0 for q in range(n + 1)) for p in range(n + 1)))

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        return self.h[p][q]

    def betti(self) -> list[int]:
        return [sum(self.h[p][k - p] for p in range(self.n + 1) if 0 <= k - p <= self.n) for k in range(2 * self.n + 1)]

    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti()))

    def to_json(self) -> dict:
        return {"kind": "hodge_diamond", "n": self.n, "hodge": [list(row) for row in self.h]}

    @classmethod
    def from_json(cls, data) -> "HodgeDiamond":
        if isinstance(data, list):
            return cls.from_grid(data)
        if not isinstance(data, dict) or "hodge" not in data:
            raise InputError("diamond JSON needs a 'hodge' grid")
        d = cls.from_grid(data["hodge"])
        if "n" in data and data["n"] != d.n:
            raise InputError(f"declared n={data['n']} does not match grid size {d.n}")
        return d

    def pretty(self) -> str:
        """Pyramid layout: h^{n,n} on top, h^{0,0} at the bottom, h^{p,0} on the left."""
        n = self.n
        cells = [str(x) for row in self.h for x in row]
        width = max(len(c) for c in cells)
        lines = []
        for k in range(2 * n, -1, -1):
            entries = [self.h[p][k - p] for p in range(min(n, k), max(0, k - n) - 1, -1)]
            indent = abs(n - k) * (width + 1)
            lines.append(" " * indent + (" " * (width + 2)).join(str(x).center(width) for x in entries))
        return "\n".join(line.rstrip() for line in lines)

    __str__ = pretty


def flag_diamond(rs: RootSystem, theta: Iterable[int] = (), cap: int = DEFAULT_ORBIT_CAP) -> HodgeDiamond:
    return HodgeDiamond.diagonal(flag_length_profile(rs, theta, cap).counts)


def mirror_reflect(d: HodgeDiamond) -> HodgeDiamond:
    """h'[p][q] = h[n-p][q]: the reflection exchanging h^{p,q} and h^{n-p,q}."""
    n = d.n
    return HodgeDiamond(n, tuple(tuple(d.h[n - p][q] for q in range(n + 1)) for p in range(n + 1)))


@dataclass(frozen=True)
class DiamondChecks:
    serre: bool
    conjugation: bool
    connected: bool
    vampire_flag: bool

    def to_json(self) -> dict:
        return {
            "serre": self.serre,
            "conjugation": self.conjugation,
            "connected": self.connected,
            "vampire_flag": self.vampire_flag,
        }


def _predicates(d: HodgeDiamond) -> tuple[bool, bool, bool]:
    n, h = d.n, d.h
    serre = all(h[p][q] == h[n - p][n - q] for p in range(n + 1) for q in range(n + 1))
    conj = all(h[p][q] == h[q][p] for p in range(n + 1) for q in range(n + 1))
    return serre, conj, h[0][0] == 1


def diamond_checks(d: HodgeDiamond) -> DiamondChecks:
    """Symmetry predicates plus the vampire screen.

    ``vampire_flag`` is set when the mirror pair (d, mirror_reflect(d)) is not
    a pair of admissible diamonds: one of them fails Serre symmetry,
    conjugation symmetry or h^{0,0} = 1. It is a necessary-condition screen
    for a connected compact Kahler mirror, not a proof that none exists.
    """
    own = _predicates(d)
    vampire = not (all(own) and all(_predicates(mirror_reflect(d))))
    return DiamondChecks(*own, vampire)


def flag_dimension(rs: RootSystem, theta: Iterable[int] = ()) -> int:
    """Complex dimension of G/P_Theta: positive roots outside the Theta subsystem."""
    theta = _check_theta(rs, theta)
    return len(rs.positive_roots) - len(subsystem_positive_roots(rs, theta))


def coset_count(rs: RootSystem, theta: Iterable[int] = ()) -> int:
    return parabolic_data(rs, _check_theta(rs, theta)).orbit_index
