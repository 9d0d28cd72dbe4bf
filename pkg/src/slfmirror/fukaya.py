"""Rank-level model of the directed category of vanishing cycles.

Objects L_0..L_r are ordered by increasing critical value. Hom(L_i, L_j) is a
graded free module recorded as (degree, rank) pairs: arbitrary data for
i < j, the identity in degree 0 for i = j and zero for i > j. Higher products
are represented only by the flag saying that all of them vanish except the
compositions with identities.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .roots import CartanVector, InputError
from .slf import SLFReport

GradedRanks = tuple  # tuple[tuple[int, int], ...], sorted by degree


def _normalize_ranks(pairs: Sequence[Sequence[int]], where: str) -> GradedRanks:
    merged: dict[int, int] = {}
    for pair in pairs:
        if len(pair) != 2:
            raise InputError(f"Hom data for {where}: expected (degree, rank), got {pair!r}")
        deg, rank = (int(x) for x in pair)
        if rank < 0:
            raise InputError(f"Hom data for {where}: negative rank {rank}")
        merged[deg] = merged.get(deg, 0) + rank
    return tuple((d, r) for d, r in sorted(merged.items()) if r)


@dataclass(frozen=True)
class DirectedCategory:
    objects: tuple[str, ...]
    upper_homs: Mapping[tuple[int, int], GradedRanks]
    products_all_vanish_except_identity: bool = True
    critical_values: tuple[Fraction, ...] | None = None
    critical_points: tuple[CartanVector, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.objects)

    def hom_ranks(self, i: int, j: int) -> GradedRanks:
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise IndexError(f"object index out of range 0..{self.size - 1}: ({i}, {j})")
        if i == j:
            return ((0, 1),)
        if i > j:
            return ()
        return self.upper_homs.get((i, j), ())

    def total_rank(self, i: int, j: int) -> int:
        return sum(r for _, r in self.hom_ranks(i, j))

    def to_json(self) -> dict:
        homs = []
        for i in range(self.size):
            for j in range(self.size):
                homs.append({"source": i, "target": j, "ranks": [list(p) for p in self.hom_ranks(i, j)]})
        out = {
            "kind": "directed_category",
            "objects": list(self.objects),
            "homs": homs,
            "identity_rank_note": "Hom(L_i, L_i) is the base ring: rank 1 in degree 0",
            "products_all_vanish_except_identity": self.products_all_vanish_except_identity,
        }
        if self.critical_values is not None:
            out["critical_values"] = [_fmt(v) for v in self.critical_values]
        if self.critical_points is not None:
            out["critical_points"] = [[_fmt(x) for x in p] for p in self.critical_points]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "DirectedCategory":
        objects = tuple(data["objects"])
        n = len(objects)
        upper = {}
        for entry in data["homs"]:
            i, j = entry["source"], entry["target"]
            ranks = _normalize_ranks(entry["ranks"], f"({i},{j})")
            if i < j:
                if ranks:
                    upper[(i, j)] = ranks
            elif i == j and ranks != ((0, 1),):
                raise InputError(f"End(L_{i}) must be rank 1 in degree 0")
            elif i > j and ranks:
                raise InputError(f"Hom(L_{i}, L_{j}) must vanish for i > j")
        values = data.get("critical_values")
        points = data.get("critical_points")
        base = build_directed_category(n, upper, data.get("products_all_vanish_except_identity", True))
        return cls(
            objects,
            base.upper_homs,
            base.products_all_vanish_except_identity,
            None if values is None else tuple(Fraction(v) for v in values),
            None if points is None else tuple(tuple(Fraction(x) for x in p) for p in points),
        )


def _fmt(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def build_directed_category(
    num_objects: int,
    intersection_data: Mapping[tuple[int, int], Sequence[Sequence[int]]] | None = None,
    products_vanish: bool = True,
) -> DirectedCategory:
    """Directed category on ``num_objects`` objects with Hom(L_i, L_j) for i < j
    given as (degree, rank) pairs in ``intersection_data``."""
    if num_objects < 1:
        raise InputError("a directed category needs at least one object")
    upper = {}
    for (i, j), pairs in (intersection_data or {}).items():
        if not (0 <= i < num_objects and 0 <= j < num_objects):
            raise InputError(f"Hom data for ({i},{j}) refers to a missing object")
        if i >= j:
            raise InputError(f"Hom data may only be given for i < j, got ({i},{j})")
        ranks = _normalize_ranks(pairs, f"({i},{j})")
        if ranks:
            upper[(i, j)] = ranks
    objects = tuple(f"L{i}" for i in range(num_objects))
    return DirectedCategory(objects, dict(sorted(upper.items())), products_vanish)


LG2_HOM = {(0, 1): [(0, 1), (1, 1)]}


def lg2_category() -> DirectedCategory:
    """Two thimbles with Hom(L0, L1) = Z + Z[-1], Hom(L1, L0) = 0."""
    return build_directed_category(2, LG2_HOM, products_vanish=True)


def hom_euler(cat: DirectedCategory, i: int, j: int) -> int:
    return sum((-1) ** deg * rank for deg, rank in cat.hom_ranks(i, j))


def category_from_slf(
    report: SLFReport,
    intersection_data: Mapping[tuple[int, int], Sequence[Sequence[int]]] | None = None,
    products_vanish: bool = True,
) -> DirectedCategory:
    """One object per critical point, ordered by increasing critical value."""
    if report.critical_points is None:
        raise InputError("critical points were not enumerated (cap exceeded); cannot order objects")
    if report.value_collisions:
        raise InputError(
            f"object order undefined, resolve collisions in critical values {report.value_collisions}"
        )
    if not report.is_lefschetz:
        raise InputError("report is not Lefschetz: " + "; ".join(report.explanation))
    order = sorted(range(report.k), key=lambda i: report.critical_values[i])
    base = build_directed_category(report.k, intersection_data, products_vanish)
    return DirectedCategory(
        base.objects,
        base.upper_homs,
        base.products_all_vanish_except_identity,
        tuple(report.critical_values[i] for i in order),
        tuple(report.critical_points[i] for i in order),
    )
