"""Exact root systems, Weyl group orbits and parabolic data for simple types A-G.

Cartan vectors are tuples of :class:`fractions.Fraction` in the simple-root
basis. The Cartan subalgebra is identified with its dual through the
invariant form ``B_ij = d_i * a_ij`` where ``a_ij = 2(a_i, a_j)/(a_i, a_i)``
and the short simple roots have squared length 2.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_ORBIT_CAP = 10**6

CartanVector = tuple  # tuple[Fraction, ...]
Root = tuple  # tuple[int, ...]


class InputError(ValueError):
    """Rejected input (bad type, bad rank, dimension mismatch, non-root...)."""


class OrbitTooLarge(RuntimeError):
    """Raised when an orbit or coset enumeration would exceed the cap."""

    def __init__(self, orbit_index: int, cap: int):
        self.orbit_index = orbit_index
        self.cap = cap
        super().__init__(
            f"orbit too large ({orbit_index} > cap {cap}), use orbit_index"
        )


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in "ABCDEFG" or len(self.series) != 1:
            raise InputError(f"unknown Cartan series {self.series!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InputError(f"rank must be a positive integer, got {self.rank!r}")
        if self.series in _MIN_RANK and self.rank < _MIN_RANK[self.series]:
            raise InputError(
                f"{self.series}{self.rank}: rank must be >= {_MIN_RANK[self.series]}"
            )
        if self.series in _EXCEPTIONAL_RANKS and self.rank not in _EXCEPTIONAL_RANKS[self.series]:
            raise InputError(f"{self.series}{self.rank} is not a valid Cartan type")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        s = text.strip().replace("_", "")
        if len(s) < 2 or not s[1:].isdigit() or s[0].upper() not in "ABCDEFG":
            raise InputError(f"cannot parse Cartan type {text!r} (expected e.g. 'A2')")
        return cls(s[0].upper(), int(s[1:]))

    def __str__(self):
        return f"{self.series}{self.rank}"

    @property
    def notes(self) -> list[str]:
        if self.series == "C" and self.rank == 2:
            return ["C2 is isomorphic to B2 (simple roots listed in the C labelling)"]
        return []


def _dynkin(t: CartanType) -> tuple[list[int], list[tuple[int, int]]]:
    """Symmetrizers d_i and the edges of the Dynkin diagram (0-based, Bourbaki labels)."""
    n = t.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    if t.series == "A":
        return [1] * n, chain
    if t.series == "B":
        return [2] * (n - 1) + [1], chain
    if t.series == "C":
        return [1] * (n - 1) + [2], chain
    if t.series == "D":
        return [1] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if t.series == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        return [1] * n, edges
    if t.series == "F":
        return [2, 2, 1, 1], chain
    # G2: alpha_1 short, alpha_2 long
    return [1, 3], chain


def classical_weyl_order(t: CartanType) -> int:
    n = t.rank
    if t.series == "A":
        return math.factorial(n + 1)
    if t.series in "BC":
        return 2**n * math.factorial(n)
    if t.series == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}[str(t)]


def classical_positive_root_count(t: CartanType) -> int:
    n = t.rank
    if t.series == "A":
        return n * (n + 1) // 2
    if t.series in "BC":
        return n * n
    if t.series == "D":
        return n * (n - 1)
    return {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}[str(t)]


def degrees_from_roots(positive_roots: Iterable[Root]) -> list[int]:
    """Degrees of the basic invariants, read off the root height distribution.

    The exponents form the partition dual to ``k -> #{positive roots of height k}``.
    Works for any (possibly reducible) root subsystem.
    """
    heights: dict[int, int] = {}
    for r in positive_roots:
        h = sum(r)
        heights[h] = heights.get(h, 0) + 1
    degrees = []
    for h in sorted(heights):
        mult = heights[h] - heights.get(h + 1, 0)
        degrees.extend([h + 1] * mult)
    return degrees


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    symmetrizers: tuple[int, ...]
    form_matrix: tuple[tuple[int, ...], ...]
    cartan_matrix: tuple[tuple[int, ...], ...] = field(init=False)
    positive_roots: tuple[Root, ...] = field(init=False)

    def __post_init__(self):
        n = self.rank
        a = tuple(
            tuple(self.form_matrix[i][j] // self.symmetrizers[i] for j in range(n))
            for i in range(n)
        )
        object.__setattr__(self, "cartan_matrix", a)
        object.__setattr__(self, "positive_roots", self._generate_positive_roots())

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    def coroot_pairing(self, root: Root, i: int) -> int:
        """<root, alpha_i^vee> for an integer root vector."""
        return sum(self.cartan_matrix[i][j] * root[j] for j in range(self.rank))

    def _generate_positive_roots(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            r = queue.popleft()
            for i in range(n):
                c = self.coroot_pairing(r, i)
                s = tuple(r[j] - (c if j == i else 0) for j in range(n))
                if all(x >= 0 for x in s) and s not in seen:
                    seen.add(s)
                    queue.append(s)
        return tuple(sorted(seen, key=lambda r: (sum(r), r)))

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        neg = tuple(tuple(-x for x in r) for r in self.positive_roots)
        return self.positive_roots + neg

    @cached_property
    def degrees(self) -> list[int]:
        return degrees_from_roots(self.positive_roots)

    @property
    def weyl_order(self) -> int:
        return classical_weyl_order(self.cartan_type)

    def simple_root(self, i: int) -> CartanVector:
        return tuple(Fraction(int(i == j)) for j in range(self.rank))

    def fundamental_weight(self, i: int) -> CartanVector:
        return self.from_weight_basis([int(i == j) for j in range(self.rank)])

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return _inverse(self.cartan_matrix)

    def from_weight_basis(self, coeffs: Sequence) -> CartanVector:
        """Fundamental-weight coordinates -> simple-root coordinates (A^-1 column combination)."""
        _check_length(self, coeffs)
        coeffs = [Fraction(c) for c in coeffs]
        inv = self.inverse_cartan
        n = self.rank
        return tuple(sum((inv[i][j] * coeffs[j] for j in range(n)), Fraction(0)) for i in range(n))

    def to_weight_basis(self, v: CartanVector) -> CartanVector:
        _check_length(self, v)
        n = self.rank
        return tuple(sum((self.cartan_matrix[i][j] * v[j] for j in range(n)), Fraction(0)) for i in range(n))


def _inverse(m) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def build_root_system(t: CartanType | str) -> RootSystem:
    if isinstance(t, str):
        t = CartanType.parse(t)
    d, edges = _dynkin(t)
    n = t.rank
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = 2 * d[i]
    for i, j in edges:
        b[i][j] = b[j][i] = -max(d[i], d[j])
    return RootSystem(t, tuple(d), tuple(tuple(row) for row in b))


def vector(values: Iterable) -> CartanVector:
    return tuple(Fraction(v) for v in values)


def _check_length(rs: RootSystem, v) -> None:
    if len(v) != rs.rank:
        raise InputError(f"vector of length {len(v)} does not match rank {rs.rank}")


def pairing(rs: RootSystem, v, w) -> Fraction:
    _check_length(rs, v)
    _check_length(rs, w)
    b = rs.form_matrix
    n = rs.rank
    total = Fraction(0)
    for i in range(n):
        if v[i]:
            total += v[i] * sum((b[i][j] * w[j] for j in range(n) if w[j]), Fraction(0))
    return total


def _simple_reflection(rs: RootSystem, i: int, v: CartanVector) -> CartanVector:
    # 2<v, a_i>/<a_i, a_i> = sum_j B_ij v_j / d_i
    c = sum((rs.form_matrix[i][j] * v[j] for j in range(rs.rank)), Fraction(0)) / rs.symmetrizers[i]
    if not c:
        return v
    return tuple(x - c if j == i else x for j, x in enumerate(v))


def reflect(rs: RootSystem, root: int | Sequence, v) -> CartanVector:
    """s_a(v) = v - (2<v,a>/<a,a>) a, for a simple-root index or any root vector."""
    _check_length(rs, v)
    v = vector(v)
    if isinstance(root, int):
        if not 0 <= root < rs.rank:
            raise InputError(f"simple root index {root} out of range")
        return _simple_reflection(rs, root, v)
    alpha = tuple(root)
    if len(alpha) != rs.rank or any(Fraction(x).denominator != 1 for x in alpha):
        raise InputError(f"{root!r} is not a root of {rs.cartan_type}")
    alpha = tuple(int(x) for x in alpha)
    if alpha not in rs.roots:
        raise InputError(f"{root!r} is not a root of {rs.cartan_type}")
    a = vector(alpha)
    c = 2 * pairing(rs, v, a) / pairing(rs, a, a)
    return tuple(x - c * y for x, y in zip(v, a))


@dataclass(frozen=True)
class ParabolicData:
    theta: frozenset[int]
    stabilizer_order: int
    orbit_index: int


def vanishing_simple_roots(rs: RootSystem, h) -> frozenset[int]:
    return frozenset(i for i in range(rs.rank) if pairing(rs, rs.simple_root(i), h) == 0)


def subsystem_positive_roots(rs: RootSystem, theta: Iterable[int]) -> list[Root]:
    theta = set(theta)
    return [r for r in rs.positive_roots if all(r[j] == 0 for j in range(rs.rank) if j not in theta)]


def parabolic_weyl_order(rs: RootSystem, theta: Iterable[int]) -> int:
    return math.prod(degrees_from_roots(subsystem_positive_roots(rs, theta)))


def parabolic_data(rs: RootSystem, theta: Iterable[int]) -> ParabolicData:
    theta = frozenset(theta)
    if any(not 0 <= i < rs.rank for i in theta):
        raise InputError(f"theta {sorted(theta)} contains indices outside 0..{rs.rank - 1}")
    stab = parabolic_weyl_order(rs, theta)
    return ParabolicData(theta, stab, rs.weyl_order // stab)


def stabilizer_data(rs: RootSystem, h0) -> ParabolicData:
    """Theta = simple roots vanishing on h0, and the parabolic orders it fixes.

    Theta is read off the dominant representative of W.h0 (identical to h0
    when h0 is dominant), so that W_Theta is conjugate to the stabilizer of
    h0 and the flag manifold is G/P_Theta.
    """
    _check_length(rs, h0)
    dom = dominant_representative(rs, vector(h0))
    return parabolic_data(rs, vanishing_simple_roots(rs, dom))


def dominant_representative(rs: RootSystem, v: CartanVector) -> CartanVector:
    """Reflect v into the closed fundamental chamber (<v, a_i> >= 0 for all i)."""
    v = vector(v)
    while True:
        for i in range(rs.rank):
            if pairing(rs, rs.simple_root(i), v) < 0:
                v = _simple_reflection(rs, i, v)
                break
        else:
            return v


def is_regular(rs: RootSystem, h) -> tuple[bool, Root | None]:
    """True iff no positive root is orthogonal to h; otherwise one such root as witness."""
    _check_length(rs, h)
    for beta in rs.positive_roots:
        if pairing(rs, beta, h) == 0:
            return False, beta
    return True, None


def _integer_weight_bfs(rs: RootSystem, start: CartanVector) -> tuple[dict[tuple[int, ...], int], int]:
    """BFS over W.start in scaled integer weight coordinates.

    Returns {scaled weight vector: BFS distance} and the scale factor. In
    weight coordinates s_i(lam)_j = lam_j - lam_i * a_ji, which stays integral.
    """
    lam = rs.to_weight_basis(start)
    scale = math.lcm(*(x.denominator for x in lam))
    x0 = tuple(int(x * scale) for x in lam)
    n = rs.rank
    cols = [tuple(rs.cartan_matrix[j][i] for j in range(n)) for i in range(n)]
    dist = {x0: 0}
    queue = deque([x0])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for i in range(n):
            c = x[i]
            if not c:
                continue
            col = cols[i]
            y = tuple(xj - c * aj for xj, aj in zip(x, col))
            if y not in dist:
                dist[y] = d
                queue.append(y)
    return dist, scale


def _scaled_weights_to_roots(rs: RootSystem, points: Iterable[tuple[int, ...]], scale: int) -> list[CartanVector]:
    """Convert scaled weight vectors to root coordinates, in lexicographic order.

    All outputs share one positive denominator, so sorting the integer
    numerators gives the lexicographic order on the rationals.
    """
    inv = rs.inverse_cartan
    den = math.lcm(*(x.denominator for row in inv for x in row))
    m = [[int(x * den) for x in row] for row in inv]
    total = den * scale
    nums = sorted(tuple(sum(a * b for a, b in zip(row, x)) for row in m) for x in points)
    return [tuple(Fraction(c, total) for c in num) for num in nums]


def weyl_orbit(rs: RootSystem, v, cap: int = DEFAULT_ORBIT_CAP) -> list[CartanVector]:
    """W.v by breadth-first closure under simple reflections, sorted lexicographically."""
    if cap <= 0:
        raise InputError("orbit cap must be positive")
    _check_length(rs, v)
    v = vector(v)
    index = stabilizer_data(rs, v).orbit_index
    if index > cap:
        raise OrbitTooLarge(index, cap)
    dist, scale = _integer_weight_bfs(rs, v)
    return _scaled_weights_to_roots(rs, dist, scale)


def orbit_with_lengths(rs: RootSystem, theta: Iterable[int], cap: int = DEFAULT_ORBIT_CAP) -> dict[tuple[int, ...], int]:
    """Orbit of the dominant weight sum_{i not in Theta} w_i, keyed by integer
    weight coordinates, each point tagged with the length of the minimal coset
    representative reaching it (its BFS distance from the dominant point).
    """
    theta = frozenset(theta)
    data = parabolic_data(rs, theta)
    if data.orbit_index > cap:
        raise OrbitTooLarge(data.orbit_index, cap)
    start = rs.from_weight_basis([int(i not in theta) for i in range(rs.rank)])
    dist, _ = _integer_weight_bfs(rs, start)
    return dist
