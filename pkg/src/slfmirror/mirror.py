"""Fibers of the potential g = y on X2 = {u*y = v*(x + 1 + 1/x)} in C x C* x P^1.

Clearing the unit x, the equation reads ``u*y*x = v*P(x)`` with
``P(x) = x^2 + x + 1``. Both charts of P^1 are analysed:

* chart v = 1:  F = u*y - P(x)/x
* chart u = 1:  F = y - v*P(x)/x

A point of X2 is critical for g when dF is proportional to dy, i.e. every
partial derivative of F except d/dy vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from re import fullmatch
from typing import Sequence

from .roots import InputError

Poly = tuple  # ascending Fraction coefficients

P = (Fraction(1), Fraction(1), Fraction(1))  # 1 + x + x^2
# d/dx (P(x)/x) = (x^2 - 1)/x^2; numerator:
DP_NUM = (Fraction(-1), Fraction(0), Fraction(1))

CHI_AFFINE_LINE_MINUS_POINT = 0
CHI_PROJECTIVE_LINE = 2


def _trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_eval(p: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Poly, Poly]:
    a, b = list(_trim(a)), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] -= c * y
        a = list(_trim(a))
    return _trim(q), tuple(a)


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return tuple(c / a[-1] for c in a) if a else ()


def poly_str(p: Sequence[Fraction], var: str = "x") -> str:
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = Fraction(p[k])
        if not c:
            continue
        mag = abs(c)
        coef = "" if mag == 1 and k else str(mag)
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, coef + mono))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


@dataclass(frozen=True, order=True)
class ComplexRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @classmethod
    def parse(cls, text: str) -> "ComplexRational":
        """Accepts 'a', 'a+bi', 'a-bi', 'bi', or 're,im' with rationals 'p/q'."""
        s = text.replace(" ", "")
        try:
            if "," in s:
                re_s, im_s = s.split(",")
                return cls(Fraction(re_s), Fraction(im_s))
            if not s.endswith("i"):
                return cls(Fraction(s))
            m = fullmatch(r"([+-]?[0-9/.]+)?([+-]?)([0-9/.]*)i", s)
            if not m:
                raise ValueError
            real, sign, imag = m.groups()
            if real is not None and not sign and not imag:
                # 'bi' with no real part, e.g. '3i' or '-2/3i'
                return cls(Fraction(0), Fraction(real))
            im_val = Fraction(imag) if imag else Fraction(1)
            return cls(Fraction(real) if real else Fraction(0), -im_val if sign == "-" else im_val)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse complex rational {text!r}") from None

    def __bool__(self):
        return bool(self.re or self.im)

    def to_json(self) -> list[str]:
        return [_fmt(self.re), _fmt(self.im)]

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class AlgebraicPoint:
    """A root of ``minimal_polynomial`` (ascending coefficients) picked by ``label``."""

    label: str
    minimal_polynomial: Poly
    description: str

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "minimal_polynomial": poly_str(self.minimal_polynomial),
            "minimal_polynomial_coefficients": [_fmt(c) for c in self.minimal_polynomial],
            "description": self.description,
        }


CUBE_ROOTS = (
    AlgebraicPoint("omega", P, "primitive cube root of unity exp(2*pi*i/3), root of x^2 + x + 1"),
    AlgebraicPoint("omega^2", P, "primitive cube root of unity exp(4*pi*i/3), root of x^2 + x + 1"),
)


@dataclass(frozen=True)
class FiberComponent:
    description: str
    topology_tag: str
    equations: str

    @property
    def euler(self) -> int:
        return {
            "affine_line_minus_point": CHI_AFFINE_LINE_MINUS_POINT,
            "projective_line": CHI_PROJECTIVE_LINE,
        }[self.topology_tag]

    def to_json(self) -> dict:
        return {
            "description": self.description,
            "topology_tag": self.topology_tag,
            "defining_equations": self.equations,
        }


@dataclass(frozen=True)
class Node:
    y: Fraction
    x: AlgebraicPoint
    uv: tuple[int, int]
    components: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "y": _fmt(self.y),
            "x": self.x.to_json(),
            "uv": f"[{self.uv[0]}:{self.uv[1]}]",
            "components": list(self.components),
        }


@dataclass
class MirrorFiberReport:
    level: ComplexRational
    is_critical: bool
    components: list[FiberComponent]
    nodes: list[Node]
    euler_characteristic: int
    charts: list[str] = field(default_factory=lambda: ["v=1", "u=1"])

    def to_json(self) -> dict:
        return {
            "kind": "mirror_fiber",
            "equation": "u*y = v*(x + 1 + 1/x) in C x C* x P^1, potential g = y",
            "level": self.level.to_json(),
            "is_critical": self.is_critical,
            "components": [c.to_json() for c in self.components],
            "nodes": [n.to_json() for n in self.nodes],
            "euler_characteristic": self.euler_characteristic,
            "charts_analyzed": self.charts,
        }


@dataclass(frozen=True)
class CriticalPoint:
    chart: str
    y: Fraction
    x: AlgebraicPoint
    uv: tuple[int, int]


def critical_points() -> list[CriticalPoint]:
    """Critical points of g = y on X2, chart by chart."""
    points = []
    # chart v=1: dF/du = y and dF/dx = -(x^2 - 1)/x^2 vanish only at y = 0,
    # x = +-1, where F = -P(x)/x must also vanish.
    for x in (Fraction(1), Fraction(-1)):
        assert poly_eval(DP_NUM, x) == 0
        if poly_eval(P, x) == 0:
            raise AssertionError(f"unexpected critical point at x = {x} in chart v=1")
    # chart u=1: dF/dv = -P(x)/x forces P(x) = 0. P is coprime to x^2 - 1, so
    # dF/dx = -v*(x^2 - 1)/x^2 forces v = 0, and then y = v*P(x)/x = 0.
    if len(poly_gcd(P, DP_NUM)) != 1 or len(poly_gcd(P, _derivative(P))) != 1:
        raise AssertionError("x^2 + x + 1 must be squarefree and coprime to x^2 - 1")
    for root in CUBE_ROOTS:
        points.append(CriticalPoint("u=1", Fraction(0), root, (1, 0)))
    return points


def _derivative(p: Sequence[Fraction]) -> Poly:
    return tuple(k * c for k, c in enumerate(p))[1:]


def critical_levels() -> list[ComplexRational]:
    return sorted({ComplexRational(pt.y) for pt in critical_points()})


def classify_fiber(c: ComplexRational | Fraction | int | str) -> MirrorFiberReport:
    if isinstance(c, str):
        c = ComplexRational.parse(c)
    elif not isinstance(c, ComplexRational):
        c = ComplexRational(Fraction(c))
    if c:
        # u*c*x = v*P(x) determines [u:v] = [P(x) : c*x] for every x in C*; v = 0
        # would force u = 0, so the fiber is the graph of a map C* -> P^1.
        comp = FiberComponent(
            f"graph [u:v] = [x^2 + x + 1 : ({c})*x] over x in C*",
            "affine_line_minus_point",
            f"y = {c}, ({c})*x*u = (x^2 + x + 1)*v",
        )
        return MirrorFiberReport(c, c in critical_levels(), [comp], [], comp.euler)

    # y = 0: v*P(x) = 0 splits into {v = 0} and one P^1 over each root of P.
    comps = [FiberComponent("{v = 0}: the section [u:v] = [1:0] over x in C*", "affine_line_minus_point", "y = 0, v = 0")]
    for root in CUBE_ROOTS:
        comps.append(
            FiberComponent(
                f"{{x = {root.label}}} x P^1, {root.description}",
                "projective_line",
                f"y = 0, x^2 + x + 1 = 0 (x = {root.label})",
            )
        )
    # each P^1 meets {v = 0} once at [1:0]; distinct roots keep the P^1's disjoint
    nodes = [Node(Fraction(0), root, (1, 0), (0, k + 1)) for k, root in enumerate(CUBE_ROOTS)]
    euler = sum(comp.euler for comp in comps) - len(nodes)
    return MirrorFiberReport(c, c in critical_levels(), comps, nodes, euler)


def mirror_consistency_report() -> dict:
    """Rank-level quantities of Fuk(LG(2)) next to those of the mirror potential.

    The table only juxtaposes counts; it makes no claim about an equivalence.
    """
    from .fukaya import lg2_category
    from .roots import build_root_system
    from .slf import slf_report

    cat = lg2_category()
    rs = build_root_system("A1")
    alpha = rs.simple_root(0)
    report = slf_report(rs, alpha, alpha)
    fiber0 = classify_fiber(0)
    rows = [
        {
            "quantity": "thimbles in Fuk(LG(2))",
            "value": cat.size,
            "provenance": "LG(2) lemma: generated by two Lagrangians L0, L1",
        },
        {
            "quantity": "critical values of f_H on the sl(2) orbit (H = H0 = diag(1,-1))",
            "value": len(set(report.critical_values)),
            "provenance": "computed: slf_report(A1, alpha, alpha)",
        },
        {
            "quantity": "critical levels of g = y on X2",
            "value": len(critical_levels()),
            "provenance": "computed: Jacobian criterion on charts v=1 and u=1",
        },
        {
            "quantity": "nodes of the critical fiber g = 0",
            "value": len(fiber0.nodes),
            "provenance": "computed: classify_fiber(0)",
        },
        {
            "quantity": "components of the critical fiber g = 0",
            "value": len(fiber0.components),
            "provenance": "computed: classify_fiber(0)",
        },
    ]
    return {
        "kind": "mirror_consistency",
        "rows": rows,
        "note": "rank-level juxtaposition only; no categorical equivalence is verified or claimed",
    }


def consistency_table(report: dict) -> str:
    rows = report["rows"]
    w = max(len(r["quantity"]) for r in rows)
    lines = [f"{'quantity':<{w}}  value  provenance", "-" * (w + 30)]
    for r in rows:
        lines.append(f"{r['quantity']:<{w}}  {r['value']:>5}  {r['provenance']}")
    lines.append(report["note"])
    return "\n".join(lines)
