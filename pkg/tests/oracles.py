"""Brute-force reference computations, kept independent of slfmirror internals.

Weyl groups are generated as explicit integer matrices (acting on
simple-root coordinates) by breadth-first search over words in the simple
reflections. Cartan matrices are typed in here by hand rather than taken
from the library.
"""
from collections import deque
from fractions import Fraction

import sympy as sp

# a[i][j] = <alpha_j, alpha_i^vee>, Bourbaki labels
CARTAN = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "B3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "C2": [[2, -2], [-1, 2]],
    "C3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "G2": [[2, -3], [-1, 2]],
}
# squared lengths of simple roots, short = 2
NORMS = {
    "A1": [2], "A2": [2, 2], "A3": [2, 2, 2],
    "B2": [4, 2], "B3": [4, 4, 2],
    "C2": [2, 4], "C3": [2, 2, 4],
    "G2": [2, 6],
}
SMALL_TYPES = sorted(CARTAN)


def reflection_matrix(a, i):
    """s_i(v) = v - (sum_j a[i][j] v_j) e_i as an integer matrix."""
    n = len(a)
    m = [[int(r == c) for c in range(n)] for r in range(n)]
    for j in range(n):
        m[i][j] -= a[i][j]
    return tuple(tuple(row) for row in m)


def matmul(x, y):
    n = len(x)
    return tuple(tuple(sum(x[r][k] * y[k][c] for k in range(n)) for c in range(n)) for r in range(n))


def apply(m, v):
    return tuple(sum(Fraction(m[r][c]) * v[c] for c in range(len(v))) for r in range(len(m)))


def weyl_group(name):
    """{matrix: length} for every element, length = shortest word length."""
    a = CARTAN[name]
    n = len(a)
    gens = [reflection_matrix(a, i) for i in range(n)]
    ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    lengths = {ident: 0}
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        for g in gens:
            u = matmul(w, g)
            if u not in lengths:
                lengths[u] = lengths[w] + 1
                queue.append(u)
    return lengths


def form(name):
    """Symmetric invariant form in simple-root coordinates: (a_i, a_j) = a[i][j] |a_i|^2 / 2."""
    a, norms = CARTAN[name], NORMS[name]
    n = len(a)
    return [[Fraction(a[i][j] * norms[i], 2) for j in range(n)] for i in range(n)]


def bilinear(b, v, w):
    return sum(v[i] * b[i][j] * w[j] for i in range(len(v)) for j in range(len(w)))


def orbit(name, v):
    return {apply(m, v) for m in weyl_group(name)}


def stabilizer_size(name, v):
    v = tuple(Fraction(x) for x in v)
    return sum(1 for m in weyl_group(name) if apply(m, v) == v)


def coset_length_counts(name, theta):
    """#{w : w(alpha_i) > 0 for i in theta} by length."""
    n = len(CARTAN[name])
    counts = {}
    for m, length in weyl_group(name).items():
        ok = True
        for i in theta:
            image = [m[r][i] for r in range(n)]
            if not all(x >= 0 for x in image):
                ok = False
                break
        if ok:
            counts[length] = counts.get(length, 0) + 1
    return tuple(counts.get(k, 0) for k in range(max(counts) + 1))


def orbit_dimension_sl(diagonal):
    """Complex dimension of the adjoint orbit of diag(...) in sl(n): n^2 - sum mult^2."""
    mult = {}
    for x in diagonal:
        mult[x] = mult.get(x, 0) + 1
    n = len(diagonal)
    return n * n - sum(m * m for m in mult.values())


def coroot_coords_to_diagonal(coords):
    """sum c_i (E_ii - E_{i+1,i+1}) as the diagonal of a traceless matrix."""
    n = len(coords) + 1
    diag = []
    for j in range(n):
        left = coords[j] if j < n - 1 else 0
        right = coords[j - 1] if j > 0 else 0
        diag.append(Fraction(left) - Fraction(right))
    return diag


# Mirror family u*y = v*(x + 1 + 1/x). In each chart of P^1 the equation is
# multiplied by the unit x, giving a polynomial G; a point of {G = 0, x != 0}
# is critical for g = y iff every partial of G other than d/dy vanishes.
x, y, u, v = sp.symbols("x y u v")
CHARTS = {
    "v=1": (x * u * y - (x**2 + x + 1), u),
    "u=1": (x * y - v * (x**2 + x + 1), v),
}


def jacobian_critical_points(level=None):
    """Critical points of y on X2 in both charts (optionally on the fiber y = level)."""
    found = []
    for chart, (g, w) in CHARTS.items():
        eqs = [g, sp.diff(g, x), sp.diff(g, w)]
        if level is not None:
            eqs = [e.subs(y, level) for e in eqs]
        unknowns = [x, w] if level is not None else [x, y, w]
        for sol in sp.solve(eqs, unknowns, dict=True):
            if sp.simplify(sol.get(x, x)) != 0:
                found.append((chart, sol))
    return found
