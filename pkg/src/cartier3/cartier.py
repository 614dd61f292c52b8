"""Cube-part decomposition and a-numbers of y^2 = f(x) in characteristic 3.

Three independent routes to the a-number are implemented and cross-checked:

* kernel dimension of the matrix of the cube-part action on the monomial
  differential basis,
* nullity of the coefficient constraint on degree-capped polynomials Q
  whose cube parts pair to zero against those of f,
* the first-minimum formula m - mu1 + 1 on the orthogonal complement of
  the cube-part triple, with its three excluded degree situations.

All three accept any nonzero cubefree f of degree 2g + eps (monicity is
not required; scaling f scales the cube parts by a cube root, which leaves
every rank and solution space unchanged).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from . import _linalg
from .gf import Field
from .poly import Poly, cube_split, is_cubefree


@dataclass(frozen=True)
class CubeParts:
    """The triple (c0, c1, c2) with f = c0^3 + c1^3*X + c2^3*X^2."""

    c0: Poly
    c1: Poly
    c2: Poly

    def recompose(self) -> Poly:
        x = Poly.x(self.c0.field)
        return (
            self.c0 * self.c0 * self.c0
            + self.c1 * self.c1 * self.c1 * x
            + self.c2 * self.c2 * self.c2 * x * x
        )


def cube_parts(f: Poly) -> CubeParts:
    """Cube-part decomposition, validated by recomposition."""
    c0, c1, c2 = cube_split(f)
    parts = CubeParts(c0, c1, c2)
    if parts.recompose() != f:
        raise AssertionError("cube-part recomposition failed")
    return parts


def _genus_params(f: Poly, g: int):
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if f.field.p != 3:
        raise ValueError("a-number computation requires characteristic 3")
    d = f.degree
    eps = d - 2 * g
    if eps not in (1, 2):
        raise ValueError(f"deg f = {d} is not 2g+1 or 2g+2 for g = {g}")
    if not is_cubefree(f):
        raise ValueError("f must be cubefree")
    return d, eps


@dataclass(frozen=True)
class CartierMatrix:
    """g x g matrix of the cube-part action; column j holds the image of
    the j-th basis monomial differential."""

    field: Field
    g: int
    entries: tuple  # tuple of row tuples, element indices

    def rank(self) -> int:
        return _linalg.rank([list(r) for r in self.entries], self.field)


def cartier_matrix(f: Poly, g: int) -> CartierMatrix:
    """Matrix of the action on span{w, Xw, ..., X^(g-1)w}.

    Basis index j = 3t + r maps to X^t times the (2-r)-th cube part.  For
    cubefree f the degree bounds keep every image below degree g, which is
    asserted during assembly.
    """
    if g < 1:
        raise ValueError("matrix requires g >= 1")
    _genus_params(f, g)
    c = cube_split(f)
    rows = [[0] * g for _ in range(g)]
    for j in range(g):
        r = j % 3
        t = j // 3
        src = c[2 - r]
        for s, coeff in enumerate(src.coeffs):
            if coeff:
                row = t + s
                if row >= g:
                    raise AssertionError("cube-part action escaped the holomorphic basis")
                rows[row][j] = coeff
    return CartierMatrix(f.field, g, tuple(tuple(r) for r in rows))


def a_number_kernel(f: Poly, g: int) -> int:
    """a-number as the kernel dimension of the cube-part action."""
    _genus_params(f, g)
    if g == 0:
        return 0
    return g - cartier_matrix(f, g).rank()


def a_number_fundeq(f: Poly, g: int) -> int:
    """a-number as the dimension of the space of admissible Q.

    Q ranges over polynomials whose cube parts (q0, q1, q2) satisfy the
    degree caps (g-1)/3, (g-2)/3, (g-3)/3 and pair to zero against the
    cube parts of f: q2*c0(f) + q1*c1(f) + q0*c2(f) = 0.
    """
    _genus_params(f, g)
    if g == 0:
        return 0
    field = f.field
    c0, c1, c2 = cube_split(f)
    blocks = []  # (multiplier poly, number of unknown coefficients)
    for mult, cap in ((c0, g - 3), (c1, g - 2), (c2, g - 1)):
        n = max(0, cap // 3 + 1)
        blocks.append((mult, n))
    ncols = sum(n for _, n in blocks)
    nrows = len(f.coeffs) // 3 + 1 + (g - 1) // 3 + 1
    rows = [[0] * ncols for _ in range(nrows)]
    col = 0
    for mult, n in blocks:
        for j in range(n):
            for s, coeff in enumerate(mult.coeffs):
                rows[j + s][col] = coeff
            col += 1
    return ncols - _linalg.rank(rows, field)


@dataclass(frozen=True)
class HeightANumber:
    a: int
    mu1: int | None  # None when g = 0 or no bounded solution exists
    exceptional_case: int | None  # 1, 2 or 3; None when no case fired


def a_number_height(f: Poly, g: int) -> HeightANumber:
    """a-number via the first minimum of the orthogonal complement.

    With m = [(g-1)/3] and mu1 the minimal height of a coprime solution of
    the pairing equation, the result is 0 when mu1 > m and otherwise
    m - mu1 + 1, dropping by one exactly when the minimal solution hits
    one of the three excluded (g mod 3, eps, degree) situations.
    """
    from .heights import TripleVec, mu1 as _mu1  # local import, no cycle at module load

    d, eps = _genus_params(f, g)
    if g == 0:
        return HeightANumber(0, None, None)
    c0, c1, c2 = cube_split(f)
    m = (g - 1) // 3
    normal = TripleVec(c0, c1, c2)
    level, witnesses = _mu1_all_witnesses(normal, m)
    if level is None:
        return HeightANumber(0, None, None)
    if len(witnesses) > 1:
        # ruled out for complements arising from cubefree f; if it ever
        # fires the kernel oracle stays authoritative
        warnings.warn(
            "multiple minimal solutions at the first minimum; "
            "using the first in enumeration order",
            RuntimeWarning,
        )
    x1, x2, x3 = witnesses[0]  # (c2(Q), c1(Q), c0(Q))
    gm = g % 3
    case = None
    if gm == 1 and eps == 2 and x1.degree == level:
        case = 1
    elif gm == 1 and eps == 1 and x2.degree == level:
        case = 2
    elif gm == 2 and eps == 1 and x1.degree == level:
        case = 3
    a = m - level + 1 - (1 if case else 0)
    return HeightANumber(a, level, case)


def _mu1_all_witnesses(normal, lcap):
    """First level l <= lcap with solutions, plus every solution line."""
    from .heights import solution_lines_at_level

    for l in range(lcap + 1):
        lines = solution_lines_at_level(normal, l)
        if lines:
            return l, lines
    return None, []


@dataclass(frozen=True)
class ANumberReport:
    """The three oracle values plus the height-route diagnostics.

    Construction fails if the oracles disagree; that is a library bug,
    never a property of the input.
    """

    a_kernel: int
    a_fundeq: int
    a_height: int
    mu1: int | None
    exceptional_case: int | None

    def __post_init__(self):
        if not (self.a_kernel == self.a_fundeq == self.a_height):
            raise AssertionError(
                f"a-number oracles disagree: kernel={self.a_kernel} "
                f"fundeq={self.a_fundeq} height={self.a_height}"
            )

    @property
    def a(self) -> int:
        return self.a_kernel


def a_number_report(f: Poly, g: int) -> ANumberReport:
    hk = a_number_kernel(f, g)
    hf = a_number_fundeq(f, g)
    hh = a_number_height(f, g)
    return ANumberReport(hk, hf, hh.a, hh.mu1, hh.exceptional_case)
