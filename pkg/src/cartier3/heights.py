"""Heights on triples of polynomials and exact subspace counting.

A nonzero coprime triple (A1, A2, A3) spans a line of height max(deg A_i);
the same triple read as a hyperplane normal gives a plane of that height.
Everything here works over any finite field.

The counting operations pair an exhaustive measurement with the matching
closed form and report both.  Measurements for the S/T/N families come
from one sweep per (field, m) that classifies every ordered coprime triple
of max degree m by its minimal solution height and the degree profile of
the minimal solutions; individual counts are then slice sums, so every
query against the same (field, m) is answered from identical data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels, _linalg
from .gf import Field
from .poly import Poly

DEFAULT_BUDGET = 10**9

H_CAP_MU2 = 8  # brute-force second minimum refuses larger inputs


class BudgetError(RuntimeError):
    """An enumeration would exceed the configured work-unit budget."""


class RegimeError(ValueError):
    """The requested parameters fall outside the proven closed forms."""


def _check_budget(work: int, budget: int, what: str):
    if work > budget:
        raise BudgetError(f"{what} needs {work} work units, budget is {budget}")


class TripleVec:
    """Ordered coprime polynomial triple; represents a line (or a plane
    normal) in rational-function 3-space.

    The constructor divides out the monic gcd, so the stored triple is
    always coprime; the height is the maximum component degree.
    """

    __slots__ = ("a1", "a2", "a3")

    def __init__(self, a1: Poly, a2: Poly, a3: Poly):
        if a1.is_zero() and a2.is_zero() and a3.is_zero():
            raise ValueError("the zero triple has no height")
        if not (a1.field is a2.field is a3.field):
            raise ValueError("components belong to different fields")
        g = a1.gcd(a2).gcd(a3)
        if g.degree > 0:
            a1, a2, a3 = a1 // g, a2 // g, a3 // g
        self.a1 = a1
        self.a2 = a2
        self.a3 = a3

    @property
    def field(self) -> Field:
        return self.a1.field

    @property
    def components(self):
        return (self.a1, self.a2, self.a3)

    @property
    def height(self) -> int:
        return int(max(c.degree for c in self.components))

    def dot(self, other: "TripleVec") -> Poly:
        a, b = self.components, other.components
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]

    def __eq__(self, other):
        return isinstance(other, TripleVec) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"TripleVec({self.a1!s}; {self.a2!s}; {self.a3!s})"


def _level_matrix_rows(A: TripleVec, l: int):
    """Rows of the linear system for solutions x with deg(x_i) <= l of
    x1*A1 + x2*A2 + x3*A3 = 0, unknown coefficients grouped by component."""
    comps = A.components
    adeg = max(len(c.coeffs) for c in comps)
    nr = adeg + l + 1
    nc = 3 * (l + 1)
    rows = [[0] * nc for _ in range(nr)]
    for i, comp in enumerate(comps):
        base = i * (l + 1)
        for j in range(l + 1):
            for t, coeff in enumerate(comp.coeffs):
                rows[j + t][base + j] = coeff
    return rows, nc


def solution_lines_at_level(A: TripleVec, l: int):
    """One coprime representative per solution line of height exactly l.

    Enumerates the projective lines of the bounded-degree solution space
    and keeps those whose coprime form has height l, in deterministic
    order.
    """
    field = A.field
    rows, nc = _level_matrix_rows(A, l)
    basis = _linalg.nullspace(rows, nc, field)
    if not basis:
        return []
    q = field.q
    dim = len(basis)
    lines = []

    # one representative per projective line: leading combo coefficient 1,
    # earlier basis vectors lead first
    def extend(depth, acc):
        if depth == dim:
            lines.append(acc)
            return
        vec = basis[depth]
        for c in range(q):
            if c == 0:
                extend(depth + 1, list(acc))
            else:
                row = field._mul[c]
                extend(depth + 1, [field._add[x][row[y]] for x, y in zip(acc, vec)])

    for lead in range(dim):
        extend(lead + 1, list(basis[lead]))
    out = []
    w = l + 1
    for vec in lines:
        polys = tuple(Poly(field, vec[i * w : (i + 1) * w]) for i in range(3))
        tv = TripleVec(*polys)
        if tv.height == l:
            out.append(tv.components)
    return out


def mu1(A: TripleVec):
    """First successive minimum of the plane orthogonal to A.

    Returns (l, witness): the smallest height of a nonzero solution of the
    orthogonality equation and the first witness in enumeration order.
    Terminates by height(A)//2.
    """
    h = A.height
    for l in range(h + 1):
        lines = solution_lines_at_level(A, l)
        if lines:
            return l, TripleVec(*lines[0])
    raise AssertionError("no solution up to the height bound")  # unreachable


def mu2_bruteforce(A: TripleVec) -> int:
    """Second successive minimum by exhausting candidate levels.

    At each level j the bounded-degree solution space is compared against
    the polynomial multiples of the first-minimum witness; the first level
    with anything extra admits a basis of max height j.  Test-scale only.
    """
    h = A.height
    if h > H_CAP_MU2:
        raise BudgetError(f"second minimum limited to height {H_CAP_MU2}, got {h}")
    m1, _ = mu1(A)
    field = A.field
    for j in range(m1, h + 1):
        rows, nc = _level_matrix_rows(A, j)
        dim = len(_linalg.nullspace(rows, nc, field))
        if dim > j - m1 + 1:
            return j
    raise AssertionError("second minimum not found up to the height bound")


# -- closed forms --------------------------------------------------------------


def _exact_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise AssertionError(f"closed form is not an integer: {x}")
    return int(x)


def lines_formula(q: int, n: int, k: int) -> int:
    """Number of one-dimensional subspaces of height k in n-space."""
    if k == 0:
        return (q**n - 1) // (q - 1)
    return _exact_int(Fraction(q ** (n * k - n + 1) * (q**n - 1) * (q ** (n - 1) - 1), q - 1))


def planes_over_line_formula(q: int, l: int, k: int) -> int:
    """Number of planes of height l + k over a fixed line of height l."""
    if k < 1:
        raise RegimeError("plane counting requires k >= 1")
    return q ** (2 * k + l - 1) * (q * q - 1)


def _S_formula_total(q: int, m: int, l=None) -> Fraction:
    if l is None:
        if m == 0:
            return Fraction(q**3 - 1)
        return Fraction(q ** (3 * m - 2) * (q**3 - 1) * (q**2 - 1))
    if m > 2 * l:
        if l > 0:
            return Fraction(q ** (2 * (m + l) - 3) * (q**3 - 1) * (q**2 - 1) ** 2)
        return Fraction(q ** (2 * m - 1) * (q**3 - 1) * (q**2 - 1))
    if m == 2 * l and l > 0:
        return _S_formula_total(q, m) * Fraction(q - 1, q)
    raise RegimeError(f"no closed form for S(m={m}, l={l})")


def S_formula(q: int, m: int, l=None, R=None) -> int:
    """Closed form for |S| and its degree-pattern refinements |S_R|."""
    total = _S_formula_total(q, m, l)
    if R is None:
        return _exact_int(total)
    R = frozenset(R)
    if not R or not R <= {1, 2, 3}:
        raise ValueError("R must be a nonempty subset of {1, 2, 3}")
    if l is not None and m == 2 * l and l > 0:
        return _exact_int(Fraction(S_formula(q, m, None, R)) * Fraction(q - 1, q))
    return _exact_int(total * (q - 1) ** (len(R) - 1) / (1 + q + q * q))


def T_formula(q: int, m: int, l: int, R=None) -> int:
    """Closed form for |T| and |T_R|; proven only for m > 2l."""
    if m <= 2 * l:
        raise RegimeError(f"no closed form for T(m={m}, l={l})")
    s = _S_formula_total(q, m, l)
    s1 = s / (1 + q + q * q)
    if R is None:
        return _exact_int(s * q * q / (1 + q + q * q))
    R = frozenset(R)
    if R in ({1}, {3}):
        return _exact_int(q * s1 / (q + 1))
    if R == {2}:
        return 0
    if R in ({1, 2}, {2, 3}):
        return _exact_int(q * (q - 1) * s1 / (q + 1))
    if R == {1, 3}:
        return _exact_int((q - 1) * q * s1 / (q + 1))
    if R == {1, 2, 3}:
        return _exact_int(q * (q - 1) ** 2 * s1 / (q + 1))
    raise ValueError("R must be a nonempty subset of {1, 2, 3}")


def Tprime_formula(q: int, m: int, l: int, R=None) -> int:
    """Closed form for |T'| and |T'_R|; proven only for m > 2l."""
    if m <= 2 * l:
        raise RegimeError(f"no closed form for T'(m={m}, l={l})")
    s = _S_formula_total(q, m, l)
    s1 = s / (1 + q + q * q)
    if R is None:
        return _exact_int(s / (1 + q + q * q))
    R = frozenset(R)
    if 3 in R:
        return 0
    if R in ({1}, {2}):
        return _exact_int(s1 / (q + 1))
    if R == {1, 2}:
        return _exact_int((q - 1) * s1 / (q + 1))
    raise ValueError("R must be a nonempty subset of {1, 2, 3}")


def N_formula(q: int, variant: int, m: int, l: int, primed: bool = False) -> int:
    """Closed forms for the monic-first-component counts N1, N2, N3.

    The primed counts (minimal solution with deg(P2) < l) equal the
    unprimed ones divided by q + 1 and exist only for m > 2l.
    """
    if variant not in (1, 2, 3):
        raise ValueError("variant must be 1, 2 or 3")
    if m > 2 * l:
        if variant == 1:
            base = (
                (q**2 - 1) ** 2 * q ** (2 * (m + l) - 1)
                if l > 0
                else (q**2 - 1) * q ** (2 * m + 1)
            )
        elif variant == 2:
            base = (
                (q**2 - 1) ** 2 * q ** (2 * (m + l) - 3)
                if l > 0
                else (q**2 - 1) * q ** (2 * m - 1)
            )
        else:
            base = (
                (q**2 - 1) ** 2 * q ** (2 * (m + l) - 2)
                if l > 0
                else (q**2 - 1) * q ** (2 * m)
            )
        if primed:
            return _exact_int(Fraction(base, q + 1))
        return base
    if m == 2 * l and l > 0 and not primed:
        exp = {1: 3 * m - 1, 2: 3 * m - 3, 3: 3 * m - 2}[variant]
        return (q - 1) * (q**2 - 1) * q**exp
    raise RegimeError(f"no closed form for N{variant}(m={m}, l={l}, primed={primed})")


# -- measurement ---------------------------------------------------------------


@dataclass(frozen=True)
class CountReport:
    label: str
    q: int
    measured: int
    formula: int

    @property
    def matches(self) -> bool:
        return self.measured == self.formula


class SweepTable:
    """All classification counters for ordered coprime triples of max
    degree m over one field.

    counts has shape (m//2 + 1, 8, 2, 2, 2) indexed by (minimal solution
    height, degree-pattern mask, first-component monic-of-degree-m flag,
    some-solution-has-deg(P2)=l flag, strict-top-P3 flag).
    """

    def __init__(self, field: Field, m: int, counts, coprime_total: int,
                 multiplicity_violations: int, unsolved: int):
        self.field = field
        self.m = m
        self.counts = counts
        self.coprime_total = coprime_total
        self.multiplicity_violations = multiplicity_violations
        self.unsolved = unsolved

    @property
    def lmax(self) -> int:
        return self.m // 2

    def _mask_list(self, R):
        if R is None:
            return list(range(8))
        R = frozenset(R)
        if not R or not R <= {1, 2, 3}:
            raise ValueError("R must be a nonempty subset of {1, 2, 3}")
        mask = (1 if 1 in R else 0) | (2 if 2 in R else 0) | (4 if 3 in R else 0)
        return [mask]

    def _sum(self, ls, masks, monics, tfs, tps) -> int:
        total = 0
        for l in ls:
            for msk in masks:
                for mo in monics:
                    for tf in tfs:
                        for tp in tps:
                            total += int(self.counts[l, msk, mo, tf, tp])
        return total

    def S(self, l=None, R=None) -> int:
        ls = range(self.lmax + 1) if l is None else [l]
        return self._sum(ls, self._mask_list(R), (0, 1), (0, 1), (0, 1))

    def T(self, l: int, R=None) -> int:
        return self._sum([l], self._mask_list(R), (0, 1), (1,), (0, 1))

    def Tprime(self, l: int, R=None) -> int:
        return self._sum([l], self._mask_list(R), (0, 1), (0, 1), (1,))

    def N(self, variant: int, l: int, primed: bool = False) -> int:
        masks = {1: [1, 3, 5, 7], 2: [1], 3: [1, 3]}[variant]
        tfs = (0,) if primed else (0, 1)
        return self._sum([l], masks, (1,), tfs, (0, 1))


def sweep(field: Field, m: int, workers: int = 1, budget: int = DEFAULT_BUDGET,
          cache=None) -> SweepTable:
    """Classify every ordered triple of max degree m (one pass, cached)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    key = (field.p, field.k, m)
    if cache is not None and key in cache:
        return cache[key]
    q = field.q
    total = q ** (3 * (m + 1))
    _check_budget(total, budget, f"triple sweep at q={q}, m={m}")
    add, neg, mul, inv, _ = field.np_tables()
    parts = _kernels.run_chunked(
        _kernels.heights_sweep_chunk, (q, m, add, neg, mul, inv), total, workers
    )
    merged = parts[0].copy()
    for p in parts[1:]:
        merged += p
    lmax = m // 2
    ncount = (lmax + 1) * 8 * 2 * 2 * 2
    counts = merged[:ncount].reshape(lmax + 1, 8, 2, 2, 2)
    table = SweepTable(field, m, counts, int(merged[ncount]),
                       int(merged[ncount + 1]), int(merged[ncount + 2]))
    if table.unsolved:
        raise AssertionError("a coprime triple had no solution up to m//2")
    if cache is not None:
        cache[key] = table
    return table


def count_lines(field: Field, n: int, k: int, workers: int = 1,
                budget: int = DEFAULT_BUDGET) -> CountReport:
    """Lines of height k in n-space: exhaustive count vs closed form."""
    if n not in (2, 3):
        raise ValueError("line counting supports n in {2, 3}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    q = field.q
    total = q ** (n * (k + 1))
    _check_budget(total, budget, f"line count at q={q}, n={n}, k={k}")
    add, neg, mul, inv, _ = field.np_tables()
    parts = _kernels.run_chunked(
        _kernels.lines_chunk, (q, n, k, add, neg, mul, inv), total, workers
    )
    measured = int(sum(int(p[0]) for p in parts))
    return CountReport(f"N(F^{n}, k={k})", q, measured, lines_formula(q, n, k))


def count_planes_over_line(W: TripleVec, k: int, budget: int = DEFAULT_BUDGET) -> CountReport:
    """Planes through the line spanned by W with height h(W) + k.

    Measured by exact dimension counting: the solutions A of A.W = 0 with
    max degree <= j form a linear space whose size q^dim is computed per
    level; peeling off polynomial multiples of lower levels leaves the
    count of coprime normals of each exact height, and lines are scalar
    classes of those.
    """
    if k < 1:
        raise RegimeError("plane counting requires k >= 1")
    field = W.field
    q = field.q
    l = W.height
    D = l + k
    _check_budget(q ** (2 * D + 2), budget, f"plane count at q={q}, l={l}, k={k}")
    space_sizes = []
    for j in range(D + 1):
        rows, nc = _level_matrix_rows(W, j)
        dim = len(_linalg.nullspace(rows, nc, field))
        space_sizes.append(q**dim)
    coprime = []
    for h in range(D + 1):
        c = space_sizes[h] - 1
        for hp in range(h):
            c -= coprime[hp] * ((q ** (h - hp + 1) - 1) // (q - 1))
        coprime.append(c)
    if coprime[D] % (q - 1):
        raise AssertionError("coprime layer count not divisible by q - 1")
    measured = coprime[D] // (q - 1)
    return CountReport(
        f"N(F^3/W, k={k}) at l={l}", q, measured, planes_over_line_formula(q, l, k)
    )


def count_S(field: Field, m: int, l=None, R=None, workers: int = 1,
            budget: int = DEFAULT_BUDGET, cache=None) -> CountReport:
    """|S(m)|, |S(m, l)| and their degree-pattern refinements."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if l is not None:
        if l < 0:
            raise ValueError("l must be nonnegative")
        if m < 2 * l or (m == 2 * l and l == 0 and m == 0):
            raise RegimeError(f"S(m={m}, l={l}) outside the proven regimes")
    formula = S_formula(field.q, m, l, R)
    table = sweep(field, m, workers, budget, cache)
    measured = table.S(l, R)
    rtxt = "" if R is None else "_" + "".join(str(i) for i in sorted(R))
    ltxt = f", l={l}" if l is not None else ""
    return CountReport(f"S{rtxt}(m={m}{ltxt})", field.q, measured, formula)


def count_T(field: Field, m: int, l: int, primed: bool = False, R=None,
            workers: int = 1, budget: int = DEFAULT_BUDGET, cache=None) -> CountReport:
    """|T(m, l)| / |T'(m, l)| and refinements; requires m > 2l."""
    if l < 0 or m <= 2 * l:
        raise RegimeError(f"T counts are only defined here for m > 2l, got m={m}, l={l}")
    if primed:
        formula = Tprime_formula(field.q, m, l, R)
    else:
        formula = T_formula(field.q, m, l, R)
    table = sweep(field, m, workers, budget, cache)
    measured = table.Tprime(l, R) if primed else table.T(l, R)
    name = "T'" if primed else "T"
    rtxt = "" if R is None else "_" + "".join(str(i) for i in sorted(R))
    return CountReport(f"{name}{rtxt}(m={m}, l={l})", field.q, measured, formula)


def count_N(field: Field, variant: int, m: int, l: int, primed: bool = False,
            workers: int = 1, budget: int = DEFAULT_BUDGET, cache=None) -> CountReport:
    """The monic-first-component counts N1, N2, N3 and primed variants."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    if primed and m <= 2 * l:
        raise RegimeError("primed counts require m > 2l")
    if m < 2 * l or (m == 2 * l and l == 0):
        raise RegimeError(f"N{variant}(m={m}, l={l}) outside the proven regimes")
    formula = N_formula(field.q, variant, m, l, primed)
    table = sweep(field, m, workers, budget, cache)
    measured = table.N(variant, l, primed)
    tick = "'" if primed else ""
    return CountReport(f"N{variant}{tick}(m={m}, l={l})", field.q, measured, formula)
