"""Dense univariate polynomials over GF(p^k).

Coefficients are stored low-to-high as element indices of one Field; the
stored tuple never has a trailing zero, and the zero polynomial is the
empty tuple with degree -inf.  Enumeration of monic polynomials is
lexicographic with the low-degree coefficient varying fastest, which makes
the order identical to counting codes 0, 1, ... in base q and lets the
range be split into contiguous chunks for parallel consumption.
"""

from __future__ import annotations

from .gf import Field, FieldElement

NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial over a Field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        idx = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field is not field:
                    raise ValueError("coefficient from a different field")
                idx.append(c.index)
            else:
                i = int(c)
                if not 0 <= i < field.q:
                    raise ValueError(f"coefficient index {i} outside [0, {field.q})")
                idx.append(i)
        while idx and idx[-1] == 0:
            idx.pop()
        self.field = field
        self.coeffs = tuple(idx)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def from_int_coeffs(cls, field: Field, ints) -> "Poly":
        """Coefficients given as integers reduced into the prime subfield.

        Convenient for writing GF(3) polynomials like X^3 - X as
        [0, -1, 0, 1]; only meaningful for k = 1 fields or prime-subfield
        coefficients.
        """
        return cls(field, [i % field.p for i in ints])

    @classmethod
    def from_text(cls, field: Field, text: str) -> "Poly":
        """Parse the canonical comma-separated low-to-high form."""
        text = text.strip()
        if text == "" or text == "0":
            return cls.zero(field)
        return cls(field, [int(t) for t in text.split(",")])

    def to_text(self) -> str:
        """Canonical text form: element indices low-to-high, comma-separated.

        Each index is the base-p encoding of the coordinate vector; the zero
        polynomial serializes as "0".  Round-trips bit-exactly.
        """
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    # -- basic queries --------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int) -> FieldElement:
        c = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(self.field, c)

    def leading_coefficient(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return FieldElement(self.field, self.coeffs[-1])

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.field is self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        return f"Poly({self!s})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("X" if c == 1 else f"{c}*X")
            else:
                parts.append(f"X^{i}" if c == 1 else f"{c}*X^{i}")
        return " + ".join(parts)

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly) or other.field is not self.field:
            raise ValueError("polynomials belong to different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f._add[out[i]][c]
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f._neg[c] for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        out = [0] * (len(a) + len(b) - 1)
        add, mul = f._add, f._mul
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add[out[i + j]][row[y]]
        return Poly(f, out)

    def scale(self, c) -> "Poly":
        """Multiply by a scalar (FieldElement or element index)."""
        f = self.field
        ci = c.index if isinstance(c, FieldElement) else int(c)
        row = f._mul[ci]
        return Poly(f, [row[x] for x in self.coeffs])

    def shift(self, n: int) -> "Poly":
        """Multiply by X^n."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * n + self.coeffs)

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        add, mul, neg = f._add, f._mul, f._neg
        b = other.coeffs
        db = len(b) - 1
        rem = list(self.coeffs)
        da = len(rem) - 1
        if da < db:
            return Poly.zero(f), self
        inv_lead = f._inv[b[db]]
        quo = [0] * (da - db + 1)
        for t in range(da, db - 1, -1):
            c = rem[t]
            if c:
                s = mul[c][inv_lead]
                quo[t - db] = s
                srow = mul[s]
                for j in range(db + 1):
                    rem[t - db + j] = add[rem[t - db + j]][neg[srow[b[j]]]]
        return Poly(f, quo), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        """Scale to leading coefficient 1 (zero polynomial unchanged)."""
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field._inv[self.coeffs[-1]])

    def gcd(self, other: "Poly") -> "Poly":
        """Monic generator of the ideal (self, other); gcd(0, 0) = 0."""
        self._check(other)
        a, b = self, other
        while b.coeffs:
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "Poly":
        """Formal derivative; exponents divisible by p drop out."""
        f = self.field
        p, mul = f.p, f._mul
        out = [0] * max(0, len(self.coeffs) - 1)
        for i in range(1, len(self.coeffs)):
            s = i % p
            if s:
                out[i - 1] = mul[self.coeffs[i]][s]
        return Poly(f, out)

    def evaluate(self, x) -> FieldElement:
        f = self.field
        xi = x.index if isinstance(x, FieldElement) else int(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = f._add[f._mul[acc][xi]][c]
        return FieldElement(f, acc)


# -- squarefree / cubefree ---------------------------------------------------


def is_squarefree(f: Poly) -> bool:
    """True iff f has no repeated irreducible factor.

    Over a perfect field a vanishing derivative means f is a p-th power,
    hence not squarefree unless constant; otherwise gcd(f, f') decides.
    """
    if f.is_zero():
        raise ValueError("squarefreeness is undefined for the zero polynomial")
    if f.degree == 0:
        return True
    fp = f.derivative()
    if fp.is_zero():
        return False
    return f.gcd(fp).degree == 0


def cube_split(f: Poly):
    """The unique (c0, c1, c2) with f = c0^3 + c1^3*X + c2^3*X^2 (p = 3).

    Coefficients split by index mod 3, each pulled back through the inverse
    Frobenius so that cubing restores the original coefficient.
    """
    field = f.field
    if field.p != 3:
        raise ValueError("cube decomposition requires characteristic 3")
    proot = field._proot
    n = len(f.coeffs)
    parts = [[0] * (n // 3 + 1) for _ in range(3)]
    for i, a in enumerate(f.coeffs):
        r = i % 3
        parts[r][(i - r) // 3] = proot[a]
    return tuple(Poly(field, part) for part in parts)


def is_cubefree(f: Poly) -> bool:
    """True iff no irreducible cube divides f; p = 3 only.

    Criterion: the three cube-split components are relatively prime.
    """
    if f.is_zero():
        raise ValueError("cubefreeness is undefined for the zero polynomial")
    c0, c1, c2 = cube_split(f)
    return c0.gcd(c1).gcd(c2).degree == 0


def squarefree_decompose(f: Poly):
    """Write a monic cubefree f as f1 * f2^2 with f1, f2 monic squarefree
    and coprime.  The factorization is unique; the result is validated by
    recomposition before returning."""
    if f.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    if not f.is_monic():
        raise ValueError("squarefree decomposition expects a monic polynomial")
    if not is_cubefree(f):
        raise ValueError("polynomial is not cubefree")
    fp = f.derivative()
    if fp.is_zero():
        # cubefree with zero derivative only happens for constants
        if f.degree == 0:
            return f, Poly.one(f.field)
        raise ValueError("polynomial is not cubefree")
    f2 = f.gcd(fp)
    quo, rem = divmod(f, f2 * f2)
    if not rem.is_zero():
        raise AssertionError("squarefree decomposition failed to divide")
    f1 = quo
    if f1 * f2 * f2 != f or f1.gcd(f2).degree != 0:
        raise AssertionError("squarefree decomposition recomposition failed")
    if not (is_squarefree(f1) and is_squarefree(f2)):
        raise AssertionError("squarefree decomposition parts not squarefree")
    return f1, f2


# -- enumeration -------------------------------------------------------------


def monic_count(field: Field, d: int) -> int:
    return field.q**d


def monic_from_code(field: Field, d: int, code: int) -> Poly:
    """The code-th monic polynomial of degree d (lexicographic order)."""
    q = field.q
    coeffs = []
    for _ in range(d):
        coeffs.append(code % q)
        code //= q
    coeffs.append(1)
    return Poly(field, coeffs)


def enumerate_monic(field: Field, d: int, start: int = 0, stop=None):
    """Monic degree-d polynomials in deterministic lexicographic order.

    start/stop select a contiguous chunk of the q^d codes, so parallel
    consumers can partition the range without coordination.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    total = field.q**d
    if stop is None:
        stop = total
    for code in range(start, min(stop, total)):
        yield monic_from_code(field, d, code)


def chunk_ranges(total: int, n: int):
    """n contiguous [start, stop) ranges covering [0, total)."""
    if n < 1:
        raise ValueError("need at least one chunk")
    bounds = [(i * total) // n for i in range(n + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(n)]
