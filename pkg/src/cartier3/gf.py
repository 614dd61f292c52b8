"""Arithmetic in GF(p^k) for small primes p.

Fields are built deterministically: the modulus of GF(p^k) is the
lexicographically smallest monic irreducible of degree k over GF(p),
comparing coefficient tuples low-degree-first.  An element is a vector of
k residues mod p in the power basis of the modulus, identified with its
index sum(a_i * p**i); index 0 is the zero element.  All field operations
are precomputed into dense tables at construction, so a Field is immutable
and cheap to share, and the tables can be exported as numpy arrays for the
compiled enumeration kernels.
"""

from __future__ import annotations

import numpy as np

# Dense q*q op tables; enough for every desk-scale field used here.
MAX_Q = 1024


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _modp_poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _modp_poly_divmod(a, b, p):
    # b must be nonzero; both are lists of residues, trailing coeff nonzero
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    inv_lead = pow(b[db], p - 2, p)
    quo = [0] * max(0, da - db + 1)
    for t in range(da, db - 1, -1):
        c = a[t]
        if c:
            s = (c * inv_lead) % p
            quo[t - db] = s
            for j in range(db + 1):
                a[t - db + j] = (a[t - db + j] - s * b[j]) % p
    while a and a[-1] == 0:
        a.pop()
    while quo and quo[-1] == 0:
        quo.pop()
    return quo, a


def _modp_irreducible(modulus, p):
    """Trial division of a monic polynomial by every monic polynomial of
    degree at most deg/2 over GF(p)."""
    k = len(modulus) - 1
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for code in range(p**d):
            trial = []
            c = code
            for _ in range(d):
                trial.append(c % p)
                c //= p
            trial.append(1)
            _, rem = _modp_poly_divmod(modulus, trial, p)
            if not rem:
                return False
    return True


def _lex_least_irreducible(p: int, k: int):
    """Smallest monic irreducible of degree k, low-degree coefficients
    compared first."""
    if k == 1:
        return [0, 1]  # X; any monic linear is irreducible, X is lex-least
    # iterate coefficient tuples (c_0, ..., c_{k-1}) in lexicographic order
    total = p**k
    for code in range(total):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        # code order varies c_0 fastest; re-map so c_0 is the slowest digit
        coeffs = coeffs[::-1]
        cand = coeffs + [1]
        if _modp_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldElement:
    """An element of a Field, identified by its index in [0, q)."""

    __slots__ = ("field", "index")

    def __init__(self, field: "Field", index: int):
        self.field = field
        self.index = index

    @property
    def coords(self) -> tuple:
        """Coordinates (a_0, ..., a_{k-1}) w.r.t. the power basis."""
        p, k = self.field.p, self.field.k
        c, out = self.index, []
        for _ in range(k):
            out.append(c % p)
            c //= p
        return tuple(out)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements belong to different fields")
            return other.index
        raise TypeError("expected a FieldElement of the same field")

    def __add__(self, other):
        return FieldElement(self.field, self.field._add[self.index][self._other(other)])

    def __sub__(self, other):
        f = self.field
        return FieldElement(f, f._add[self.index][f._neg[self._other(other)]])

    def __mul__(self, other):
        return FieldElement(self.field, self.field._mul[self.index][self._other(other)])

    def __truediv__(self, other):
        f = self.field
        j = self._other(other)
        if j == 0:
            raise ZeroDivisionError("division by the zero element")
        return FieldElement(f, f._mul[self.index][f._inv[j]])

    def __neg__(self):
        return FieldElement(self.field, self.field._neg[self.index])

    def __pow__(self, n: int):
        f = self.field
        if n < 0:
            return self.inverse() ** (-n)
        r, b = 1, self.index
        while n:
            if n & 1:
                r = f._mul[r][b]
            b = f._mul[b][b]
            n >>= 1
        return FieldElement(f, r)

    def inverse(self):
        if self.index == 0:
            raise ZeroDivisionError("the zero element has no inverse")
        return FieldElement(self.field, self.field._inv[self.index])

    def pth_root(self):
        """Inverse Frobenius; total since x -> x^p is a bijection."""
        return FieldElement(self.field, self.field._proot[self.index])

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.field is self.field
            and other.index == self.index
        )

    def __hash__(self):
        return hash((id(self.field), self.index))

    def __repr__(self):
        return f"GF({self.field.q}):{self.index}"


class Field:
    """GF(p^k) with table-driven arithmetic.

    Immutable after construction; the same (p, k) always yields the same
    modulus, element order and tables, in-process and across processes.
    """

    def __init__(self, p: int, k: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be at least 1")
        q = p**k
        if q > MAX_Q:
            raise ValueError(f"unsupported field size q={q} (maximum {MAX_Q})")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = tuple(_lex_least_irreducible(p, k))
        self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        # element index <-> coordinate vector
        vecs = []
        for idx in range(q):
            c, v = idx, []
            for _ in range(k):
                v.append(c % p)
                c //= p
            vecs.append(v)

        def enc(v):
            out = 0
            for i in range(k - 1, -1, -1):
                out = out * p + v[i]
            return out

        add = [[enc([(x + y) % p for x, y in zip(vecs[a], vecs[b])]) for b in range(q)] for a in range(q)]
        neg = [enc([(-x) % p for x in vecs[a]]) for a in range(q)]

        # reduction vectors for X^j mod modulus, j = 0 .. 2k-2
        red = [[0] * k for _ in range(2 * k - 1)]
        for j in range(k):
            red[j][j] = 1
        cur = [(-c) % p for c in self.modulus[:k]]  # X^k mod modulus
        for j in range(k, 2 * k - 1):
            red[j] = list(cur)
            # multiply by X
            nxt = [0] + cur[:-1]
            carry = cur[-1]
            if carry:
                for i in range(k):
                    nxt[i] = (nxt[i] + carry * ((-self.modulus[i]) % p)) % p
            cur = nxt

        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            va = vecs[a]
            for b in range(a, q):
                conv = _modp_poly_mul(va, vecs[b], p) if a and b else []
                out = [0] * k
                for j, cj in enumerate(conv):
                    if cj:
                        rj = red[j]
                        for i in range(k):
                            out[i] = (out[i] + cj * rj[i]) % p
                e = enc(out)
                mul[a][b] = e
                mul[b][a] = e

        # inverses via extended Euclid on representative polynomials
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._ext_euclid_inverse(vecs[a], enc)
        # Frobenius x -> x^p and its inverse permutation
        frob = [0] * q
        for a in range(q):
            r = 1
            for _ in range(p):
                r = mul[r][a]
            frob[a] = r
        proot = [0] * q
        for a in range(q):
            proot[frob[a]] = a

        self._add = tuple(tuple(r) for r in add)
        self._neg = tuple(neg)
        self._mul = tuple(tuple(r) for r in mul)
        self._inv = tuple(inv)
        self._proot = tuple(proot)
        self._frob = tuple(frob)
        self._np_tables = None

    def _ext_euclid_inverse(self, vec, enc):
        p = self.p
        r0, r1 = list(self.modulus), [x for x in vec]
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [], [1]
        while r1:
            q_, r = _modp_poly_divmod(r0, r1, p)
            qs = _modp_poly_mul(q_, s1, p) if q_ and s1 else []
            s = [0] * max(len(s0), len(qs))
            for i, x in enumerate(s0):
                s[i] = x
            for i, x in enumerate(qs):
                s[i] = (s[i] - x) % p
            while s and s[-1] == 0:
                s.pop()
            r0, r1, s0, s1 = r1, r, s1, s
        # r0 is a nonzero constant gcd; scale s0 by its inverse
        c = pow(r0[0], p - 2, p)
        out = [(x * c) % p for x in s0] + [0] * self.k
        return enc(out[: self.k])

    # -- element constructors ------------------------------------------------

    def element(self, value) -> FieldElement:
        """Element from an index in [0, q) or a coordinate tuple."""
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (tuple, list)):
            if len(value) != self.k or any(not 0 <= c < self.p for c in value):
                raise ValueError("coordinate vector out of range")
            idx = 0
            for c in reversed(value):
                idx = idx * self.p + c
            return FieldElement(self, idx)
        idx = int(value)
        if not 0 <= idx < self.q:
            raise ValueError(f"element index {idx} outside [0, {self.q})")
        return FieldElement(self, idx)

    def __call__(self, value) -> FieldElement:
        return self.element(value)

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self):
        """All q elements in index order (zero first)."""
        for idx in range(self.q):
            yield FieldElement(self, idx)

    # -- index-level operations (plumbing for poly and the kernels) ----------

    def add_i(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub_i(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul_i(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg_i(self, a: int) -> int:
        return self._neg[a]

    def inv_i(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("the zero element has no inverse")
        return self._inv[a]

    def proot_i(self, a: int) -> int:
        return self._proot[a]

    def np_tables(self):
        """(add, neg, mul, inv, proot) as int64 numpy arrays, cached."""
        if self._np_tables is None:
            self._np_tables = (
                np.array(self._add, dtype=np.int64),
                np.array(self._neg, dtype=np.int64),
                np.array(self._mul, dtype=np.int64),
                np.array(self._inv, dtype=np.int64),
                np.array(self._proot, dtype=np.int64),
            )
        return self._np_tables

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p and other.k == self.k

    def __hash__(self):
        return hash((self.p, self.k))

    def __repr__(self):
        if self.k == 1:
            return f"Field(GF({self.p}))"
        return f"Field(GF({self.p}^{self.k}))"


def field_new(p: int, k: int) -> Field:
    """Deterministic field constructor (see Field)."""
    return Field(p, k)
