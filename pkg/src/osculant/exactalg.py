"""Exact arithmetic over the rationals.

Multi-index enumeration, sparse multivariate polynomials, rational functions
with a single (powered) denominator base, and exact rank / nullspace kernels.
Coefficients are plain ``int`` or :class:`fractions.Fraction`; integral
fractions are normalised back to ``int`` so that integer-only work stays on the
fast path.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DenominatorVanishes

__all__ = [
    "Fraction",
    "MatrixQ",
    "Poly",
    "RatFunc",
    "bareiss_rank",
    "mi_enumerate",
    "multinomial_weight",
    "nullspace",
    "rank_exact",
    "rref",
    "to_rational",
]


def to_rational(value) -> Rational:
    """Coerce ``value`` to an exact rational, keeping integers as ``int``."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        return to_rational(Fraction(value))
    if isinstance(value, Rational):
        return to_rational(Fraction(value.numerator, value.denominator))
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _div(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
    return _norm(Fraction(a) / b)


# --------------------------------------------------------------------------
# multi-indices


@lru_cache(maxsize=None)
def _exact_order(k: int, t: int) -> tuple[tuple[int, ...], ...]:
    if k == 1:
        return ((t,),)
    out = []
    for first in range(t, -1, -1):
        for rest in _exact_order(k - 1, t - first):
            out.append((first,) + rest)
    return tuple(out)


def mi_enumerate(k: int, t: int, mode: str = "exact") -> list[tuple[int, ...]]:
    """Multi-indices of ``k`` entries, graded by order then descending lex.

    ``mode="exact"`` gives the indices with ``|I| == t``; ``mode="upto"`` gives
    every index with ``|I| <= t``, lowest order first.
    """
    if k < 1 or t < 0:
        raise ValueError(f"need k >= 1 and t >= 0, got k={k}, t={t}")
    if mode == "exact":
        return list(_exact_order(k, t))
    if mode in ("upto", "up-to"):
        out: list[tuple[int, ...]] = []
        for s in range(t + 1):
            out.extend(_exact_order(k, s))
        return out
    raise ValueError(f"unknown enumeration mode {mode!r}")


def multinomial_weight(index: Sequence[int]) -> int:
    """``|I|! / I!``, the Taylor weight of the monomial ``v^I``."""
    w = math.factorial(sum(index))
    for i in index:
        w //= math.factorial(i)
    return w


# --------------------------------------------------------------------------
# polynomials


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    """Sparse polynomial in ``nvars`` variables with rational coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients. Instances are
    treated as immutable.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                c = to_rational(c)
                if c:
                    clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, nvars: int, c=1) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self.nvars}, {self.terms!r})"

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "Poly":
        c = to_rational(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {e: _norm(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = _add_exp(ea, eb)
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(self.nvars, {e: _norm(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def diff(self, i: int) -> "Poly":
        """Partial derivative in variable ``i`` (0-based)."""
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = _norm(c * e[i])
        return Poly._raw(self.nvars, out)

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        powers: dict = {}
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, ei in enumerate(e):
                if ei:
                    key = (i, ei)
                    pw = powers.get(key)
                    if pw is None:
                        pw = powers[key] = point[i] ** ei
                    term = term * pw
            total += term
        return _norm(total) if isinstance(total, Fraction) else total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Compose: replace variable ``i`` by ``images[i]`` (all in one ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else 0
        result = Poly.zero(target)
        cache: dict = {}
        for e, c in self.terms.items():
            term = Poly.const(target, c)
            for i, ei in enumerate(e):
                if ei:
                    key = (i, ei)
                    if key not in cache:
                        cache[key] = images[i] ** ei
                    term = term * cache[key]
            result = result + term
        return result

    def embed(self, nvars: int, offset: int = 0) -> "Poly":
        """Same polynomial in a larger ring, variables shifted by ``offset``."""
        pad_l = (0,) * offset
        pad_r = (0,) * (nvars - offset - self.nvars)
        return Poly._raw(nvars, {pad_l + e + pad_r: c for e, c in self.terms.items()})

    def divexact(self, other: "Poly") -> "Poly":
        """Quotient of an exact division; raises ``ArithmeticError`` otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if other.is_constant():
            c = other.constant_value()
            return Poly._raw(self.nvars, {e: _div(v, c) for e, v in self.terms.items()})
        lead = max(other.terms)
        lc = other.terms[lead]
        rest = [(e, c) for e, c in other.terms.items() if e != lead]
        rem = dict(self.terms)
        quo = {}
        while rem:
            m = max(rem)
            c = rem.pop(m)
            qe = tuple(a - b for a, b in zip(m, lead))
            if min(qe) < 0:
                raise ArithmeticError("polynomial division is not exact")
            qc = _div(c, lc)
            quo[qe] = qc
            for e, v in rest:
                key = _add_exp(qe, e)
                nv = rem.get(key, 0) - qc * v
                if nv:
                    rem[key] = nv
                else:
                    rem.pop(key, None)
        return Poly._raw(self.nvars, {e: _norm(c) for e, c in quo.items()})


# --------------------------------------------------------------------------
# rational functions


class RatFunc:
    """``num / base**exp`` with polynomial ``num`` and ``base``.

    Keeping the denominator as a power of one base means repeated
    differentiation only raises the exponent, so no gcd is ever needed.
    """

    __slots__ = ("num", "base", "exp")

    def __init__(self, num: Poly, base: Poly | None = None, exp: int = 1):
        if base is None or exp == 0:
            base, exp = Poly.const(num.nvars, 1), 0
        if base.is_zero():
            raise ZeroDivisionError("denominator is identically zero")
        if base.is_constant() and exp:
            num = num.scale(Fraction(1) / base.constant_value() ** exp)
            base, exp = Poly.const(num.nvars, 1), 0
        self.num = num
        self.base = base
        self.exp = exp

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, None, 0)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def den(self) -> Poly:
        return self.base ** self.exp

    def is_polynomial(self) -> bool:
        return self.exp == 0

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __repr__(self):
        if self.exp == 0:
            return f"RatFunc({self.num!r})"
        return f"RatFunc({self.num!r} / ({self.base!r})**{self.exp})"

    def _common(self, other: "RatFunc"):
        if other.exp == 0:
            return self.base, self.exp, self.num, other.num * (self.base ** self.exp)
        if self.exp == 0:
            return other.base, other.exp, self.num * (other.base ** other.exp), other.num
        if self.base == other.base:
            m = max(self.exp, other.exp)
            return (self.base, m, self.num * self.base ** (m - self.exp),
                    other.num * self.base ** (m - other.exp))
        m = max(self.exp, other.exp)
        base = self.base * other.base
        a = self.num * self.base ** (m - self.exp) * other.base ** m
        b = other.num * other.base ** (m - other.exp) * self.base ** m
        return base, m, a, b

    def __add__(self, other):
        if isinstance(other, Poly):
            other = RatFunc.from_poly(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        base, e, a, b = self._common(other)
        return RatFunc(a + b, base, e)

    def __neg__(self):
        return RatFunc(-self.num, self.base, self.exp)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num.scale(other), self.base, self.exp)
        if isinstance(other, Poly):
            return RatFunc(self.num * other, self.base, self.exp)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if other.exp == 0:
            return RatFunc(self.num * other.num, self.base, self.exp)
        if self.exp == 0:
            return RatFunc(self.num * other.num, other.base, other.exp)
        if self.base == other.base:
            return RatFunc(self.num * other.num, self.base, self.exp + other.exp)
        m = max(self.exp, other.exp)
        num = self.num * other.num * self.base ** (m - self.exp) * other.base ** (m - other.exp)
        return RatFunc(num, self.base * other.base, m)

    __rmul__ = __mul__

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        num = self.num * (other.base ** other.exp)
        den = (self.base ** self.exp) * other.num
        return RatFunc(num, den, 1)

    def diff(self, i: int) -> "RatFunc":
        """Exact partial derivative (quotient rule on ``num / base**exp``)."""
        if self.exp == 0:
            return RatFunc.from_poly(self.num.diff(i))
        db = self.base.diff(i)
        if db.is_zero():
            return RatFunc(self.num.diff(i), self.base, self.exp)
        num = self.num.diff(i) * self.base - self.num * db * self.exp
        return RatFunc(num, self.base, self.exp + 1)

    def evaluate(self, point: Sequence):
        if self.exp == 0:
            return self.num.evaluate(point)
        b = self.base.evaluate(point)
        if b == 0:
            raise DenominatorVanishes(tuple(point))
        return _norm(Fraction(self.num.evaluate(point)) / Fraction(b) ** self.exp)

    def embed(self, nvars: int, offset: int = 0) -> "RatFunc":
        return RatFunc(self.num.embed(nvars, offset), self.base.embed(nvars, offset), self.exp)


def clear_row(row: Sequence[RatFunc]) -> list[Poly]:
    """Multiply a row of rational functions by a common denominator."""
    exps: dict = {}
    for f in row:
        if f.exp and not f.is_zero():
            exps[f.base] = max(exps.get(f.base, 0), f.exp)
    out = []
    for f in row:
        if f.is_zero():
            out.append(f.num)
            continue
        p = f.num
        for b, e in exps.items():
            if f.exp and b == f.base:
                p = p * b ** (e - f.exp)
            else:
                p = p * b ** e
        out.append(p)
    return out


# --------------------------------------------------------------------------
# matrices


class MatrixQ:
    """Dense rational matrix; ``entries`` is a tuple of row tuples."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Sequence], cols: int | None = None):
        rows = tuple(tuple(to_rational(x) for x in r) for r in entries)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        self.entries = rows
        self.rows = len(rows)
        self.cols = cols

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        return f"MatrixQ({[list(r) for r in self.entries]!r})"

    def transpose(self) -> "MatrixQ":
        return MatrixQ(zip(*self.entries), cols=self.rows) if self.rows else MatrixQ((), 0)

    def __matmul__(self, other: "MatrixQ") -> "MatrixQ":
        cols_b = list(zip(*other.entries))
        return MatrixQ(
            (tuple(_norm(sum(a * b for a, b in zip(r, c))) for c in cols_b) for r in self.entries),
            cols=other.cols,
        )


def _as_rows(M) -> list[list]:
    if isinstance(M, MatrixQ):
        return [list(r) for r in M.entries]
    return [[to_rational(x) for x in r] for r in M]


def bareiss_rank(rows: list[list], is_zero=None, size=None, divexact=None) -> int:
    """Rank by fraction-free (Bareiss) elimination with full pivoting.

    Works over any exact integral domain: ``int`` entries by default, or
    :class:`Poly` entries when the helper callables are supplied. The input
    list is consumed.
    """
    if is_zero is None:
        is_zero = lambda x: x == 0  # noqa: E731
    if size is None:
        size = lambda x: abs(x)  # noqa: E731
    if divexact is None:
        divexact = lambda a, b: a // b  # noqa: E731
    M = [r for r in rows if not all(is_zero(x) for x in r)]
    if not M:
        return 0
    n, m = len(M), len(M[0])
    cols = list(range(m))
    prev = None
    r = 0
    while r < n and r < m:
        best = None
        for i in range(r, n):
            row = M[i]
            for jj in range(r, m):
                x = row[cols[jj]]
                if not is_zero(x):
                    s = size(x)
                    if best is None or s < best[0]:
                        best = (s, i, jj)
        if best is None:
            break
        _, i, jj = best
        M[r], M[i] = M[i], M[r]
        cols[r], cols[jj] = cols[jj], cols[r]
        pc = cols[r]
        prow = M[r]
        piv = prow[pc]
        for i in range(r + 1, n):
            row = M[i]
            a = row[pc]
            new = list(row)
            for jj in range(r + 1, m):
                c = cols[jj]
                v = piv * row[c] - a * prow[c]
                new[c] = v if prev is None else divexact(v, prev)
            new[pc] = prow[pc] - prow[pc]
            M[i] = new
        prev = piv
        r += 1
    return r


def _integral_rows(rows: list[list]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            if type(x) is Fraction:
                den = math.lcm(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def rank_exact(M) -> int:
    """Exact rank over the rationals (denominators cleared per row, then Bareiss)."""
    rows = _as_rows(M)
    if not rows:
        return 0
    return bareiss_rank(_integral_rows(rows))


def poly_rank(rows: Sequence[Sequence[Poly]]) -> int:
    """Rank over the fraction field of a matrix of polynomials."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    return bareiss_rank(
        M,
        is_zero=lambda p: not p.terms,
        size=lambda p: (len(p.terms), p.degree()),
        divexact=lambda a, b: a.divexact(b),
    )


def rref(M) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over the rationals; zero rows dropped."""
    A = [[Fraction(x) for x in r] for r in _as_rows(M)]
    pivots: list[int] = []
    if not A:
        return [], pivots
    n, m = len(A), len(A[0])
    r = 0
    for c in range(m):
        if r == n:
            break
        p = next((i for i in range(r, n) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(n):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return [[_norm(x) for x in row] for row in A[:r]], pivots


def nullspace(M, cols: int | None = None) -> list[list]:
    """Right kernel basis, returned as the rows of a reduced echelon matrix."""
    rows = _as_rows(M)
    if cols is None:
        cols = len(rows[0]) if rows else (M.cols if isinstance(M, MatrixQ) else 0)
    R, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = _norm(-row[f])
        basis.append(v)
    if not basis:
        return []
    return rref(basis)[0]


def poly_det(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square polynomial matrix by Bareiss elimination."""
    M = [list(r) for r in rows]
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    nv = M[0][0].nvars
    sign = 1
    prev = Poly.const(nv, 1)
    for r in range(n - 1):
        p = next((i for i in range(r, n) if M[i][r].terms), None)
        if p is None:
            return Poly.zero(nv)
        if p != r:
            M[r], M[p] = M[p], M[r]
            sign = -sign
        piv = M[r][r]
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                M[i][j] = (piv * M[i][j] - M[i][r] * M[r][j]).divexact(prev)
        prev = piv
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det
