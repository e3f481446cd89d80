"""Fundamental forms as linear systems of forms, apolarity and Jacobian systems."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import DegreeMismatch, EmptySystem
from .exactalg import (
    Fraction,
    Poly,
    multinomial_weight,
    mi_enumerate,
    nullspace,
    poly_det,
    poly_rank,
    rank_exact,
    rref,
    to_rational,
)
from .jets import (
    DEFAULT_CONFIG,
    LaplaceSystem,
    Parametrization,
    SamplingConfig,
    generic_point,
    jet_matrix,
    require_generic,
)

CONVENTIONS = ("raw", "taylor")


@dataclass(frozen=True)
class FormSystem:
    """Linear system of degree-``degree`` forms in ``nvars`` variables.

    ``basis`` rows are coefficient vectors over ``mi_enumerate(nvars, degree)``
    in reduced row echelon form, so equal row spaces compare equal.
    """

    degree: int
    nvars: int
    basis: tuple[tuple, ...]

    @classmethod
    def from_rows(cls, rows, degree: int, nvars: int) -> "FormSystem":
        width = comb(nvars - 1 + degree, degree)
        rows = [list(r) for r in rows]
        if any(len(r) != width for r in rows):
            raise DegreeMismatch(f"coefficient rows must have {width} entries")
        R, _ = rref(rows) if rows else ([], [])
        return cls(degree, nvars, tuple(tuple(r) for r in R))

    @classmethod
    def from_polys(cls, polys: Sequence[Poly], degree: int, nvars: int) -> "FormSystem":
        idx = mi_enumerate(nvars, degree)
        rows = []
        for f in polys:
            if f.nvars != nvars or any(sum(e) != degree for e in f.terms):
                raise DegreeMismatch(f"not a form of degree {degree} in {nvars} variables")
            rows.append([f.terms.get(I, 0) for I in idx])
        return cls.from_rows(rows, degree, nvars)

    @classmethod
    def empty(cls, degree: int, nvars: int) -> "FormSystem":
        return cls(degree, nvars, ())

    @classmethod
    def full(cls, degree: int, nvars: int) -> "FormSystem":
        n = comb(nvars - 1 + degree, degree)
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], degree, nvars)

    @property
    def projdim(self) -> int:
        return len(self.basis) - 1

    @property
    def indices(self) -> list[tuple[int, ...]]:
        return mi_enumerate(self.nvars, self.degree)

    def is_empty(self) -> bool:
        return not self.basis

    def forms(self) -> list[Poly]:
        idx = self.indices
        return [Poly(self.nvars, {I: c for I, c in zip(idx, row)}) for row in self.basis]

    def reweighted(self, convention: str = "taylor") -> "FormSystem":
        """Multiply each ``v^I`` coefficient by ``|I|!/I!`` (or divide, for ``raw``)."""
        w = [multinomial_weight(I) for I in self.indices]
        if convention == "taylor":
            rows = [[c * x for c, x in zip(row, w)] for row in self.basis]
        elif convention == "raw":
            rows = [[to_rational(Fraction(c) / x) for c, x in zip(row, w)] for row in self.basis]
        else:
            raise ValueError(f"unknown convention {convention!r}")
        return FormSystem.from_rows(rows, self.degree, self.nvars)


def _check_compatible(a: FormSystem, b: FormSystem):
    if a.degree != b.degree or a.nvars != b.nvars:
        raise DegreeMismatch(
            f"degree {a.degree} in {a.nvars} vars vs degree {b.degree} in {b.nvars} vars")


def fundamental_form(p: Parametrization, t: int, u: Sequence | None = None,
                     config: SamplingConfig | None = None,
                     convention: str = "raw") -> FormSystem:
    """The t-th fundamental form at ``u``: order-t partials read modulo the order-(t-1) span.

    Each covector ``c`` killing the osculating space of order ``t-1`` gives the
    form ``sum_{|I|=t} c(x^I) v^I``. With ``convention="taylor"`` the
    coefficients carry the weights ``t!/I!`` of ``d^t/dv^t``.
    """
    if t < 1:
        raise ValueError("fundamental forms start at order 1")
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    if u is None:
        u = generic_point(p, t, config)
    else:
        u = tuple(to_rational(x) for x in u)
        require_generic(p, u, t, config)
    annihilator = nullspace(jet_matrix(p, u, t - 1).rows, cols=p.N + 1)
    top = mi_enumerate(p.k, t)
    values = [p.lifted_value(I, u) for I in top]
    if convention == "taylor":
        weights = [multinomial_weight(I) for I in top]
    else:
        weights = [1] * len(top)
    rows = [[w * sum(a * b for a, b in zip(c, x)) for x, w in zip(values, weights)]
            for c in annihilator]
    return FormSystem.from_rows(rows, t, p.k)


def associated_system(L: LaplaceSystem) -> FormSystem:
    """Forms ``sum_{|I|=s} E_I v^I`` built from the top-order Laplace coefficients."""
    if not L.basis:
        return FormSystem.empty(L.order, L.k)
    return FormSystem.from_rows(L.top_parts(), L.order, L.k)


def _coefficients(f, degree=None, nvars=None) -> list:
    if isinstance(f, Poly):
        degs = {sum(e) for e in f.terms}
        if len(degs) > 1:
            raise DegreeMismatch("not a homogeneous form")
        d = degs.pop() if degs else (degree or 0)
        return [f.terms.get(I, 0) for I in mi_enumerate(f.nvars, d)], d, f.nvars
    return list(f), degree, nvars


def apolar_pair(f, g):
    """Plain coefficient dot product ``sum_I a_I b_I`` of two equal-degree forms."""
    a, da, na = _coefficients(f)
    b, db, nb = _coefficients(g)
    if len(a) != len(b) or (da is not None and db is not None and (da, na) != (db, nb)):
        raise DegreeMismatch("apolarity needs forms of equal degree in the same variables")
    return to_rational(sum(x * y for x, y in zip(a, b)))


def apolar_complement(S: FormSystem) -> FormSystem:
    """Every form apolar to all of ``S``."""
    width = comb(S.nvars - 1 + S.degree, S.degree)
    if not S.basis:
        return FormSystem.full(S.degree, S.nvars)
    return FormSystem.from_rows(nullspace(S.basis, cols=width), S.degree, S.nvars)


def contains(A: FormSystem, B: FormSystem) -> bool:
    """Whether the row space of ``A`` lies in that of ``B``."""
    _check_compatible(A, B)
    if not A.basis:
        return True
    return rank_exact(list(A.basis) + list(B.basis)) == len(B.basis)


def derivative_span(S: FormSystem) -> FormSystem:
    """System spanned by all first partials of the generators of ``S``."""
    if S.degree == 0:
        raise DegreeMismatch("constants have no partial derivatives in a form system")
    partials = [f.diff(g) for f in S.forms() for g in range(S.nvars)]
    return FormSystem.from_polys([q for q in partials if q.terms], S.degree - 1, S.nvars)


@dataclass(frozen=True)
class JacobianData:
    matrix: tuple[tuple[Poly, ...], ...]
    generic_rank: int
    jacobian_system: FormSystem


def _max_minors(matrix, r: int) -> list[Poly]:
    rows, cols = len(matrix), len(matrix[0])
    out = []
    for ri in combinations(range(rows), r):
        for ci in combinations(range(cols), r):
            m = poly_det([[matrix[i][j] for j in ci] for i in ri])
            if m.terms:
                out.append(m)
    return out


def jacobian(S: FormSystem, mode: str = "sampled",
             config: SamplingConfig | None = None) -> JacobianData:
    """Jacobian matrix of the generators, its generic rank and the system of maximal minors."""
    if not S.basis:
        return JacobianData((), 0, FormSystem.empty(0, S.nvars))
    if S.degree == 0:
        raise EmptySystem("constant forms have a zero Jacobian")
    forms = S.forms()
    matrix = tuple(tuple(f.diff(g) for g in range(S.nvars)) for f in forms)
    if mode == "symbolic":
        r = poly_rank(matrix)
    elif mode == "sampled":
        config = config or DEFAULT_CONFIG
        r = 0
        for n, v in enumerate(config.stream(S.nvars, "v")):
            if n == config.samples:
                break
            r = max(r, rank_exact([[e.evaluate(v) for e in row] for row in matrix]))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if r == 0:
        return JacobianData(matrix, 0, FormSystem.empty(0, S.nvars))
    system = FormSystem.from_polys(_max_minors(matrix, r), (S.degree - 1) * r, S.nvars)
    return JacobianData(matrix, r, system)
