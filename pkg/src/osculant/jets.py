"""Jet matrices, osculating dimensions and Laplace equations of a parametrization."""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .errors import (
    DenominatorVanishes,
    NonGenericPoint,
    NotImmersionWarning,
    UnsupportedRationalCoords,
)
from .exactalg import (
    MatrixQ,
    Poly,
    RatFunc,
    clear_row,
    mi_enumerate,
    nullspace,
    poly_rank,
    rank_exact,
    rref,
    to_rational,
)

MODES = ("sampled", "symbolic")


@dataclass(frozen=True)
class SamplingConfig:
    """Seeded generic-point protocol: ``samples`` integer points in ``[-bound, bound]``."""

    seed: int = 0
    samples: int = 5
    bound: int = 100
    max_draws: int = 200

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if self.bound < 1:
            raise ValueError("coordinate bound must be positive")

    def stream(self, dim: int, purpose: str) -> Iterator[tuple[int, ...]]:
        rng = random.Random(f"{self.seed}/{purpose}/{dim}")
        for _ in range(self.max_draws):
            yield tuple(rng.randint(-self.bound, self.bound) for _ in range(dim))


DEFAULT_CONFIG = SamplingConfig()


@dataclass(frozen=True, eq=False)
class Parametrization:
    """Affine chart ``u -> (x_1(u), ..., x_N(u))`` of a k-dimensional variety in P^N."""

    name: str
    k: int
    N: int
    coords: tuple[RatFunc, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        coords = tuple(RatFunc.from_poly(c) if isinstance(c, Poly) else c for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if self.k < 1 or self.N < 1:
            raise ValueError("k and N must be positive")
        if self.k > self.N:
            raise ValueError(f"k={self.k} exceeds ambient dimension N={self.N}")
        if len(coords) != self.N:
            raise ValueError(f"expected {self.N} coordinates, got {len(coords)}")
        for c in coords:
            if not isinstance(c, RatFunc) or c.nvars != self.k:
                raise ValueError(f"every coordinate must be a function of {self.k} variables")

    @classmethod
    def from_polys(cls, name: str, k: int, polys: Sequence[Poly]) -> "Parametrization":
        return cls(name, k, len(polys), tuple(RatFunc.from_poly(p) for p in polys))

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.coords)

    def derivative(self, index: Sequence[int]) -> tuple[RatFunc, ...]:
        """Affine coordinates of ``x^I``, differentiated exactly and memoised."""
        index = tuple(index)
        key = ("d", index)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        j = next((i for i, e in enumerate(index) if e), None)
        if j is None:
            out = self.coords
        else:
            lower = index[:j] + (index[j] - 1,) + index[j + 1:]
            out = tuple(f.diff(j) for f in self.derivative(lower))
        self._cache[key] = out
        return out

    def lifted_derivative(self, index: Sequence[int]) -> tuple[RatFunc, ...]:
        """``x^I`` on the affine cone: leading 1 for ``I = 0`` and 0 otherwise."""
        lead = 1 if not any(index) else 0
        return (RatFunc.from_poly(Poly.const(self.k, lead)),) + self.derivative(index)

    def lifted_value(self, index: Sequence[int], u: tuple) -> tuple:
        key = ("v", tuple(index), u)
        hit = self._cache.get(key)
        if hit is None:
            lead = 1 if not any(index) else 0
            hit = (lead,) + tuple(f.evaluate(u) for f in self.derivative(index))
            self._cache[key] = hit
        return hit

    def defined_at(self, u: Sequence) -> bool:
        return all(c.exp == 0 or c.base.evaluate(u) != 0 for c in self.coords)


# --------------------------------------------------------------------------
# sampling


def sample_points(p: Parametrization, config: SamplingConfig | None = None,
                  purpose: str = "u", extra: int = 0, count: int | None = None) -> list[tuple]:
    """Deterministic sample points where all denominators are nonzero.

    ``extra`` appends that many free coordinates (used for the lambda
    coefficients of the osculating-variety join).
    """
    config = config or DEFAULT_CONFIG
    count = config.samples if count is None else count
    key = ("pts", config, purpose, extra, count)
    hit = p._cache.get(key)
    if hit is not None:
        return hit
    pts = []
    for pt in config.stream(p.k + extra, purpose):
        if p.defined_at(pt[:p.k]):
            pts.append(pt)
            if len(pts) == count:
                break
    else:
        raise DenominatorVanishes(f"no admissible sample among {config.max_draws} draws")
    p._cache[key] = pts
    return pts


def _point_stream(p: Parametrization, config: SamplingConfig) -> Iterator[tuple]:
    for pt in config.stream(p.k, "u"):
        if p.defined_at(pt):
            yield pt


# --------------------------------------------------------------------------
# jet matrices


@dataclass(frozen=True)
class JetMatrix:
    order: int
    point: tuple
    indices: tuple[tuple[int, ...], ...]
    rows: MatrixQ

    @property
    def rank(self) -> int:
        return rank_exact(self.rows)


def jet_matrix(p: Parametrization, u: Sequence, t: int) -> JetMatrix:
    """Rows ``(1, x(u))`` and ``(0, x^I(u))`` for every ``|I| <= t``."""
    u = tuple(to_rational(x) for x in u)
    if len(u) != p.k:
        raise ValueError(f"point must have {p.k} coordinates")
    if not p.defined_at(u):
        raise DenominatorVanishes(u)
    indices = tuple(mi_enumerate(p.k, t, "upto"))
    rows = MatrixQ([p.lifted_value(I, u) for I in indices], cols=p.N + 1)
    return JetMatrix(t, u, indices, rows)


def jet_rank_at(p: Parametrization, u: tuple, t: int) -> int:
    key = ("rank", u, t)
    hit = p._cache.get(key)
    if hit is None:
        hit = p._cache[key] = jet_matrix(p, u, t).rank
    return hit


def symbolic_jet_rank(p: Parametrization, t: int) -> int:
    """Rank of the jet matrix over the function field Q(u)."""
    key = ("srank", t)
    hit = p._cache.get(key)
    if hit is None:
        rows = [clear_row(p.lifted_derivative(I)) for I in mi_enumerate(p.k, t, "upto")]
        hit = p._cache[key] = poly_rank(rows)
    return hit


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def osc_dim(p: Parametrization, t: int, mode: str = "sampled",
            config: SamplingConfig | None = None) -> int:
    """Dimension ``d_t`` of the t-th osculating space at a general point."""
    _check_mode(mode)
    if t < 0:
        raise ValueError("order must be non-negative")
    if mode == "symbolic":
        d = symbolic_jet_rank(p, t) - 1
    else:
        d = max(jet_rank_at(p, u, t) for u in sample_points(p, config)) - 1
    if t == 1 and d < p.k:
        warnings.warn(f"{p.name}: differential has rank {d} < k={p.k}", NotImmersionWarning,
                      stacklevel=2)
    return d


def generic_point(p: Parametrization, order: int, config: SamplingConfig | None = None) -> tuple:
    """First point of the sample stream where every ``J_s``, ``s <= order``, has generic rank."""
    config = config or DEFAULT_CONFIG
    key = ("gp", config, order)
    hit = p._cache.get(key)
    if hit is not None:
        return hit
    pts = sample_points(p, config)
    target = [max(jet_rank_at(p, u, s) for u in pts) for s in range(order + 1)]
    for u in _point_stream(p, config):
        if all(jet_rank_at(p, u, s) == target[s] for s in range(order + 1)):
            p._cache[key] = u
            return u
    raise NonGenericPoint(f"{p.name}: no generic point found for order {order}")


def generic_points(p: Parametrization, order: int, config: SamplingConfig | None = None) -> list[tuple]:
    """The configured samples that are generic up to ``order``."""
    pts = sample_points(p, config)
    target = [max(jet_rank_at(p, u, s) for u in pts) for s in range(order + 1)]
    good = [u for u in pts if all(jet_rank_at(p, u, s) == target[s] for s in range(order + 1))]
    return good or [generic_point(p, order, config)]


def require_generic(p: Parametrization, u: tuple, order: int, config: SamplingConfig | None = None):
    pts = sample_points(p, config)
    for s in range(order + 1):
        if jet_rank_at(p, u, s) != max(jet_rank_at(p, v, s) for v in pts):
            raise NonGenericPoint(f"{p.name}: jet of order {s} drops rank at {u}")


# --------------------------------------------------------------------------
# dimension bookkeeping


def expected_dims(p: Parametrization, t: int, d_prev: int | None = None, mode: str = "sampled",
                  config: SamplingConfig | None = None) -> tuple[int, int, int]:
    """``(e_t, k_t, trivial_t)`` for order ``t >= 1``."""
    if d_prev is None:
        d_prev = osc_dim(p, t - 1, mode, config)
    e = min(p.N, d_prev + comb(p.k - 1 + t, t))
    k_t = comb(p.k + t, t) - 1
    return e, k_t, max(0, k_t - p.N)


def laplace_count(p: Parametrization, s: int, mode: str = "sampled",
                  config: SamplingConfig | None = None) -> int:
    """Pointwise count of new order-s relations: the growth in left nullity of ``J_s``."""
    if s < 1:
        raise ValueError("Laplace order must be >= 1")
    d_s = osc_dim(p, s, mode, config)
    d_prev = osc_dim(p, s - 1, mode, config)
    return comb(p.k - 1 + s, s) - (d_s - d_prev)


@dataclass(frozen=True)
class OrderProfile:
    t: int
    d: int
    e: int
    k_t: int
    trivial: int
    delta: int
    delta_forced: int
    Delta: int

    @property
    def delta_new(self) -> int:
        """Relations beyond those forced by the ambient dimension: ``d = e - delta_new``."""
        return self.delta - self.delta_forced


@dataclass(frozen=True)
class OsculatingProfile:
    name: str
    k: int
    N: int
    orders: tuple[OrderProfile, ...]

    def __getitem__(self, t: int) -> OrderProfile:
        return self.orders[t - 1]

    def d(self, t: int) -> int:
        return 0 if t == 0 else self[t].d


def profile(p: Parametrization, t_max: int, mode: str = "sampled",
            config: SamplingConfig | None = None) -> OsculatingProfile:
    dims = [osc_dim(p, t, mode, config) for t in range(t_max + 1)]
    orders = []
    for t in range(1, t_max + 1):
        new = comb(p.k - 1 + t, t)
        e, k_t, trivial = expected_dims(p, t, dims[t - 1])
        grow = dims[t] - dims[t - 1]
        orders.append(OrderProfile(
            t=t, d=dims[t], e=e, k_t=k_t, trivial=trivial,
            delta=new - grow,
            delta_forced=max(0, dims[t - 1] + new - p.N),
            Delta=grow - 1,
        ))
    return OsculatingProfile(p.name, p.k, p.N, tuple(orders))


# --------------------------------------------------------------------------
# Laplace systems


@dataclass(frozen=True)
class LaplaceSystem:
    """Coefficient vectors ``E_I`` (indexed like ``indices``) of order-s Laplace equations."""

    order: int
    mode: str
    k: int
    indices: tuple[tuple[int, ...], ...]
    basis: tuple[tuple, ...]

    @property
    def count(self) -> int:
        return len(self.basis)

    def top_parts(self) -> list[list]:
        top = [i for i, I in enumerate(self.indices) if sum(I) == self.order]
        return [[v[i] for i in top] for v in self.basis]


def _top_first_basis(kernel: list[list], indices: Sequence[tuple], s: int) -> list[tuple]:
    """Canonical basis of the kernel vectors that involve order-s terms.

    Columns are reordered top-order first before echelonizing, so rows pivoting
    inside the top block are exactly the genuinely new order-s relations.
    """
    if not kernel:
        return []
    top = [i for i, I in enumerate(indices) if sum(I) == s]
    low = [i for i, I in enumerate(indices) if sum(I) < s]
    perm = top + low
    R, pivots = rref([[v[i] for i in perm] for v in kernel])
    out = []
    for row, pc in zip(R, pivots):
        if pc < len(top):
            full = [0] * len(indices)
            for pos, i in enumerate(perm):
                full[i] = row[pos]
            out.append(tuple(full))
    return out


def laplace_basis(p: Parametrization, s: int, u: Sequence | None = None,
                  config: SamplingConfig | None = None) -> LaplaceSystem:
    """Pointwise Laplace equations of order ``s`` at ``u`` (a generic sample by default)."""
    if u is None:
        u = generic_point(p, s, config)
    else:
        u = tuple(to_rational(x) for x in u)
        require_generic(p, u, s, config)
    J = jet_matrix(p, u, s)
    kernel = nullspace(J.rows.transpose(), cols=J.rows.rows)
    basis = _top_first_basis(kernel, J.indices, s)
    return LaplaceSystem(s, "pointwise", p.k, J.indices, tuple(basis))


def global_laplace_basis(p: Parametrization, s: int) -> LaplaceSystem:
    """Constant-coefficient Laplace equations of order ``s`` (identities in u)."""
    if not p.is_polynomial():
        raise UnsupportedRationalCoords(f"{p.name}: constant-coefficient mode needs polynomial coordinates")
    indices = tuple(mi_enumerate(p.k, s, "upto"))
    expansions = []
    keys: set = set()
    for I in indices:
        coeffs = {}
        for j, f in enumerate(p.lifted_derivative(I)):
            for mono, c in f.num.terms.items():
                coeffs[(j, mono)] = c
        expansions.append(coeffs)
        keys.update(coeffs)
    order = sorted(keys)
    if not order:
        kernel = [[1 if i == j else 0 for i in range(len(indices))] for j in range(len(indices))]
    else:
        cols = [[e.get(key, 0) for e in expansions] for key in order]
        kernel = nullspace(cols, cols=len(indices))
    basis = _top_first_basis(kernel, indices, s)
    return LaplaceSystem(s, "constant", p.k, indices, tuple(basis))
