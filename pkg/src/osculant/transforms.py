"""Reparametrizations and ambient projective changes of coordinates."""

from __future__ import annotations

import random
from typing import Sequence

from .exactalg import Poly, RatFunc, clear_row, rank_exact, to_rational
from .jets import Parametrization


def reparametrize(p: Parametrization, A: Sequence[Sequence], b: Sequence | None = None,
                  name: str | None = None) -> Parametrization:
    """Compose with the affine substitution ``u -> A u + b`` (``A`` invertible)."""
    k = p.k
    A = [[to_rational(x) for x in row] for row in A]
    if len(A) != k or any(len(row) != k for row in A) or rank_exact(A) < k:
        raise ValueError(f"A must be an invertible {k}x{k} matrix")
    b = [0] * k if b is None else [to_rational(x) for x in b]
    images = []
    for i in range(k):
        img = Poly.const(k, b[i])
        for j in range(k):
            if A[i][j]:
                img = img + Poly.var(k, j).scale(A[i][j])
        images.append(img)
    coords = tuple(RatFunc(c.num.substitute(images), c.base.substitute(images), c.exp)
                   for c in p.coords)
    return Parametrization(name or f"{p.name}@reparam", k, p.N, coords)


def projective_transform(p: Parametrization, G: Sequence[Sequence],
                         name: str | None = None) -> Parametrization:
    """Apply ``G`` in PGL(N+1) to the homogeneous coordinates ``(1 : x)`` and re-chart on ``y0 != 0``."""
    n = p.N + 1
    G = [[to_rational(x) for x in row] for row in G]
    if len(G) != n or any(len(row) != n for row in G) or rank_exact(G) < n:
        raise ValueError(f"G must be an invertible {n}x{n} matrix")
    one = RatFunc.from_poly(Poly.const(p.k, 1))
    X = clear_row((one,) + p.coords)
    Y = []
    for row in G:
        y = Poly.zero(p.k)
        for g, x in zip(row, X):
            if g:
                y = y + x.scale(g)
        Y.append(y)
    if Y[0].is_zero():
        raise ValueError("the transformed variety lies in the hyperplane y0 = 0")
    coords = tuple(RatFunc(y, Y[0], 1) for y in Y[1:])
    return Parametrization(name or f"{p.name}@proj", p.k, p.N, coords)


def random_unimodular(k: int, rng: random.Random, steps: int = 6) -> list[list[int]]:
    """Integer matrix of determinant +-1 built from random elementary operations."""
    A = [[int(i == j) for j in range(k)] for i in range(k)]
    for _ in range(steps):
        if k == 1:
            break
        i, j = rng.sample(range(k), 2)
        c = rng.choice([-2, -1, 1, 2])
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
    rng.shuffle(A)
    if rng.random() < 0.5:
        A[0] = [-a for a in A[0]]
    return A


def random_projective(n: int, rng: random.Random, bound: int = 3) -> list[list[int]]:
    """Random invertible integer ``n x n`` matrix with small entries."""
    while True:
        G = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if rank_exact(G) == n:
            return G
