"""Independent reference computations built on sympy.

Nothing here imports the engine's algebra: coordinates are re-read by sympy,
derivatives come from sympy.diff and ranks from sympy.Matrix.rank at random
rational points. Osculating-space images are measured in a Grassmannian chart
rather than through annihilators.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

import sympy as sp

SAMPLES = 4


def _symbols(k):
    return sp.symbols(f"u1:{k + 1}")


def _indices(k, t):
    """All multi-indices with |I| <= t (order irrelevant here)."""
    out = []
    for s in range(t + 1):
        for combo in combinations_with_replacement(range(k), s):
            I = [0] * k
            for j in combo:
                I[j] += 1
            out.append(tuple(I))
    return out


class Oracle:
    def __init__(self, k, coords, seed=1234):
        self.k = k
        self.N = len(coords)
        self.u = _symbols(k)
        ns = {f"u{i + 1}": s for i, s in enumerate(self.u)}
        self.x = [sp.sympify(c.replace("^", "**"), locals=ns) for c in coords]
        self.rng = random.Random(seed)
        self._d = {}

    def _point(self):
        while True:
            pt = [sp.Rational(self.rng.randint(-60, 60), self.rng.randint(1, 7)) for _ in range(self.k)]
            sub = dict(zip(self.u, pt))
            if all(sp.denom(sp.together(c)).subs(sub) != 0 for c in self.x):
                return sub

    def _deriv(self, I):
        if I not in self._d:
            expr = list(self.x)
            for j, e in enumerate(I):
                if e:
                    expr = [sp.diff(c, self.u[j], e) for c in expr]
            lead = 1 if not any(I) else 0
            self._d[I] = [sp.Integer(lead)] + expr
        return self._d[I]

    def _rows(self, t, sub):
        return [[c.subs(sub) for c in self._deriv(I)] for I in _indices(self.k, t)]

    @lru_cache(maxsize=None)
    def d(self, t):
        return max(sp.Matrix(self._rows(t, self._point())).rank() for _ in range(SAMPLES)) - 1

    def delta(self, t):
        return comb(self.k - 1 + t, t) - (self.d(t) - self.d(t - 1))

    def Delta(self, t):
        return self.d(t) - self.d(t - 1) - 1

    @lru_cache(maxsize=None)
    def tan_dim(self, t):
        idx = _indices(self.k, t)
        best = 0
        for _ in range(SAMPLES):
            sub = self._point()
            lam = [sp.Rational(self.rng.randint(-50, 50)) for _ in idx]
            cols = [[c.subs(sub) for c in self._deriv(I)] for I in idx]
            for j in range(self.k):
                col = [0] * (self.N + 1)
                for l, I in zip(lam, idx):
                    J = list(I)
                    J[j] += 1
                    col = [a + l * b.subs(sub) for a, b in zip(col, self._deriv(tuple(J)))]
                cols.append(col)
            best = max(best, sp.Matrix(cols).rank())
        return best - 1

    def o(self, t):
        return min(self.k + self.d(t), self.N) - self.tan_dim(t)

    @lru_cache(maxsize=None)
    def h(self, t):
        """Rank of the differential of u -> T^t_u, read in a Grassmannian chart."""
        if self.d(t) == self.N:
            return 0
        best = 0
        for _ in range(SAMPLES):
            sub = self._point()
            idx = _indices(self.k, t)
            chosen = []
            for I in idx:
                trial = chosen + [I]
                if sp.Matrix([[c.subs(sub) for c in self._deriv(J)] for J in trial]).rank() == len(trial):
                    chosen = trial
            if len(chosen) != self.d(t) + 1:
                continue
            B = sp.Matrix([[c.subs(sub) for c in self._deriv(I)] for I in chosen])
            pivots = B.rref()[1]
            BP = B[:, list(pivots)]
            M = BP.inv() * B
            blocks = []
            for j in range(self.k):
                dB = []
                for I in chosen:
                    J = list(I)
                    J[j] += 1
                    dB.append([c.subs(sub) for c in self._deriv(tuple(J))])
                dB = sp.Matrix(dB)
                dM = BP.inv() * (dB - dB[:, list(pivots)] * M)
                blocks.append(list(dM))
            best = max(best, sp.Matrix(blocks).rank())
        return best

    def dual_dim(self, t):
        if self.d(t) == self.N:
            return -1
        return self.h(t) + self.N - 1 - self.d(t)
