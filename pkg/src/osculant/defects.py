"""Osculating varieties, defects, Gauss images, dual varieties and theorem checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .exactalg import Poly, RatFunc, clear_row, mi_enumerate, nullspace, poly_rank, rank_exact
from .forms import contains, derivative_span, fundamental_form, jacobian
from .jets import (
    Parametrization,
    SamplingConfig,
    generic_point,
    generic_points,
    jet_matrix,
    jet_rank_at,
    osc_dim,
    sample_points,
    symbolic_jet_rank,
)


def _shift(I, j):
    return I[:j] + (I[j] + 1,) + I[j + 1:]


# --------------------------------------------------------------------------
# osculating varieties


def _join_columns_at(p: Parametrization, t: int, u: tuple, lam: tuple) -> list[tuple]:
    """Columns of dPsi at ``(u, lam)`` where ``Psi = sum_I lam_I * lift(x^I)(u)``."""
    idx = mi_enumerate(p.k, t, "upto")
    cols = [p.lifted_value(I, u) for I in idx]
    for j in range(p.k):
        acc = [0] * (p.N + 1)
        for I, l in zip(idx, lam):
            if l:
                for r, x in enumerate(p.lifted_value(_shift(I, j), u)):
                    acc[r] += l * x
        cols.append(tuple(acc))
    return cols


def _join_columns_symbolic(p: Parametrization, t: int) -> list[list[RatFunc]]:
    idx = mi_enumerate(p.k, t, "upto")
    nv = p.k + len(idx)
    cols = [[f.embed(nv) for f in p.lifted_derivative(I)] for I in idx]
    for j in range(p.k):
        acc = None
        for n, I in enumerate(idx):
            lam = Poly.var(nv, p.k + n)
            term = [f.embed(nv) * lam for f in p.lifted_derivative(_shift(I, j))]
            acc = term if acc is None else [a + b for a, b in zip(acc, term)]
        cols.append(acc)
    return cols


def tan_variety_dim(p: Parametrization, t: int, mode: str = "sampled",
                    config: SamplingConfig | None = None) -> int:
    """Dimension of the variety swept by the t-th osculating spaces.

    Computed as the generic rank of the differential of the join map
    ``(u, lam) -> sum_{|I|<=t} lam_I x^I(u)`` on the affine cone, minus one.
    """
    if t < 0:
        raise ValueError("order must be non-negative")
    key = ("tan", t, mode, config)
    hit = p._cache.get(key)
    if hit is not None:
        return hit
    n_lam = comb(p.k + t, t)
    if mode == "symbolic":
        r = poly_rank([clear_row(col) for col in _join_columns_symbolic(p, t)])
    elif mode == "sampled":
        r = 0
        for pt in sample_points(p, config, "join", extra=n_lam):
            u, lam = pt[:p.k], pt[p.k:]
            r = max(r, rank_exact(_join_columns_at(p, t, u, lam)))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    p._cache[key] = r - 1
    return r - 1


def osculating_defect(p: Parametrization, t: int, mode: str = "sampled",
                      config: SamplingConfig | None = None) -> int:
    """``o_t = min(k + d_t, N) - dim Tan^t``."""
    d = osc_dim(p, t, mode, config)
    return min(p.k + d, p.N) - tan_variety_dim(p, t, mode, config)


# --------------------------------------------------------------------------
# Gauss map


def _gauss_rank_at(p: Parametrization, t: int, u: tuple) -> int:
    annihilator = nullspace(jet_matrix(p, u, t).rows, cols=p.N + 1)
    if not annihilator:
        return 0
    rows = []
    for I in mi_enumerate(p.k, t):
        shifted = [p.lifted_value(_shift(I, j), u) for j in range(p.k)]
        for c in annihilator:
            rows.append([sum(a * b for a, b in zip(c, x)) for x in shifted])
    return rank_exact(rows)


def _independent_rows_symbolic(p: Parametrization, t: int, config) -> list[tuple]:
    """Indices of ``|I| <= t`` whose lifted jets form a basis of the order-t span over Q(u)."""
    target = symbolic_jet_rank(p, t)
    idx = mi_enumerate(p.k, t, "upto")
    u = generic_point(p, t, config)
    chosen: list = []
    for I in idx:
        trial = chosen + [I]
        if rank_exact([p.lifted_value(J, u) for J in trial]) == len(trial):
            chosen = trial
    if len(chosen) == target and poly_rank([clear_row(p.lifted_derivative(I)) for I in chosen]) == target:
        return chosen
    chosen = []
    for I in idx:
        trial = chosen + [I]
        if poly_rank([clear_row(p.lifted_derivative(J)) for J in trial]) == len(trial):
            chosen = trial
    return chosen


def gauss_image_dim(p: Parametrization, t: int, mode: str = "sampled",
                    config: SamplingConfig | None = None) -> int:
    """Dimension ``h`` of the image of the t-th Gauss map.

    A tangent direction ``a`` is in the kernel of the differential when every
    ``sum_j a_j x^{I+e_j}`` with ``|I| = t`` stays in the t-th osculating span,
    so ``h`` is the rank of that map into the normal space.
    """
    if t < 1:
        raise ValueError("order must be >= 1")
    key = ("gauss", t, mode, config)
    hit = p._cache.get(key)
    if hit is not None:
        return hit
    if mode == "sampled":
        h = max(_gauss_rank_at(p, t, u) for u in generic_points(p, t, config))
    elif mode == "symbolic":
        h = _gauss_rank_symbolic(p, t, config)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    p._cache[key] = h
    return h


def _gauss_rank_symbolic(p: Parametrization, t: int, config) -> int:
    # rank [Y_I | 0 .. S .. 0] stacked over |I| = t equals m*rank(S) + h
    # when S has independent columns spanning the osculating space.
    if symbolic_jet_rank(p, t) == p.N + 1:
        return 0
    basis = [p.lifted_derivative(I) for I in _independent_rows_symbolic(p, t, config)]
    tops = mi_enumerate(p.k, t)
    m, b = len(tops), len(basis)
    zero = RatFunc.from_poly(Poly.zero(p.k))
    rows = []
    for n, I in enumerate(tops):
        shifted = [p.lifted_derivative(_shift(I, j)) for j in range(p.k)]
        for r in range(p.N + 1):
            row = [shifted[j][r] for j in range(p.k)]
            for blk in range(m):
                row.extend(basis[c][r] if blk == n else zero for c in range(b))
            rows.append(clear_row(row))
    return poly_rank(rows) - m * b


# --------------------------------------------------------------------------
# dual varieties


def dual_variety_dim(p: Parametrization, t: int, mode: str = "sampled",
                     config: SamplingConfig | None = None) -> int:
    """``d_{t,1} = h + N - 1 - d_t``; ``-1`` when the osculating space fills P^N."""
    d = osc_dim(p, t, mode, config)
    if d >= p.N:
        return -1
    return gauss_image_dim(p, t, mode, config) + p.N - 1 - d


@dataclass(frozen=True)
class DefectReport:
    t: int
    k: int
    N: int
    d: int
    tan_dim: int
    expdim: int
    o: int
    h: int
    dual_dim: int

    @property
    def dual_degenerate(self) -> bool | None:
        if self.dual_dim < 0:
            return None
        return self.dual_dim < self.N - 1 - self.d + self.k


def defect_report(p: Parametrization, t: int, mode: str = "sampled",
                  config: SamplingConfig | None = None) -> DefectReport:
    d = osc_dim(p, t, mode, config)
    tan = tan_variety_dim(p, t, mode, config)
    expdim = min(p.k + d, p.N)
    return DefectReport(
        t=t, k=p.k, N=p.N, d=d, tan_dim=tan, expdim=expdim, o=expdim - tan,
        h=gauss_image_dim(p, t, mode, config),
        dual_dim=dual_variety_dim(p, t, mode, config),
    )


# --------------------------------------------------------------------------
# theorem checkers


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    order: int
    applicable: bool
    inputs: dict
    passed: bool | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def status(self) -> str:
        if not self.applicable:
            return "not-applicable"
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "order": self.order,
            "applicable": self.applicable,
            "passed": self.passed,
            "status": self.status,
            "inputs": dict(self.inputs),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "TheoremVerdict":
        return cls(doc["theorem"], doc["order"], doc["applicable"], dict(doc["inputs"]),
                   doc["passed"], tuple(doc["notes"]))


def tangent_lemma_check(p: Parametrization, t: int, mode: str = "sampled",
                        config: SamplingConfig | None = None) -> TheoremVerdict:
    """Tangent directions of ``Tan^{t-1}`` at points of V lie in the t-th osculating space."""
    if t < 1:
        raise ValueError("order must be >= 1")
    n_lam = comb(p.k + t - 1, t - 1)
    spans_ok = True
    checked = 0
    for pt in sample_points(p, config, "join", extra=n_lam):
        u, lam = pt[:p.k], pt[p.k:]
        base = jet_rank_at(p, u, t)
        cols = _join_columns_at(p, t - 1, u, lam)
        rows = list(jet_matrix(p, u, t).rows) + cols
        checked += 1
        if rank_exact(rows) != base:
            spans_ok = False
    tan_prev = tan_variety_dim(p, t - 1, mode, config)
    d_t = osc_dim(p, t, mode, config)
    inputs = {"tan_dim_prev": tan_prev, "d_t": d_t, "points": checked, "span_contained": spans_ok}
    return TheoremVerdict("tangent-lemma", t, True, inputs, spans_ok and tan_prev <= d_t)


def check_theorem_A(p: Parametrization, t: int, mode: str = "sampled",
                    config: SamplingConfig | None = None) -> TheoremVerdict:
    """Small t-th fundamental form forces an osculating defect of order t-1."""
    if t < 2:
        raise ValueError("order must be >= 2")
    k, N = p.k, p.N
    d_prev, d_t = osc_dim(p, t - 1, mode, config), osc_dim(p, t, mode, config)
    Delta = d_t - d_prev - 1
    ell = k - 1 - Delta
    inputs = {"k": k, "N": N, "Delta_t": Delta, "ell": ell, "d_prev": d_prev, "d_t": d_t}
    if ell <= 0:
        return TheoremVerdict("A", t, False, inputs,
                              notes=(f"Delta_{t} = {Delta} >= k-1: no defect is forced",))
    if k + d_prev > N:
        return TheoremVerdict("A", t, False, inputs, notes=(
            f"expected dim of Tan^{t - 1} is capped by N (k + d_{t - 1} = {k + d_prev} > {N}); "
            "the defect bound needs the uncapped expected dimension",))
    o_prev = osculating_defect(p, t - 1, mode, config)
    h = gauss_image_dim(p, t, mode, config)
    inputs.update({"o_prev": o_prev, "h": h})
    passed = o_prev >= ell and h <= k - ell
    notes = []
    if k == 1:
        where = "plane curve" if d_prev == 2 else f"curve inside a P^{d_prev}"
        notes.append(f"k=1, ell=1, h=0: {where} (d_{t} = d_{t - 1} = {d_prev})")
    elif ell == k:
        notes.append(f"ell=k, h=0: V lies in a P^{d_prev}")
    elif ell == k - 1 and t == 2:
        if h == 1:
            notes.append(f"ell=k-1, t=2, h=1: developable P^{k - 1}-bundle case")
        elif h == 0:
            notes.append(f"ell=k-1, t=2, h=0: hypersurface in a P^{k + 1}")
    return TheoremVerdict("A", t, True, inputs, passed, tuple(notes))


def check_theorem_B(p: Parametrization, t: int, mode: str = "sampled",
                    config: SamplingConfig | None = None) -> TheoremVerdict:
    """Defect ``o_t = ell`` versus Jacobian rank ``k - ell`` of the (t+1)-th fundamental form.

    Both directions are evaluated only under the dimension hypothesis
    ``Delta >= k - ell`` (projective reading); the affine reading is reported.
    """
    if t < 1:
        raise ValueError("order must be >= 1")
    k = p.k
    ell = osculating_defect(p, t, mode, config)
    ff = fundamental_form(p, t + 1, config=config, convention="taylor")
    Delta = ff.projdim
    jr = jacobian(ff, mode, config).generic_rank
    ell_rev = k - jr

    def gate(l):
        return Delta >= k - l

    fwd_app = ell > 0 and gate(ell)
    rev_app = gate(ell_rev)
    inputs = {
        "k": k, "ell": ell, "Delta": Delta, "jacobian_rank": jr, "ell_from_rank": ell_rev,
        "gate_projective": gate(ell), "gate_affine": Delta + 1 >= k - ell,
        "forward": (jr == k - ell) if fwd_app else None,
        "reverse": (ell == ell_rev) if rev_app else None,
    }
    if not (fwd_app or rev_app):
        note = (f"dimension hypothesis fails: Delta = {Delta} < k - ell = {k - ell}"
                f" (rank condition jr == k - ell is {jr == k - ell})")
        return TheoremVerdict("B", t, False, inputs, notes=(note,))
    passed = all(v for v in (inputs["forward"], inputs["reverse"]) if v is not None)
    return TheoremVerdict("B", t, True, inputs, passed)


def check_jacobian_chain(p: Parametrization, t: int, mode: str = "sampled",
                         config: SamplingConfig | None = None) -> TheoremVerdict:
    """Partials of the t-th fundamental form lie in the (t-1)-th, at every generic sample."""
    if t < 2:
        raise ValueError("order must be >= 2")
    results = []
    for u in generic_points(p, t, config):
        ff = fundamental_form(p, t, u, config, convention="taylor")
        prev = fundamental_form(p, t - 1, u, config, convention="taylor")
        partials = derivative_span(ff)
        results.append((contains(partials, prev), ff.projdim, prev.projdim, partials.projdim))
    full_prev = comb(p.k - 2 + t, t - 1) - 1
    inputs = {
        "points": len(results),
        "Delta_t": results[0][1],
        "Delta_prev": results[0][2],
        "partials_projdim": results[0][3],
        "prev_is_proper": results[0][2] < full_prev,
    }
    return TheoremVerdict("chain", t, True, inputs, all(r[0] for r in results))


THEOREMS = {
    "A": check_theorem_A,
    "B": check_theorem_B,
    "chain": check_jacobian_chain,
    "lemma": tangent_lemma_check,
}
