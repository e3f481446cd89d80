"""Assemble per-order invariants and theorem verdicts into a serializable report."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from math import comb

from . import __version__
from .defects import THEOREMS, defect_report
from .errors import OsculantError
from .jets import MODES, Parametrization, SamplingConfig, expected_dims, global_laplace_basis, osc_dim
from .parser import format_poly

SCHEMA = "osculant.report/1"
MAX_ORDER_CEILING = 6

_INT_FIELDS = ("d", "e", "k_t", "trivial", "delta", "delta_forced", "delta_global",
               "Delta", "tan_dim", "o", "h", "dual_dim")


@dataclass(frozen=True)
class ReportOptions:
    mode: str = "sampled"
    seed: int = 0
    samples: int = 5
    coord_bound: int = 100
    theorems: bool = True
    cross_check: bool = False
    max_order_ceiling: int = MAX_ORDER_CEILING

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")

    @property
    def config(self) -> SamplingConfig:
        return SamplingConfig(seed=self.seed, samples=self.samples, bound=self.coord_bound)


@dataclass(frozen=True)
class Report:
    input: dict
    meta: dict
    orders: tuple[dict, ...]
    verdicts: tuple[dict, ...] = ()
    cross_check: dict | None = None
    schema: str = SCHEMA

    @property
    def failed(self) -> bool:
        return any(v.get("status") == "fail" for v in self.verdicts)

    @property
    def errors(self) -> list[dict]:
        blocks = [o for o in self.orders if "error" in o] + [v for v in self.verdicts if "error" in v]
        return blocks

    def order(self, t: int) -> dict:
        return next(o for o in self.orders if o["t"] == t)

    def to_dict(self) -> dict:
        out = {
            "schema": self.schema,
            "input": self.input,
            "meta": self.meta,
            "orders": list(self.orders),
            "verdicts": list(self.verdicts),
        }
        if self.cross_check is not None:
            out["cross_check"] = self.cross_check
        return out

    @classmethod
    def from_dict(cls, doc: dict) -> "Report":
        if doc.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {doc.get('schema')!r}")
        return cls(doc["input"], doc["meta"], tuple(doc["orders"]), tuple(doc["verdicts"]),
                   doc.get("cross_check"), doc["schema"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        head = f"{self.input['name']}: k={self.input['k']} N={self.input['N']}"
        meta = " ".join(f"{k}={self.meta[k]}" for k in ("mode", "seed", "samples", "bound"))
        lines = [head, meta, ""]
        cols = ["t"] + list(_INT_FIELDS)
        table = [cols]
        for o in self.orders:
            if "error" in o:
                table.append([str(o["t"]), f"error: {o['error']}"])
                continue
            table.append([str(o["t"])] + ["-" if o.get(c) is None else str(o[c]) for c in cols[1:]])
        widths = [max(len(r[i]) for r in table if i < len(r) and len(r) == len(cols))
                  for i in range(len(cols))]
        for r in table:
            if len(r) != len(cols):
                lines.append("  ".join(r))
            else:
                lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)))
        if self.verdicts:
            lines.append("")
            for v in self.verdicts:
                status = v.get("status", "error")
                extra = "; ".join(v.get("notes", [])) or v.get("error", "")
                lines.append(f"{v['theorem']:<13} t={v['order']}  {status}" + (f"  ({extra})" if extra else ""))
        if self.cross_check is not None:
            lines.append("")
            lines.append("cross-check: " + ("agree" if self.cross_check["agree"] else
                                            f"mismatch {self.cross_check['mismatches']}"))
        return "\n".join(lines) + "\n"


def _format_coord(f) -> str:
    if f.is_polynomial():
        return format_poly(f.num)
    den = format_poly(f.base) if f.exp == 1 else f"({format_poly(f.base)})^{f.exp}"
    return f"({format_poly(f.num)})/({den})"


def _echo(p: Parametrization) -> dict:
    return {"name": p.name, "k": p.k, "N": p.N, "coordinates": [_format_coord(c) for c in p.coords]}


def _order_block(p: Parametrization, t: int, mode: str, config: SamplingConfig) -> dict:
    d_prev = osc_dim(p, t - 1, mode, config)
    rep = defect_report(p, t, mode, config)
    e, k_t, trivial = expected_dims(p, t, d_prev)
    new = rep.d - d_prev
    top = comb(p.k - 1 + t, t)
    block = {
        "t": t, "d": rep.d, "e": e, "k_t": k_t, "trivial": trivial,
        "delta": top - new,
        "delta_forced": max(0, d_prev + top - p.N),
        "delta_global": None,
        "Delta": new - 1,
        "tan_dim": rep.tan_dim, "o": rep.o, "h": rep.h, "dual_dim": rep.dual_dim,
        "dual_degenerate": rep.dual_degenerate,
    }
    if p.is_polynomial():
        block["delta_global"] = global_laplace_basis(p, t).count
    return block


def _guard(fn, *args) -> dict:
    try:
        return fn(*args)
    except (OsculantError, ArithmeticError, ValueError) as exc:
        return {"error": f"{type(exc).__name__}: {exc}"}


def _verdicts(p: Parametrization, t_max: int, mode: str, config: SamplingConfig) -> list[dict]:
    out = []
    for t in range(1, t_max + 1):
        for name, check in THEOREMS.items():
            if name in ("A", "chain") and t < 2:
                continue
            block = _guard(lambda: check(p, t, mode, config).to_dict())
            block.setdefault("theorem", name)
            block.setdefault("order", t)
            out.append(block)
    return out


def _integers(orders) -> dict:
    return {(o["t"], f): o.get(f) for o in orders for f in _INT_FIELDS if "error" not in o}


def run_report(p: Parametrization, t_max: int, options: ReportOptions | None = None) -> Report:
    """Compute every order ``1..t_max``; an error in one order is recorded, not raised."""
    options = options or ReportOptions()
    if not 1 <= t_max <= options.max_order_ceiling:
        raise ValueError(f"max order must lie in 1..{options.max_order_ceiling}")
    config = options.config
    orders = []
    for t in range(1, t_max + 1):
        block = _guard(_order_block, p, t, options.mode, config)
        block.setdefault("t", t)
        orders.append(block)
    verdicts = _verdicts(p, t_max, options.mode, config) if options.theorems else []
    cross = None
    if options.cross_check:
        other = "sampled" if options.mode == "symbolic" else "symbolic"
        alt = run_report(p, t_max, replace(options, mode=other, cross_check=False, theorems=False))
        mine, theirs = _integers(orders), _integers(alt.orders)
        bad = sorted(f"{f}_{t}" for (t, f) in mine if theirs.get((t, f)) != mine[(t, f)])
        cross = {"against": other, "agree": not bad, "mismatches": bad}
    meta = {
        "mode": options.mode, "seed": options.seed, "samples": options.samples,
        "bound": options.coord_bound, "max_order": t_max, "version": __version__,
    }
    return Report(_echo(p), meta, tuple(orders), tuple(verdicts), cross)
