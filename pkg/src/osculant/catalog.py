"""Built-in parametrizations of classical varieties and their regression tables."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import UnknownVariety
from .jets import Parametrization
from .parser import parse_expression

_V3P2 = ["u1", "u2", "u1^2", "u1*u2", "u2^2", "u1^3", "u1^2*u2", "u1*u2^2", "u2^3"]

# Fixed affine charts, all polynomial. Cones put the vertex direction on the
# last variable; tangent developables are c(u1) + u2*c'(u1).
_FIXED: dict[str, tuple[int, list[str]]] = {
    "plane_cubic_p3": (1, ["u1", "u1^3", "2*u1 + 3*u1^3"]),
    "veronese2": (2, ["u1", "u2", "u1^2", "u1*u2", "u2^2"]),
    "v3p2": (2, _V3P2),
    "segre21": (3, ["u1", "u2", "u3", "u1*u3", "u2*u3"]),
    "cone_rnc4": (2, ["u1", "u1^2", "u1^3", "u1^4 + u2"]),
    "cone_rnc5": (2, ["u1", "u1^2", "u1^3", "u1^4", "u1^5 + u2"]),
    "cone_veronese": (3, ["u1", "u2", "u1^2", "u1*u2", "u2^2", "u3"]),
    "cone_v3p2": (3, _V3P2 + ["u3"]),
    "tangentdev_rnc3": (2, ["u1 + u2", "u1^2 + 2*u1*u2", "u1^3 + 3*u1^2*u2"]),
    "tangentdev_rnc4": (2, ["u1 + u2", "u1^2 + 2*u1*u2", "u1^3 + 3*u1^2*u2",
                            "u1^4 + 4*u1^3*u2"]),
}

_LINEAR = re.compile(r"linear\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_RNC = re.compile(r"rnc\(\s*(\d+)\s*\)")

RNC_MAX = 6


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    parametrization: Parametrization
    expected: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)


def _build(name: str, k: int, coords: list[str]) -> Parametrization:
    return Parametrization.from_polys(name, k, [parse_expression(c, k) for c in coords])


def _parametrization(name: str) -> Parametrization:
    if name in _FIXED:
        k, coords = _FIXED[name]
        return _build(name, k, coords)
    m = _LINEAR.fullmatch(name)
    if m:
        k, N = int(m.group(1)), int(m.group(2))
        if not 1 <= k <= N:
            raise UnknownVariety(name)
        return _build(f"linear({k},{N})", k, [f"u{i + 1}" for i in range(k)] + ["0"] * (N - k))
    m = _RNC.fullmatch(name)
    if m:
        n = int(m.group(1))
        if not 1 <= n <= RNC_MAX:
            raise UnknownVariety(name)
        return _build(f"rnc({n})", 1, [f"u1^{i}" for i in range(1, n + 1)])
    raise UnknownVariety(name)


def catalog_names() -> list[str]:
    """Stable identifiers of every built-in variety (``linear(k,N)`` accepts any 1 <= k <= N)."""
    return (["linear(2,4)", "linear(3,5)"] + [f"rnc({n})" for n in range(1, RNC_MAX + 1)]
            + list(_FIXED))


def _canonical(name: str) -> str:
    return re.sub(r"\s+", "", name)


def catalog_get(name: str) -> CatalogEntry:
    name = _canonical(name)
    p = _parametrization(name)
    expected, provenance = EXPECTED.get(p.name, ({}, {}))
    return CatalogEntry(p.name, p, dict(expected), dict(provenance))


def catalog_expected(name: str) -> dict:
    entry = catalog_get(name)
    if not entry.expected:
        raise UnknownVariety(name)
    return entry.expected


# Regression table, frozen from the symbolic mode (orders 1..5) and spot-checked by hand.
# ``pass`` lists the theorem checks that are applicable and pass for t <= 4; all others
# are not applicable.
_TABLE: dict[str, dict] = {
    "linear(2,4)": {
        "d": (2, 2, 2, 2, 2),
        "delta": (0, 3, 4, 5, 6),
        "Delta": (1, -1, -1, -1, -1),
        "o": (2, 2, 2, 2, 2),
        "h": (0, 0, 0, 0, 0),
        "dual": (1, 1, 1, 1, 1),
        "tan": (2, 2, 2, 2, 2),
        "pass": ('A_2', 'A_3', 'A_4', 'chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "linear(3,5)": {
        "d": (3, 3, 3, 3, 3),
        "delta": (0, 6, 10, 15, 21),
        "Delta": (2, -1, -1, -1, -1),
        "o": (2, 2, 2, 2, 2),
        "h": (0, 0, 0, 0, 0),
        "dual": (1, 1, 1, 1, 1),
        "tan": (3, 3, 3, 3, 3),
        "pass": ('chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "rnc(1)": {
        "d": (1, 1, 1, 1, 1),
        "delta": (0, 1, 1, 1, 1),
        "Delta": (0, -1, -1, -1, -1),
        "o": (0, 0, 0, 0, 0),
        "h": (0, 0, 0, 0, 0),
        "dual": (-1, -1, -1, -1, -1),
        "tan": (1, 1, 1, 1, 1),
        "pass": ('chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "rnc(2)": {
        "d": (1, 2, 2, 2, 2),
        "delta": (0, 0, 1, 1, 1),
        "Delta": (0, 0, -1, -1, -1),
        "o": (0, 0, 0, 0, 0),
        "h": (1, 0, 0, 0, 0),
        "dual": (1, -1, -1, -1, -1),
        "tan": (2, 2, 2, 2, 2),
        "pass": ('chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "rnc(3)": {
        "d": (1, 2, 3, 3, 3),
        "delta": (0, 0, 0, 1, 1),
        "Delta": (0, 0, 0, -1, -1),
        "o": (0, 0, 0, 0, 0),
        "h": (1, 1, 0, 0, 0),
        "dual": (2, 1, -1, -1, -1),
        "tan": (2, 3, 3, 3, 3),
        "pass": ('chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "rnc(4)": {
        "d": (1, 2, 3, 4, 4),
        "delta": (0, 0, 0, 0, 1),
        "Delta": (0, 0, 0, 0, -1),
        "o": (0, 0, 0, 0, 0),
        "h": (1, 1, 1, 0, 0),
        "dual": (3, 2, 1, -1, -1),
        "tan": (2, 3, 4, 4, 4),
        "pass": ('chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "rnc(5)": {
        "d": (1, 2, 3, 4, 5),
        "delta": (0, 0, 0, 0, 0),
        "Delta": (0, 0, 0, 0, 0),
        "o": (0, 0, 0, 0, 0),
        "h": (1, 1, 1, 1, 0),
        "dual": (4, 3, 2, 1, -1),
        "tan": (2, 3, 4, 5, 5),
        "pass": ('chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "rnc(6)": {
        "d": (1, 2, 3, 4, 5),
        "delta": (0, 0, 0, 0, 0),
        "Delta": (0, 0, 0, 0, 0),
        "o": (0, 0, 0, 0, 0),
        "h": (1, 1, 1, 1, 1),
        "dual": (5, 4, 3, 2, 1),
        "tan": (2, 3, 4, 5, 6),
        "pass": ('chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "plane_cubic_p3": {
        "d": (1, 2, 2, 2, 2),
        "delta": (0, 0, 1, 1, 1),
        "Delta": (0, 0, -1, -1, -1),
        "o": (0, 1, 1, 1, 1),
        "h": (1, 0, 0, 0, 0),
        "dual": (2, 0, 0, 0, 0),
        "tan": (2, 2, 2, 2, 2),
        "pass": ('A_3', 'A_4', 'chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "veronese2": {
        "d": (2, 5, 5, 5, 5),
        "delta": (0, 0, 4, 5, 6),
        "Delta": (1, 2, -1, -1, -1),
        "o": (0, 0, 0, 0, 0),
        "h": (2, 0, 0, 0, 0),
        "dual": (4, -1, -1, -1, -1),
        "tan": (4, 5, 5, 5, 5),
        "pass": ('B_1', 'chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "v3p2": {
        "d": (2, 5, 9, 9, 9),
        "delta": (0, 0, 0, 5, 6),
        "Delta": (1, 2, 3, -1, -1),
        "o": (0, 0, 0, 0, 0),
        "h": (2, 2, 0, 0, 0),
        "dual": (8, 5, -1, -1, -1),
        "tan": (4, 7, 9, 9, 9),
        "pass": ('B_1', 'B_2', 'chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "segre21": {
        "d": (3, 5, 5, 5, 5),
        "delta": (0, 4, 10, 15, 21),
        "Delta": (2, 1, -1, -1, -1),
        "o": (0, 0, 0, 0, 0),
        "h": (3, 0, 0, 0, 0),
        "dual": (4, -1, -1, -1, -1),
        "tan": (5, 5, 5, 5, 5),
        "pass": ('chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "cone_rnc4": {
        "d": (2, 3, 4, 4, 4),
        "delta": (0, 2, 3, 5, 6),
        "Delta": (1, 0, 0, -1, -1),
        "o": (1, 0, 0, 0, 0),
        "h": (1, 1, 0, 0, 0),
        "dual": (2, 1, -1, -1, -1),
        "tan": (3, 4, 4, 4, 4),
        "pass": ('A_2', 'chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "cone_rnc5": {
        "d": (2, 3, 4, 5, 5),
        "delta": (0, 2, 3, 4, 6),
        "Delta": (1, 0, 0, 0, -1),
        "o": (1, 1, 0, 0, 0),
        "h": (1, 1, 1, 0, 0),
        "dual": (3, 2, 1, -1, -1),
        "tan": (3, 4, 5, 5, 5),
        "pass": ('A_2', 'A_3', 'chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "cone_veronese": {
        "d": (3, 6, 6, 6, 6),
        "delta": (0, 3, 10, 15, 21),
        "Delta": (2, 2, -1, -1, -1),
        "o": (1, 0, 0, 0, 0),
        "h": (2, 0, 0, 0, 0),
        "dual": (4, -1, -1, -1, -1),
        "tan": (5, 6, 6, 6, 6),
        "pass": ('B_1', 'chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "cone_v3p2": {
        "d": (3, 6, 10, 10, 10),
        "delta": (0, 3, 6, 15, 21),
        "Delta": (2, 2, 3, -1, -1),
        "o": (1, 1, 0, 0, 0),
        "h": (2, 2, 0, 0, 0),
        "dual": (8, 5, -1, -1, -1),
        "tan": (5, 8, 10, 10, 10),
        "pass": ('B_1', 'B_2', 'chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "tangentdev_rnc3": {
        "d": (2, 3, 3, 3, 3),
        "delta": (0, 2, 4, 5, 6),
        "Delta": (1, 0, -1, -1, -1),
        "o": (0, 0, 0, 0, 0),
        "h": (1, 0, 0, 0, 0),
        "dual": (1, -1, -1, -1, -1),
        "tan": (3, 3, 3, 3, 3),
        "pass": ('chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
    "tangentdev_rnc4": {
        "d": (2, 3, 4, 4, 4),
        "delta": (0, 2, 3, 5, 6),
        "Delta": (1, 0, 0, -1, -1),
        "o": (1, 0, 0, 0, 0),
        "h": (1, 1, 0, 0, 0),
        "dual": (2, 1, -1, -1, -1),
        "tan": (3, 4, 4, 4, 4),
        "pass": ('A_2', 'chain_2', 'chain_3', 'chain_4', 'lemma_1', 'lemma_2', 'lemma_3', 'lemma_4'),
    },
}

_PROVENANCE: dict[str, str] = {
    "linear(2,4)": "all derivatives of order >= 2 vanish; Tan^t = V is a plane in P^4, expected min(4, 4)",
    "linear(3,5)": "all derivatives of order >= 2 vanish; Tan^t = V is a P^3 while min(k + d_t, N) = 5",
    "rnc(4)": "osculating spaces of the normal curve fill P^4 at order 4, leaving one Laplace equation at order 5",
    "plane_cubic_p3": "a plane curve: d_t stays 2 and Tan^2 is the plane itself",
    "veronese2": "second derivatives span the whole P^5; 4 of the order-3 equations are forced by N",
    "segre21": "k_2 = 9 > N = 5 forces 4 Laplace equations; u1u3, u2u3 give the only quadrics",
    "cone_rnc4": "cone over a quartic curve; tangent planes are constant along the rulings",
    "cone_rnc5": "cone over a quintic curve; osculating 2-spaces are constant along the rulings",
    "cone_veronese": "cone over the Veronese surface; |II| is the net of conics in v1, v2",
    "cone_v3p2": "cone over the cubic Veronese surface; third fundamental form misses the vertex direction",
    "tangentdev_rnc4": "tangent developable of the quartic curve; tangent planes constant along the rulings",
}

EXPECTED: dict[str, tuple[dict, dict]] = {
    name: (row, {"source": "symbolic oracle", "check": _PROVENANCE.get(name, "")})
    for name, row in _TABLE.items()
}
