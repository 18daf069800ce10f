"""Evaluators for vertex-count bounds on universal graphs of bounded degree.

Values are exact integers or fractions where a closed form exists, and log2
values otherwise. Asymptotic terms ``O(f)`` are evaluated as ``c * f`` with
every ``c`` taken from an explicit constants mapping (default 1).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .deg2 import deg2_universal_size
from .degd import half_degree, product_vertex_count
from .enumerate import BOUNDED_DEGREE_CAP, enumerate_bounded_degree

DEFAULT_CONSTANTS = {
    "rand_upper": 1.0,
    "rand_lower": 1.0,
    "simple_lower": 1.0,
    "graph_count": 1.0,
}

CSV_HEADER = ["n", "D", "name", "kind", "log2_value", "exact_value"]


def log2_exact(value) -> float:
    """log2 of a positive int or Fraction without converting to float first."""
    if isinstance(value, Fraction):
        return math.log2(value.numerator) - math.log2(value.denominator)
    return math.log2(value)


def count_bounded_degree_exact(n: int, D: int, cap: int = BOUNDED_DEGREE_CAP) -> int:
    """Number of labelled graphs on ``[n]`` with maximum degree at most ``D``."""
    return sum(1 for _ in enumerate_bounded_degree(n, D, cap))


def matching_count_lower_bound(n: int, D: int) -> Fraction:
    """``((h)!)^D / D^(D h)`` with ``h = floor(n/2)``: graphs made of ``D`` perfect matchings."""
    h = n // 2
    return Fraction(factorial(h) ** D, D ** (D * h))


def gv_lower_simple(n: int, D: int, c: float = 1.0) -> float:
    """log2 of ``c * (n / (2eD))^(D/2)``; non-positive means the bound says nothing."""
    return math.log2(c) + (D / 2) * math.log2(n / (2 * math.e * D))


def gv_upper_det(n: int, D: int) -> tuple[Fraction, int]:
    """``(2^(k+1) n^k / (k-1)!, exact size of the product graph)``."""
    k = half_degree(D)
    bound = Fraction(2 ** (k + 1) * n**k, factorial(k - 1))
    return bound, product_vertex_count(n, D)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str  # lower | upper | construction | core | count
    log2_value: float
    exact_value: int | Fraction | None = None
    vacuous: bool = False
    rigorous: bool = False  # holds with no hidden constant


@dataclass
class BoundReport:
    n: int
    D: int
    entries: list[BoundEntry] = field(default_factory=list)
    o_constants: dict = field(default_factory=dict)

    def get(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    @property
    def exact_construction_sizes(self) -> dict:
        return {e.name: e.exact_value for e in self.entries if e.kind == "construction"}

    def dominance_violations(self) -> list[tuple[str, str]]:
        """Rigorous lower bounds that exceed a construction size."""
        out = []
        for lo in self.entries:
            if lo.kind != "lower" or not lo.rigorous:
                continue
            for c in self.entries:
                if c.kind == "construction" and lo.log2_value > log2_exact(c.exact_value) + 1e-9:
                    out.append((lo.name, c.name))
        return out

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(CSV_HEADER)
        for e in self.entries:
            kind = e.kind + ("-vacuous" if e.vacuous else "")
            exact = "" if e.exact_value is None else str(e.exact_value)
            w.writerow([self.n, self.D, e.name, kind, f"{e.log2_value:.6f}", exact])
        return buf.getvalue()


def gv_bounds_table(n: int, D: int, constants: dict | None = None) -> BoundReport:
    if not 1 <= D <= n:
        raise ValueError(f"need 1 <= D <= n, got n={n}, D={D}")
    cs = dict(DEFAULT_CONSTANTS)
    cs.update(constants or {})
    unknown = set(cs) - set(DEFAULT_CONSTANTS)
    if unknown:
        raise ValueError(f"unknown constants: {sorted(unknown)}")

    rep = BoundReport(n, D, o_constants=cs)
    add = rep.entries.append
    binom = comb(n // 2, D // 2)
    core = log2_exact(binom)
    spread = math.sqrt(D * math.log2(n)) * math.log2(n / D) if n > 1 else 0.0
    add(BoundEntry("binomial", "core", core, binom))
    add(BoundEntry("rand_upper", "upper", core + cs["rand_upper"] * spread))
    rand_lower = core - cs["rand_lower"] * spread
    add(BoundEntry("rand_lower", "lower", rand_lower, vacuous=rand_lower <= 0))

    bound, size = gv_upper_det(n, D)
    add(BoundEntry("det_bound", "upper", log2_exact(bound), bound))
    add(BoundEntry("det_size", "construction", log2_exact(size), size, rigorous=True))
    if D <= 2:
        u = deg2_universal_size(n)
        add(BoundEntry("deg2_size", "construction", log2_exact(u), u, rigorous=True))

    simple = gv_lower_simple(n, D, cs["simple_lower"])
    add(BoundEntry("simple_lower", "lower", simple, vacuous=simple <= 0))
    # a universal graph on N vertices holds at most N^n labelled graphs on [n]
    matching = matching_count_lower_bound(n, D)
    root = log2_exact(matching) / n
    add(BoundEntry("matching_root", "lower", root, vacuous=root <= 0, rigorous=True))
    if n >= 2 * D:
        count = comb(comb(n, 2), n * D // 2)
        log_count = log2_exact(count) - cs["graph_count"] * n * spread
        add(BoundEntry("graph_count_lower", "count", log_count, vacuous=log_count <= 0))
        add(BoundEntry("graph_count_root", "lower", log_count / n, vacuous=log_count <= 0))
    return rep
