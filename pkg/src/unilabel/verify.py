"""Verification campaigns: embedders against hosts, prefix checks, oracle cross-checks."""

from __future__ import annotations

import csv
import io
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cycles import build_cycle_aware, build_cycle_oblivious, embed_cycle_aware, embed_cycle_oblivious
from .deg2 import build_deg2_universal, embed_deg2
from .degd import build_product_universal, embed_degD, embedding_to_ids, rand_decode, rand_encode
from .embedding import find_induced_embedding, is_induced_embedding, is_prefix_induced
from .enumerate import enumerate_bounded_degree, enumerate_deg2_family
from .errors import SizeGuard
from .graph import Graph, cycle_graph
from .paths import build_path_universal, embed_acyclic

CONSTRUCTIONS = ("paths", "deg2", "degd-det", "degd-rand", "cycles-aware", "cycles-oblivious")
ORACLE_CAP = 7

REPORT_CSV_HEADER = [
    "construction", "check", "n_min", "n_max", "members", "passed", "failed", "verdict", "seconds",
]


def construction_name(name: str) -> str:
    key = name.lower().replace("_", "-")
    if key not in CONSTRUCTIONS:
        raise ValueError(f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTIONS)}")
    return key


@dataclass
class VerificationReport:
    construction: str
    check: str
    n_range: tuple[int, ...]
    family_sizes: dict = field(default_factory=dict)
    passed: int = 0
    failed: int = 0
    counterexample: tuple[Graph, str] | None = None
    seconds: float = 0.0
    applicable: bool = True

    @property
    def ok(self) -> bool:
        if not self.applicable:
            return True
        sizes_ok = all(c > 0 for c in self.family_sizes.values()) if self.family_sizes else True
        return self.failed == 0 and sizes_ok and self.passed > 0

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "NOT-APPLICABLE"
        return "PASS" if self.ok else "FAIL"

    def merge(self, n: int, members: int, passed: int, failed: int, example) -> None:
        self.family_sizes[n] = members
        self.passed += passed
        self.failed += failed
        if example is not None and self.counterexample is None:
            self.counterexample = example

    def to_text(self, timing: bool = True) -> str:
        lo, hi = (min(self.n_range), max(self.n_range)) if self.n_range else ("-", "-")
        line = (
            f"{self.verdict:<14} {self.construction:<17} {self.check:<12} n={lo}..{hi} "
            f"members={self.passed + self.failed} failed={self.failed}"
        )
        if timing:
            line += f" {self.seconds:.2f}s"
        if self.counterexample is not None:
            g, reason = self.counterexample
            line += f"\n  counterexample: {g!r} ({reason})"
        return line

    def csv_row(self, timing: bool = True) -> list:
        lo, hi = (min(self.n_range), max(self.n_range)) if self.n_range else ("", "")
        return [
            self.construction, self.check, lo, hi, self.passed + self.failed,
            self.passed, self.failed, self.verdict, f"{self.seconds:.3f}" if timing else "",
        ]


def reports_to_csv(reports: Iterable[VerificationReport], timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_CSV_HEADER)
    for r in reports:
        w.writerow(r.csv_row(timing))
    return buf.getvalue()


def family(construction: str, n: int, D: int | None = None) -> Iterable[Graph]:
    """Default family of size-``n`` members for a construction."""
    c = construction_name(construction)
    if c == "paths":
        return enumerate_deg2_family(n, acyclic=True)
    if c == "deg2":
        return enumerate_deg2_family(n, acyclic=False)
    if c in ("degd-det", "degd-rand"):
        return enumerate_bounded_degree(n, D)
    return (cycle_graph(ell) for ell in range(3, n + 1))


def build_host(construction: str, n: int, D: int | None = None) -> Graph | None:
    c = construction_name(construction)
    if c == "paths":
        return build_path_universal(n)
    if c == "deg2":
        return build_deg2_universal(n)
    if c == "degd-det":
        return build_product_universal(n, D)
    if c == "cycles-aware":
        return build_cycle_aware(n)
    if c == "cycles-oblivious":
        return build_cycle_oblivious(n)
    return None  # the randomised scheme has no materialised host


def embed_into_ids(construction: str, g: Graph, n: int, D: int | None = None):
    """Embedding of ``g`` as a list of host vertex ids."""
    c = construction_name(construction)
    if c == "paths":
        return list(embed_acyclic(g).assignments)
    if c == "deg2":
        return list(embed_deg2(g).assignments)
    if c == "degd-det":
        return list(embedding_to_ids(embed_degD(g, D), n, D).assignments)
    if c == "cycles-aware":
        return embed_cycle_aware(g.n, n)
    if c == "cycles-oblivious":
        return embed_cycle_oblivious(g.n, n)
    raise ValueError("the randomised scheme has no host ids")


def _rand_round_trip(g: Graph, D: int, seed) -> str:
    _, labels = rand_encode(g, D, seed)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if rand_decode(labels[u], labels[v]) != g.has_edge(u, v):
                return f"decode-mismatch:{u}-{v}"
    return ""


def _check_n(construction: str, n: int, D, host, seed) -> tuple[int, int, int, int, object]:
    members = passed = failed = 0
    example = None
    host = build_host(construction, n, D) if host is None else host
    for g in family(construction, n, D):
        members += 1
        try:
            if construction == "degd-rand":
                reason = _rand_round_trip(g, D, f"{seed}:{n}:{members}")
            else:
                res = is_induced_embedding(g, host, embed_into_ids(construction, g, n, D))
                reason = "" if res else res.reason
        except (AssertionError, ValueError, RuntimeError) as exc:
            reason = f"{type(exc).__name__}: {exc}"
        if reason:
            failed += 1
            example = example or (g, reason)
        else:
            passed += 1
    return n, members, passed, failed, example


def verify_universality(
    construction: str,
    n_range: Iterable[int],
    D: int | None = None,
    *,
    host: Callable[[int], Graph] | None = None,
    seed: int = 0,
    jobs: int = 1,
) -> VerificationReport:
    """Embed every family member of every size in ``n_range`` and check it.

    ``host`` replaces the construction's graph (as a function of ``n``); this
    is how the negative controls plant a broken host.
    """
    c = construction_name(construction)
    ns = tuple(n_range)
    rep = VerificationReport(c, "universality", ns)
    start = time.perf_counter()
    args = [(c, n, D, None if host is None else host(n), seed) for n in ns]
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_n, *zip(*args)))
    else:
        results = [_check_n(*a) for a in args]
    for n, members, passed, failed, example in results:
        rep.merge(n, members, passed, failed, example)
    rep.seconds = time.perf_counter() - start
    return rep


def verify_prefix_monotone(construction: str, n_range: Iterable[int]) -> VerificationReport:
    """Identity map on the size-``n`` graph into the size-``n+1`` graph, for each ``n``."""
    c = construction_name(construction)
    ns = tuple(n_range)
    rep = VerificationReport(c, "prefix", ns)
    if c not in ("paths", "deg2", "cycles-oblivious"):
        rep.applicable = False
        return rep
    start = time.perf_counter()
    for n in ns:
        res = is_prefix_induced(build_host(c, n), build_host(c, n + 1))
        example = None if res else (build_host(c, n), res.reason)
        rep.merge(n, 1, int(bool(res)), int(not res), example)
    rep.seconds = time.perf_counter() - start
    return rep


def cross_check_oracle(
    construction: str, n_cap: int, D: int | None = None, *, host: Callable[[int], Graph] | None = None
) -> VerificationReport:
    """Let the backtracking search confirm every family member embeds."""
    c = construction_name(construction)
    if n_cap > ORACLE_CAP:
        raise SizeGuard(f"oracle cross-check is limited to n <= {ORACLE_CAP}")
    lo = 3 if c.startswith("cycles") else 0
    ns = tuple(range(lo, n_cap + 1))
    rep = VerificationReport(c, "oracle", ns)
    start = time.perf_counter()
    for n in ns:
        h = build_host(c, n, D) if host is None else host(n)
        members = passed = 0
        example = None
        for g in family(c, n, D):
            members += 1
            if find_induced_embedding(g, h) is not None:
                passed += 1
            elif example is None:
                example = (g, "oracle-found-no-embedding")
        rep.merge(n, members, passed, members - passed, example)
    rep.seconds = time.perf_counter() - start
    return rep


def oracle_negative_control() -> bool:
    """A triangle has no induced embedding in the acyclic path graph."""
    return find_induced_embedding(cycle_graph(3), build_path_universal(4)) is None


def edge_deletion_control(
    construction: str, n_range: Iterable[int], D: int | None = None, seed: int = 0, edge=None
) -> VerificationReport:
    """Universality campaign after deleting one edge from every host that has it.

    The edge is drawn with ``random.Random(seed)`` from the host at the
    largest size in ``n_range`` unless ``edge`` is given. A report that still
    passes means the campaign never exercised that edge.
    """
    c = construction_name(construction)
    ns = tuple(n_range)
    top = build_host(c, max(ns), D)
    if top is None or top.num_edges == 0:
        raise ValueError(f"{c} at n={max(ns)} has no edge to delete")
    u, v = edge if edge is not None else random.Random(seed).choice(top.edges())

    def broken(n):
        h = build_host(c, n, D)
        return h.without_edge(u, v) if v < h.n and h.has_edge(u, v) else h

    rep = verify_universality(c, ns, D, host=broken)
    rep.check = f"drop-{u}-{v}"
    return rep
