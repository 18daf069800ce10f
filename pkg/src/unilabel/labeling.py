"""Adjacency labelling schemes on top of the universal graph constructions.

A vertex ``u`` of a family member gets the bit encoding of its image under
the construction's embedder, so labels are unique and two labels decide
adjacency. Graph-backed schemes use fixed-width big-endian vertex ids (at
least one bit). The degree-``D`` schemes use the field layouts of
:mod:`unilabel.degd`.

Size-aware schemes need the family size ``n`` at decode time: ``degD_rand``
(label fields are ``ceil(log2 n)`` wide), ``cycles_aware`` (the graph
depends on ``n``) and ``degD_det`` (field widths depend on ``n``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycles import (
    aware_size,
    build_cycle_aware,
    build_cycle_oblivious,
    embed_cycle_aware,
    embed_cycle_oblivious,
    oblivious_adjacent,
    oblivious_size,
)
from .deg2 import build_deg2_universal, deg2_universal_size, embed_deg2, u_adjacent
from .degd import (
    embed_degD,
    neighbour_cap,
    parse_product_label,
    parse_rand_label,
    product_adjacent,
    product_label_bits,
    product_label_max_bits,
    rand_decode,
    rand_encode,
    rand_label_bits,
    rand_label_max_bits,
)
from .embedding import is_prefix_induced
from .errors import FamilyMismatch, MissingContext
from .graph import Graph, Kind, decompose_components, is_acyclic
from .paths import build_path_universal, embed_acyclic, path_universal_size, up_adjacent

SCHEME_NAMES = ("paths", "deg2", "degD_det", "degD_rand", "cycles_aware", "cycles_oblivious")
SIZE_AWARE = frozenset({"degD_det", "degD_rand", "cycles_aware"})

_ALIASES = {name.lower().replace("_", "-"): name for name in SCHEME_NAMES}


def scheme_name(name: str) -> str:
    """Accept both ``degD_det`` and the CLI spelling ``degd-det``."""
    if name in SCHEME_NAMES:
        return name
    try:
        return _ALIASES[name.lower().replace("_", "-")]
    except KeyError:
        raise ValueError(f"unknown scheme {name!r}; choose from {', '.join(SCHEME_NAMES)}") from None


@dataclass(frozen=True)
class Scheme:
    name: str
    n: int | None = None
    D: int | None = None
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "name", scheme_name(self.name))

    @property
    def size_aware(self) -> bool:
        return self.name in SIZE_AWARE


@dataclass(frozen=True)
class LabeledGraph:
    scheme: Scheme
    labels: tuple[str, ...]
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels are not unique")


def _id_width(size: int) -> int:
    return max(1, (size - 1).bit_length())


def _bits(value: int, width: int) -> str:
    return format(value, f"0{width}b")


def _universal_size(name: str, n: int) -> int:
    return {
        "paths": path_universal_size,
        "deg2": deg2_universal_size,
        "cycles_aware": aware_size,
        "cycles_oblivious": oblivious_size,
    }[name](n)


def _single_cycle(g: Graph) -> list[int]:
    comps = decompose_components(g) if g.max_degree() <= 2 else []
    if len(comps) != 1 or comps[0].kind is not Kind.CYCLE:
        raise FamilyMismatch("cycle schemes label a single cycle")
    return list(comps[0].vertices)


def encode(scheme: Scheme, g: Graph) -> LabeledGraph:
    name = scheme.name
    n = g.n if scheme.n is None else scheme.n
    if name in ("paths", "deg2"):
        if g.max_degree() > 2:
            raise FamilyMismatch(f"{name} scheme needs maximum degree 2")
        if name == "paths" and not is_acyclic(g):
            raise FamilyMismatch("paths scheme needs an acyclic graph")
        if n != g.n:
            raise FamilyMismatch(f"graph has {g.n} vertices, scheme expects {n}")
        emb = embed_acyclic(g) if name == "paths" else embed_deg2(g)
        w = _id_width(_universal_size(name, n))
        labels = tuple(_bits(emb[u], w) for u in range(g.n))
        return LabeledGraph(Scheme(name, n, scheme.D, scheme.seed), labels)

    if name in ("degD_det", "degD_rand"):
        if scheme.D is None:
            raise MissingContext(f"{name} needs the degree bound D")
        if g.max_degree() > scheme.D:
            raise FamilyMismatch(f"maximum degree {g.max_degree()} exceeds D={scheme.D}")
        if n != g.n:
            raise FamilyMismatch(f"graph has {g.n} vertices, scheme expects {n}")
        if name == "degD_det":
            emb = embed_degD(g, scheme.D)
            labels = tuple(product_label_bits(emb[u], n, scheme.D) for u in range(g.n))
            return LabeledGraph(Scheme(name, n, scheme.D, scheme.seed), labels)
        rs, rl = rand_encode(g, scheme.D, scheme.seed)
        labels = tuple(rand_label_bits(l) for l in rl)
        return LabeledGraph(Scheme(name, n, scheme.D, scheme.seed), labels, {"rand_scheme": rs})

    order = _single_cycle(g)
    if not 3 <= g.n <= n:
        raise FamilyMismatch(f"cycle of length {g.n} is not in the family of size {n}")
    embed = embed_cycle_aware if name == "cycles_aware" else embed_cycle_oblivious
    host_vertices = embed(g.n, n)
    image = dict(zip(order, host_vertices))
    w = _id_width(_universal_size(name, n))
    return LabeledGraph(Scheme(name, n, scheme.D, scheme.seed), tuple(_bits(image[u], w) for u in range(g.n)))


def decode(name: str, l1: str, l2: str, n: int | None = None, D: int | None = None) -> bool:
    """Adjacency from two labels; size-aware schemes need ``n`` (and ``degD_det`` needs ``D``)."""
    name = scheme_name(name)
    if name in SIZE_AWARE and n is None:
        raise MissingContext(f"{name} is size-aware: pass n")
    if name == "paths":
        return up_adjacent(int(l1, 2), int(l2, 2))
    if name == "deg2":
        return u_adjacent(int(l1, 2), int(l2, 2))
    if name == "cycles_oblivious":
        return oblivious_adjacent(int(l1, 2), int(l2, 2))
    if name == "cycles_aware":
        a, b = int(l1, 2), int(l2, 2)
        return a != b and build_cycle_aware(n).has_edge(a, b)
    if name == "degD_det":
        if D is None:
            raise MissingContext("degD_det needs D")
        return product_adjacent(parse_product_label(l1, n, D), parse_product_label(l2, n, D))
    N = n if n % 2 else n + 1
    return rand_decode(parse_rand_label(l1, N), parse_rand_label(l2, N))


def scheme_label_bits(scheme: Scheme) -> int:
    """Longest label the scheme can produce for its parameters."""
    name, n, D = scheme.name, scheme.n, scheme.D
    if n is None:
        raise MissingContext("label size depends on n")
    if name == "degD_det":
        return max(1, product_label_max_bits(n, D))
    if name == "degD_rand":
        N = n if n % 2 else n + 1
        return rand_label_max_bits(N, neighbour_cap(N, D))
    return _id_width(_universal_size(name, n))


@dataclass(frozen=True)
class ObliviousnessReport:
    scheme: str
    applicable: bool
    ok: bool
    checked: int = 0
    first_violation: tuple[int, str] | None = None

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return "NOT-OBLIVIOUS"
        return "PASS" if self.ok else "FAIL"


_PREFIX_BUILDERS = {
    "paths": build_path_universal,
    "deg2": build_deg2_universal,
    "cycles_oblivious": build_cycle_oblivious,
}


def check_obliviousness(name: str, n_range) -> ObliviousnessReport:
    """Check that each graph in ``n_range`` is an id prefix of the next one."""
    name = scheme_name(name)
    if name in SIZE_AWARE:
        return ObliviousnessReport(name, False, False)
    build = _PREFIX_BUILDERS[name]
    checked = 0
    for n in n_range:
        res = is_prefix_induced(build(n), build(n + 1))
        checked += 1
        if not res:
            return ObliviousnessReport(name, True, False, checked, (n, res.reason))
    return ObliviousnessReport(name, True, True, checked)
