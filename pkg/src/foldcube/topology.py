"""Q_n and FQ_n as implicit Cayley graphs on Z_2^n.

Adjacency is ``x ~ y iff x + y in S``; no vertex set is ever stored. Only
``edge_list`` and the exporters walk all 2^n vertices, and they refuse
n > ``EDGE_LIST_LIMIT``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from foldcube.z2core import (
    DimensionMismatch,
    GeneratorSet,
    LimitExceeded,
    Z2Vector,
    check_dim,
    generator_set,
)

EDGE_LIST_LIMIT = 24


@dataclass(frozen=True)
class CayleyGraph:
    n: int
    folded: bool = True

    def __post_init__(self):
        check_dim(self.n, lo=2)

    @property
    def mode(self) -> str:
        return "folded" if self.folded else "hypercube"

    @property
    def name(self) -> str:
        return f"{'FQ' if self.folded else 'Q'}_{self.n}"

    @property
    def generators(self) -> GeneratorSet:
        return generator_set(self.n, self.folded)

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def degree(self) -> int:
        return len(self.generators)

    @property
    def num_edges(self) -> int:
        return (1 << (self.n - 1)) * self.degree

    def _check(self, *vs: Z2Vector) -> None:
        for v in vs:
            if v.n != self.n:
                raise DimensionMismatch(f"vertex {v} has dimension {v.n}, graph has n={self.n}")

    def adjacent(self, a: Z2Vector, b: Z2Vector) -> bool:
        self._check(a, b)
        return self.generators.contains_mask(a.bits ^ b.bits)

    def vertices(self) -> Iterator[Z2Vector]:
        return Z2Vector.all(self.n)

    def vertex(self, text: str) -> Z2Vector:
        return Z2Vector.parse(text, self.n)

    def __str__(self) -> str:
        return self.name


def folded_hypercube(n: int) -> CayleyGraph:
    return CayleyGraph(n, folded=True)


def hypercube(n: int) -> CayleyGraph:
    return CayleyGraph(n, folded=False)


def neighbors(g: CayleyGraph, v: Z2Vector) -> list[Z2Vector]:
    """Neighbors of ``v`` in generator order."""
    g._check(v)
    out: list[Z2Vector] = []
    seen = set()
    for m in g.generators.masks:
        w = v.bits ^ m
        if w not in seen:
            seen.add(w)
            out.append(Z2Vector(g.n, w))
    return out


@dataclass(frozen=True)
class TwoPath:
    """Path ``u - v - w`` on three distinct vertices, ``v`` in the middle."""

    u: Z2Vector
    v: Z2Vector
    w: Z2Vector
    folded: bool = True

    def __post_init__(self):
        if not (self.u.n == self.v.n == self.w.n):
            raise DimensionMismatch("2-path endpoints have different dimensions")
        gens = generator_set(self.u.n, self.folded)
        a = self.u.bits ^ self.v.bits
        b = self.v.bits ^ self.w.bits
        if not (gens.contains_mask(a) and gens.contains_mask(b)) or a == b:
            raise ValueError(f"not a 2-path: {self.u}-{self.v}-{self.w}")


@dataclass(frozen=True)
class FourCycle:
    vertices: tuple[Z2Vector, Z2Vector, Z2Vector, Z2Vector]
    folded: bool = True

    def __post_init__(self):
        vs = self.vertices
        if len(vs) != 4 or len(set(vs)) != 4:
            raise ValueError(f"4-cycle needs four distinct vertices: {vs}")
        g = CayleyGraph(vs[0].n, self.folded)
        for i in range(4):
            if not g.adjacent(vs[i], vs[(i + 1) % 4]):
                raise ValueError(f"{vs[i]} and {vs[(i + 1) % 4]} are not adjacent")

    def __str__(self) -> str:
        return "-".join(str(v) for v in self.vertices)


def fourth_vertex(p: TwoPath) -> Z2Vector:
    """The vertex closing ``p`` into a 4-cycle along the parallel generators."""
    return p.u + p.v + p.w


def cycles_through_path(g: CayleyGraph, p: TwoPath) -> list[FourCycle]:
    if p.folded != g.folded:
        raise ValueError("2-path mode does not match graph mode")
    g._check(p.u)
    out = []
    for x in neighbors(g, p.u):
        if x != p.v and g.adjacent(x, p.w):
            out.append(FourCycle((p.u, p.v, p.w, x), g.folded))
    return out


def two_paths(g: CayleyGraph) -> Iterator[TwoPath]:
    """Each unordered 2-path once, as ``u < w`` around every middle vertex."""
    for v in g.vertices():
        nb = sorted(neighbors(g, v))
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                yield TwoPath(u, v, w, g.folded)


def distance(g: CayleyGraph, a: Z2Vector, b: Z2Vector) -> int:
    g._check(a, b)
    if a == b:
        return 0
    masks = g.generators.masks
    target = b.bits
    dist = {a.bits: 0}
    queue = deque([a.bits])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for m in masks:
            y = x ^ m
            if y == target:
                return d
            if y not in dist:
                dist[y] = d
                queue.append(y)
    raise AssertionError("Cayley graph on a generating set must be connected")


def _check_materializable(g: CayleyGraph) -> None:
    if g.n > EDGE_LIST_LIMIT:
        raise LimitExceeded(
            f"refusing to materialize {g.name}: n={g.n} exceeds limit {EDGE_LIST_LIMIT}"
        )


def iter_edges(g: CayleyGraph) -> Iterator[tuple[Z2Vector, Z2Vector]]:
    _check_materializable(g)
    n, masks = g.n, g.generators.masks
    for a in range(1 << n):
        for b in sorted({a ^ m for m in masks}):
            if b > a:
                yield Z2Vector(n, a), Z2Vector(n, b)


def edge_list(g: CayleyGraph) -> list[tuple[Z2Vector, Z2Vector]]:
    """Every undirected edge once, smaller endpoint first, lexicographic."""
    return list(iter_edges(g))


def format_edgelist(g: CayleyGraph) -> str:
    _check_materializable(g)
    lines = [f"# mode={g.mode} n={g.n} vertices={g.order} edges={g.num_edges}"]
    lines.extend(f"{a} {b}" for a, b in iter_edges(g))
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> tuple[dict[str, str], list[tuple[Z2Vector, Z2Vector]]]:
    header: dict[str, str] = {}
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                k, _, val = tok.partition("=")
                header[k] = val
            continue
        a, b = line.split()
        edges.append((Z2Vector.parse(a), Z2Vector.parse(b)))
    return header, edges


def format_dot(g: CayleyGraph) -> str:
    _check_materializable(g)
    lines = [f"graph {'FQ' if g.folded else 'Q'}{g.n} {{"]
    lines.extend(f'  "{v}";' for v in g.vertices())
    lines.extend(f'  "{a}" -- "{b}";' for a, b in iter_edges(g))
    lines.append("}")
    return "\n".join(lines) + "\n"
