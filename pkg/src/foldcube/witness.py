"""Explicit automorphisms certifying vertex-, edge- and arc-transitivity, and
the rigidity argument showing that an automorphism fixing a vertex and its
neighbors is the identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from foldcube.autgroup import (
    AffineAut,
    SPermutation,
    compose,
    extend_s_permutation,
    translation_aut,
)
from foldcube.topology import CayleyGraph, neighbors
from foldcube.z2core import DimensionMismatch, Z2Vector

SELF_CHECK_EDGES = 16


class NotAnEdge(ValueError):
    def __init__(self, a: Z2Vector, b: Z2Vector):
        super().__init__(f"not an edge: {a},{b}")
        self.pair = (a, b)


class CertificateError(RuntimeError):
    """A constructed witness failed its own verification (internal bug)."""


@dataclass(frozen=True)
class ArcWitness:
    source: tuple[Z2Vector, Z2Vector]
    target: tuple[Z2Vector, Z2Vector]
    aut: AffineAut
    verified: bool = False

    def format(self) -> str:
        (u1, v1), (u2, v2) = self.source, self.target
        return (
            f"from={u1},{v1} to={u2},{v2}\n"
            f"{self.aut.format()}\n"
            f"verified={'true' if self.verified else 'false'}\n"
        )


def _graph_for(x: Z2Vector, graph: CayleyGraph | None) -> CayleyGraph:
    g = graph or CayleyGraph(x.n)
    if g.n != x.n:
        raise DimensionMismatch(f"vertex {x} does not belong to {g.name}")
    return g


def verify_aut(g: CayleyGraph, aut: AffineAut, rng: random.Random | None = None,
               samples: int = SELF_CHECK_EDGES) -> bool:
    """Edge preservation: exact on the edges at 0 (enough for an affine map,
    since every edge is a translate of one of them), plus a random sample of
    edges checked directly."""
    gens = g.generators
    lin = aut.linear
    if not all(gens.contains_mask(lin.apply_mask(s)) for s in gens.masks):
        return False
    rng = rng or random.Random(0)
    for _ in range(samples):
        a = rng.getrandbits(g.n)
        b = a ^ rng.choice(gens.masks)
        if not gens.contains_mask(aut.apply_mask(a) ^ aut.apply_mask(b)):
            return False
    return True


def vertex_witness(a: Z2Vector, b: Z2Vector) -> AffineAut:
    """Translation by ``a + b``; sends ``a`` to ``b``."""
    return translation_aut(a + b)


def arc_witness(u1: Z2Vector, v1: Z2Vector, u2: Z2Vector, v2: Z2Vector,
                graph: CayleyGraph | None = None) -> ArcWitness:
    g = _graph_for(u1, graph)
    for a, b in ((u1, v1), (u2, v2)):
        if a.n != g.n or b.n != g.n:
            raise DimensionMismatch(f"arc {a},{b} does not belong to {g.name}")
        if not g.adjacent(a, b):
            raise NotAnEdge(a, b)
    gens = g.generators
    i, j = gens.index(u1 + v1), gens.index(u2 + v2)
    pi = SPermutation.transposition(len(gens), i, j)
    # rho_{u2} o phi o rho_{u1}
    aut = compose(translation_aut(u2), compose(extend_s_permutation(pi, g.folded), translation_aut(u1)))
    rng = random.Random(hash((u1.bits, v1.bits, u2.bits, v2.bits, g.n)))
    ok = aut(u1) == u2 and aut(v1) == v2 and verify_aut(g, aut, rng)
    if not ok:
        raise CertificateError(f"witness for {u1},{v1} -> {u2},{v2} failed verification: {aut}")
    return ArcWitness((u1, v1), (u2, v2), aut, verified=True)


def edge_witness(e1: tuple[Z2Vector, Z2Vector], e2: tuple[Z2Vector, Z2Vector],
                 graph: CayleyGraph | None = None) -> AffineAut:
    """Automorphism sending edge ``e1`` onto edge ``e2`` as sets."""
    a1, b1 = sorted(e1)
    a2, b2 = sorted(e2)
    return arc_witness(a1, b1, a2, b2, graph).aut


@dataclass
class RigidityReport:
    n: int
    base: Z2Vector
    folded: bool = True
    rounds: list[list[Z2Vector]] = field(default_factory=list)
    # forced vertex -> the 2-path (t, middle, u) whose unique 4-cycle forced it
    reasons: dict[Z2Vector, tuple[Z2Vector, Z2Vector, Z2Vector]] = field(default_factory=dict)
    # cycle multiplicity -> number of determined 2-paths that could not force anything
    blocked: dict[int, int] = field(default_factory=dict)
    all_determined: bool = False

    @property
    def determined(self) -> int:
        return sum(len(r) for r in self.rounds)

    def summary(self) -> str:
        status = "all-determined" if self.all_determined else "inconclusive"
        line = (f"rigidity n={self.n} base={self.base} rounds={len(self.rounds)} "
                f"determined={self.determined}/{1 << self.n} {status}")
        if self.blocked:
            mult = ",".join(f"{k}:{v}" for k, v in sorted(self.blocked.items()))
            line += f" blocked-multiplicities={mult}"
        return line


def rigidity_propagate(n: int, v: Z2Vector | None = None, folded: bool = True) -> RigidityReport:
    """Follow which vertices an automorphism fixing ``v`` and ``N(v)``
    pointwise is forced to fix.

    A 2-path t-m-u of fixed vertices lying in exactly one 4-cycle forces the
    fourth vertex of that cycle. Rounds are synchronous: round k only uses
    vertices fixed in rounds < k, which mirrors induction on distance from v.
    """
    g = CayleyGraph(n, folded)
    v = v if v is not None else Z2Vector.zero(n)
    g._check(v)
    masks = g.generators.masks
    report = RigidityReport(n, v, folded)

    start = [v] + neighbors(g, v)
    fixed = {x.bits for x in start}
    report.rounds.append(start)

    def common_count(a: int, b: int) -> int:
        nb = {a ^ m for m in masks}
        return sum(1 for m in masks if b ^ m in nb)

    while True:
        new: dict[int, tuple[int, int, int]] = {}
        blocked: dict[int, int] = {}
        for mid in sorted(fixed):
            nbrs = [mid ^ m for m in masks if mid ^ m in fixed]
            for i, t in enumerate(nbrs):
                for u in nbrs[i + 1:]:
                    x = t ^ mid ^ u
                    if x in fixed or x in new:
                        continue
                    # 4-cycles through t-mid-u: common neighbors of t, u other than mid
                    mult = common_count(t, u) - 1
                    if mult == 1:
                        new[x] = (t, mid, u)
                    else:
                        blocked[mult] = blocked.get(mult, 0) + 1
        if not new:
            report.blocked = blocked
            break
        fixed.update(new)
        report.rounds.append([Z2Vector(n, x) for x in sorted(new)])
        for x, (t, mid, u) in new.items():
            report.reasons[Z2Vector(n, x)] = (Z2Vector(n, t), Z2Vector(n, mid), Z2Vector(n, u))
    report.all_determined = len(fixed) == 1 << n
    return report
