"""Named verification suites run by ``foldcube check``.

Each check returns a :class:`CheckOutcome`; a failing outcome always names a
counterexample or the limit it hit.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from foldcube import autgroup as ag
from foldcube import oracle
from foldcube.topology import CayleyGraph, cycles_through_path, fourth_vertex, two_paths
from foldcube.witness import CertificateError, arc_witness, rigidity_propagate
from foldcube.z2core import LimitExceeded, Z2Vector

ARC_EXHAUSTIVE_MAX_ARCS = 200
ARC_SAMPLE = 10_000


@dataclass
class CheckOutcome:
    name: str
    n: int
    mode: str
    passed: bool = True
    details: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def fail(self, msg: str) -> None:
        self.passed = False
        self.details.append(msg)

    def lines(self) -> list[str]:
        out = [f"{self.name} n={self.n} mode={self.mode}: {'pass' if self.passed else 'FAIL'}"]
        out.extend(f"  {d}" for d in self.details)
        out.append(f"# {self.name} n={self.n} elapsed={self.elapsed:.3f}s")
        return out


def check_lemma_4cycle(g: CayleyGraph, out: CheckOutcome) -> None:
    census = oracle.four_cycle_census(g)
    out.details.append("census=" + ",".join(f"{k}:{v}" for k, v in census.items()))
    exceptional = g.folded and g.n == 3
    expected = 3 if exceptional else 1
    if set(census) != {expected}:
        out.fail(f"expected every 2-path in exactly {expected} 4-cycles")
    for p in two_paths(g):
        cyc = cycles_through_path(g, p)
        if len(cyc) != expected:
            out.fail(f"2-path {p.u}-{p.v}-{p.w} lies in {len(cyc)} 4-cycles")
            return
        if expected == 1 and cyc[0].vertices[3] != fourth_vertex(p):
            out.fail(f"2-path {p.u}-{p.v}-{p.w}: cycle vertex {cyc[0].vertices[3]} "
                     f"!= u+v+w {fourth_vertex(p)}")
            return
    if exceptional:
        out.details.append("multiplicity=3 expected-exception (FQ_3 = K_4,4)")


def check_rigidity(g: CayleyGraph, out: CheckOutcome) -> None:
    rep = rigidity_propagate(g.n, Z2Vector.zero(g.n), g.folded)
    out.details.append(rep.summary())
    if g.folded and g.n == 3:
        if rep.all_determined:
            out.fail("FQ_3 propagation unexpectedly succeeded")
        else:
            out.details.append("inconclusive expected-exception (2-paths lie in 3 4-cycles)")
    elif not rep.all_determined:
        out.fail(f"only {rep.determined} of {g.order} vertices determined")


def check_semidirect(g: CayleyGraph, out: CheckOutcome) -> None:
    n, folded = g.n, g.folded
    k = n + 1 if folded else n
    brute = oracle.brute_force_automorphisms(g)
    formula = ag.group_order(n, folded)
    out.details.append(f"formula={formula.value} brute={len(brute)} regime={formula.regime}")
    if len(brute) != formula.value:
        out.fail(f"brute force count {len(brute)} != {formula.value}")

    ident = ag.AffineAut.identity(n)
    perms = list(ag.s_permutations(k))
    ext = {pi: ag.extend_s_permutation(pi, folded) for pi in perms}
    # exhaustive homomorphism check when cheap, otherwise against generating transpositions
    rights = perms if len(perms) <= 120 else [ag.SPermutation.transposition(k, i, i + 1) for i in range(k - 1)]
    for p1 in perms:
        for p2 in rights:
            if ext[p1.compose(p2)] != ag.compose(ext[p1], ext[p2]):
                out.fail(f"extension not a homomorphism at {p1.images}, {p2.images}")
                return
    if len({e.linear.restriction(g.generators) for e in ext.values()}) != len(perms):
        out.fail("extension is not injective on Sym(S)")
    translations = [ag.translation_aut(v) for v in Z2Vector.all(n)]
    meet = set(ext.values()) & set(translations)
    if meet != {ident}:
        out.fail(f"N and M intersect in {len(meet)} elements")
    for pi in rights:
        e, e_inv = ext[pi], ag.inverse(ext[pi])
        for r in translations:
            conj = ag.compose(ag.compose(e, r), e_inv)
            if not conj.linear.is_identity() or conj.translation != e.linear(r.translation):
                out.fail(f"conjugate of {r.format()} by {pi.images} is {conj.format()}")
                return
    affine = list(ag.enumerate_affine_group(n, folded))
    tables = {a.table() for a in affine}
    out.details.append(f"affine={len(tables)} expected={ag.affine_group_order(n, folded)}")
    if len(tables) != ag.affine_group_order(n, folded):
        out.fail("affine elements are not pairwise distinct")
    brute_tables = {p.table for p in brute}
    if not tables <= brute_tables:
        out.fail("affine element missing from brute-force list")
    if len(brute) == formula.value == len(tables) and tables != brute_tables:
        out.fail("affine group differs from brute-force group")
    if tables == brute_tables:
        out.details.append("affine group equals brute-force group")


def check_arc_transitive(g: CayleyGraph, out: CheckOutcome, seed: int = 0) -> None:
    masks = g.generators.masks
    arcs = [(Z2Vector(g.n, a), Z2Vector(g.n, a ^ m)) for a in range(g.order) for m in masks]
    if len(arcs) <= ARC_EXHAUSTIVE_MAX_ARCS:
        pairs = ((x, y) for x in arcs for y in arcs)
        total = len(arcs) ** 2
        out.details.append(f"arcs={len(arcs)} pairs={total} exhaustive")
    else:
        rng = random.Random(seed)
        total = ARC_SAMPLE
        pairs = ((rng.choice(arcs), rng.choice(arcs)) for _ in range(total))
        out.details.append(f"arcs={len(arcs)} pairs={total} sampled seed={seed}")
    ok = 0
    for (u1, v1), (u2, v2) in pairs:
        try:
            w = arc_witness(u1, v1, u2, v2, g)
        except CertificateError as e:
            out.fail(str(e))
            return
        ok += w.verified
    out.details.append(f"verified={ok}/{total}")
    if ok != total:
        out.fail("some witnesses failed verification")


def check_connectivity(g: CayleyGraph, out: CheckOutcome) -> None:
    kappa = oracle.vertex_connectivity(g)
    expected = g.degree
    verdict = "pass" if kappa == expected else "FAIL"
    out.details.append(f"kappa={kappa} expected={expected} {verdict}")
    if kappa != expected:
        out.fail("connectivity differs from the degree")


CHECKS: dict[str, tuple[Callable[[CayleyGraph, CheckOutcome], None], int, list[int]]] = {
    # name: (runner, max n, default sizes for ``check all`` without --n)
    "lemma-4cycle": (check_lemma_4cycle, oracle.CENSUS_LIMIT, [3, 4, 5, 6, 7]),
    "rigidity": (check_rigidity, 12, [3, 4, 5, 6]),
    "semidirect": (check_semidirect, oracle.BRUTE_LIMIT, [2, 3, 4, 5]),
    "arc-transitive": (check_arc_transitive, 16, [4, 8]),
    "connectivity": (check_connectivity, oracle.CONNECTIVITY_LIMIT, [2, 3, 4, 5, 6]),
}


def run_check(name: str, n: int, folded: bool = True) -> CheckOutcome:
    runner, limit, _ = CHECKS[name]
    g = CayleyGraph(n, folded)
    out = CheckOutcome(name, n, g.mode)
    t0 = time.perf_counter()
    if n > limit:
        out.fail(f"limit: n={n} exceeds {limit} for {name}")
    else:
        try:
            runner(g, out)
        except LimitExceeded as e:
            out.fail(f"limit: {e}")
    out.elapsed = time.perf_counter() - t0
    return out
