"""Brute-force cross-checks that share no code path with the affine
construction: explicit adjacency built from the coordinate definition of
Q_n / FQ_n, backtracking automorphism and isomorphism search, Menger
connectivity by max-flow, and 4-cycle counting by neighborhood intersection.

Explicit graphs are ``list[int]`` of adjacency bitmasks indexed by vertex
(bit ``j`` of ``adj[i]`` set iff i ~ j). Anything with a dict-of-sets
adjacency can be converted with :func:`to_bitmasks`.
"""

from __future__ import annotations

import time
from collections import Counter, deque
from dataclasses import dataclass
from typing import Hashable, Iterator, Mapping, Sequence

from foldcube.autgroup import AffineAut, LinearAut
from foldcube.topology import CayleyGraph
from foldcube.z2core import LimitExceeded, Z2Vector, generator_set

BRUTE_LIMIT = 5
BRUTE_LIMIT_WITH_BUDGET = 6
CONNECTIVITY_LIMIT = 8
ISO_LIMIT = 16
CENSUS_LIMIT = 7


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, partial: list):
        super().__init__(message)
        self.partial = partial


class NotAffine(ValueError):
    def __init__(self, message: str, witness: Z2Vector):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True, order=True)
class RawAut:
    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != 1 << self.n:
            raise ValueError(f"table has {len(self.table)} entries, expected {1 << self.n}")
        if sorted(self.table) != list(range(1 << self.n)):
            raise ValueError("table is not a permutation of the vertex set")

    @classmethod
    def identity(cls, n: int) -> RawAut:
        return cls(n, tuple(range(1 << n)))

    @classmethod
    def from_affine(cls, g: AffineAut) -> RawAut:
        return cls(g.n, g.table())

    def __call__(self, x: Z2Vector) -> Z2Vector:
        return Z2Vector(self.n, self.table[x.bits])

    def format(self) -> str:
        return "perm=" + ",".join(format(y, f"0{self.n}b") for y in self.table)

    @classmethod
    def parse(cls, line: str) -> RawAut:
        key, _, body = line.strip().partition("=")
        if key != "perm" or not body:
            raise ValueError(f"malformed permutation line: {line!r}")
        imgs = [Z2Vector.parse(t) for t in body.split(",")]
        n = imgs[0].n
        if any(x.n != n for x in imgs):
            raise ValueError("images have inconsistent lengths")
        return cls(n, tuple(x.bits for x in imgs))


def explicit_adjacency(n: int, folded: bool = True) -> list[int]:
    """Adjacency bitmasks from the coordinate definition: two tuples are
    adjacent when they differ in exactly one position, or (folded) when one
    is the complement of the other."""
    verts = [tuple((x >> (n - 1 - i)) & 1 for i in range(n)) for x in range(1 << n)]
    adj = [0] * (1 << n)
    for a, xa in enumerate(verts):
        for b, xb in enumerate(verts):
            diff = sum(p != q for p, q in zip(xa, xb))
            if diff == 1 or (folded and diff == n):
                adj[a] |= 1 << b
    return adj


def graph_adjacency(g: CayleyGraph) -> list[int]:
    return explicit_adjacency(g.n, g.folded)


def to_bitmasks(adj: Mapping[Hashable, set]) -> tuple[list[Hashable], list[int]]:
    labels = sorted(adj)
    index = {v: i for i, v in enumerate(labels)}
    masks = [0] * len(labels)
    for v, nbrs in adj.items():
        for w in nbrs:
            masks[index[v]] |= 1 << index[w]
            masks[index[w]] |= 1 << index[v]
    return labels, masks


def complete_graph(k: int) -> list[int]:
    full = (1 << k) - 1
    return [full & ~(1 << i) for i in range(k)]


def complete_bipartite(a: int, b: int) -> list[int]:
    left = (1 << a) - 1
    right = ((1 << (a + b)) - 1) & ~left
    return [right] * a + [left] * b


def _search_order(adj: Sequence[int]) -> list[int]:
    """Static most-constrained-first order: next vertex maximizes the number
    of already-ordered neighbors, ties broken by degree then index."""
    k = len(adj)
    placed = 0
    order = []
    remaining = set(range(k))
    while remaining:
        v = max(remaining, key=lambda x: ((adj[x] & placed).bit_count(), adj[x].bit_count(), -x))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def _isomorphisms(adj1: Sequence[int], adj2: Sequence[int],
                  deadline: float | None = None) -> Iterator[list[int]]:
    """All bijections ``f`` with ``i ~ j  <=>  f(i) ~ f(j)``."""
    k = len(adj1)
    if len(adj2) != k:
        return
    deg1 = [a.bit_count() for a in adj1]
    deg2 = [a.bit_count() for a in adj2]
    if sorted(deg1) != sorted(deg2):
        return
    order = _search_order(adj1)
    # for each position, the earlier-ordered neighbors of that vertex
    earlier = []
    placed = 0
    for v in order:
        earlier.append([u for u in range(k) if (adj1[v] & placed) >> u & 1])
        placed |= 1 << v
    all_mask = (1 << k) - 1
    image = [-1] * k

    def extend(pos: int, used: int) -> Iterator[list[int]]:
        if pos == k:
            yield list(image)
            return
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError
        v = order[pos]
        cand = all_mask & ~used
        required = 0
        for u in earlier[pos]:
            cand &= adj2[image[u]]
            required |= 1 << image[u]
        want = len(earlier[pos])
        while cand:
            c = cand & -cand
            cand ^= c
            w = c.bit_length() - 1
            # non-neighbors of v among mapped vertices must map to non-neighbors of w
            if deg2[w] != deg1[v] or (adj2[w] & used).bit_count() != want:
                continue
            image[v] = w
            yield from extend(pos + 1, used | c)
        image[v] = -1

    yield from extend(0, 0)


def is_automorphism(g: CayleyGraph, p: RawAut) -> bool:
    if p.n != g.n:
        raise ValueError(f"table for n={p.n} used on {g.name}")
    adj = graph_adjacency(g)
    t = p.table
    for a in range(len(adj)):
        img = 0
        m = adj[a]
        while m:
            low = m & -m
            img |= 1 << t[low.bit_length() - 1]
            m ^= low
        if img != adj[t[a]]:
            return False
    return True


def brute_force_automorphisms(g: CayleyGraph, time_budget: float | None = None) -> list[RawAut]:
    """Every automorphism of ``g`` by backtracking, sorted by table.

    n <= 5 always; n = 6 only with an explicit ``time_budget`` (seconds).
    Running out of budget raises :class:`BudgetExceeded` carrying the
    automorphisms found so far.
    """
    limit = BRUTE_LIMIT_WITH_BUDGET if time_budget is not None else BRUTE_LIMIT
    if g.n > limit:
        raise LimitExceeded(f"brute force on {g.name}: n={g.n} exceeds limit {limit}"
                            + ("" if time_budget is not None else " (pass a time budget for n=6)"))
    adj = graph_adjacency(g)
    deadline = time.monotonic() + time_budget if time_budget is not None else None
    found = []
    try:
        for f in _isomorphisms(adj, adj, deadline):
            found.append(RawAut(g.n, tuple(f)))
    except TimeoutError:
        found.sort()
        raise BudgetExceeded(
            f"brute force on {g.name} exceeded {time_budget}s after {len(found)} automorphisms",
            found) from None
    found.sort()
    return found


def find_isomorphism(adj1: Sequence[int], adj2: Sequence[int]) -> list[int] | None:
    if max(len(adj1), len(adj2)) > ISO_LIMIT:
        raise LimitExceeded(f"isomorphism search limited to {ISO_LIMIT} vertices")
    return next(_isomorphisms(adj1, adj2), None)


def is_isomorphic(adj1: Sequence[int], adj2: Sequence[int]) -> bool:
    return find_isomorphism(adj1, adj2) is not None


def is_isomorphism(adj1: Sequence[int], adj2: Sequence[int], f: Sequence[int]) -> bool:
    """Check a claimed isomorphism certificate directly."""
    k = len(adj1)
    if len(adj2) != k or sorted(f) != list(range(k)):
        return False
    return all(((adj1[a] >> b) & 1) == ((adj2[f[a]] >> f[b]) & 1)
               for a in range(k) for b in range(k))


def decompose_affine(p: RawAut, folded: bool = True) -> AffineAut:
    """Write ``p`` as ``x -> v + phi(x)`` with phi linear and phi(B) in S.

    Raises :class:`NotAffine` naming the first vertex where the candidate
    linear part disagrees with ``p``.
    """
    n = p.n
    gens = generator_set(n, folded)
    v = p.table[0]
    cols = [p.table[1 << (n - i)] ^ v for i in range(1, n + 1)]
    for i, c in enumerate(cols):
        if not gens.contains_mask(c):
            raise NotAffine(f"image of e_{i + 1} minus p(0) is {Z2Vector(n, c)}, not in S",
                            Z2Vector(n, 1 << (n - 1 - i)))
    for x in range(1 << n):
        lin = 0
        for i, c in enumerate(cols):
            if (x >> (n - 1 - i)) & 1:
                lin ^= c
        if p.table[x] != v ^ lin:
            raise NotAffine(f"not affine at {Z2Vector(n, x)}", Z2Vector(n, x))
    return AffineAut(Z2Vector(n, v), LinearAut.from_masks(n, cols))


def _max_disjoint_paths(adj: Sequence[int], s: int, t: int) -> int:
    """Internally vertex-disjoint s-t paths via unit-capacity max-flow on the
    split digraph: vertex x becomes x_in = 2x -> x_out = 2x+1."""
    k = len(adj)
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * k)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = k
    for x in range(k):
        arc(2 * x, 2 * x + 1, big if x in (s, t) else 1)
        m = adj[x]
        while m:
            low = m & -m
            y = low.bit_length() - 1
            arc(2 * x + 1, 2 * y, 1)
            m ^= low
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: source}
        q = deque([source])
        while q and sink not in prev:
            a = q.popleft()
            for b in out[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    q.append(b)
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def connectivity_of(adj: Sequence[int], sources: Sequence[int] | None = None) -> int:
    """Vertex connectivity. Complete graphs give ``k - 1``. ``sources``
    restricts the first endpoint (sound for vertex-transitive graphs)."""
    k = len(adj)
    best = k - 1
    for s in (range(k) if sources is None else sources):
        for t in range(k):
            if t != s and not (adj[s] >> t) & 1:
                best = min(best, _max_disjoint_paths(adj, s, t))
    return best


def vertex_connectivity(g: CayleyGraph) -> int:
    if g.n > CONNECTIVITY_LIMIT:
        raise LimitExceeded(f"vertex_connectivity: n={g.n} exceeds limit {CONNECTIVITY_LIMIT}")
    return connectivity_of(graph_adjacency(g), sources=[0])


def four_cycle_census(g: CayleyGraph) -> dict[int, int]:
    """Histogram: number of 4-cycles through a 2-path -> how many 2-paths."""
    if g.n > CENSUS_LIMIT:
        raise LimitExceeded(f"four_cycle_census: n={g.n} exceeds limit {CENSUS_LIMIT}")
    adj = graph_adjacency(g)
    hist: Counter[int] = Counter()
    for v, nb in enumerate(adj):
        ns = [u for u in range(len(adj)) if (nb >> u) & 1]
        for i, u in enumerate(ns):
            for w in ns[i + 1:]:
                hist[(adj[u] & adj[w] & ~(1 << v)).bit_count()] += 1
    return dict(sorted(hist.items()))


def stabilizer(auts: Sequence[RawAut], v: int) -> list[RawAut]:
    return [p for p in auts if p.table[v] == v]


def pointwise_kernel(auts: Sequence[RawAut], v: int, adj: Sequence[int]) -> list[RawAut]:
    """Automorphisms fixing ``v`` and each of its neighbors."""
    fixed = [v] + [u for u in range(len(adj)) if (adj[v] >> u) & 1]
    return [p for p in auts if all(p.table[x] == x for x in fixed)]
