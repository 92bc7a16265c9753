"""Aut(FQ_n) as the affine group N x| M.

N is the translations x -> v + x. M is the linear maps sending the basis B
bijectively onto an n-subset of S; restricted to S these are exactly the
permutations of S, so M is a copy of Sym(n+1).

Elements are stored canonically as ``(translation, linear)`` acting by
``x -> translation + linear(x)``: linear part first, translation last.
Composition follows ``(v1, f1)(v2, f2) = (v1 + f1(v2), f1 f2)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from foldcube.z2core import (
    DimensionMismatch,
    GeneratorSet,
    LimitExceeded,
    Z2Vector,
    check_dim,
    generator_set,
    gf2_rank,
    gf2_solve_columns,
    unit_mask,
)

ENUMERATE_LIMIT = 6


def _apply_columns(cols: Sequence[int], n: int, x: int) -> int:
    out = 0
    for i, c in enumerate(cols):
        if (x >> (n - 1 - i)) & 1:
            out ^= c
    return out


@dataclass(frozen=True)
class LinearAut:
    """Invertible GF(2)-linear map; ``columns[i]`` is the image of e_{i+1}."""

    columns: tuple[Z2Vector, ...]
    _cols: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cols = tuple(self.columns)
        if not cols:
            raise ValueError("a linear map needs at least one column")
        n = cols[0].n
        if len(cols) != n or any(c.n != n for c in cols):
            raise DimensionMismatch(f"need {n} columns of dimension {n}, got {[str(c) for c in cols]}")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "_cols", tuple(c.bits for c in cols))
        if gf2_rank(self._cols) != n:
            raise ValueError(f"columns {[str(c) for c in cols]} are not linearly independent")

    @classmethod
    def from_masks(cls, n: int, masks: Sequence[int]) -> LinearAut:
        return cls(tuple(Z2Vector(n, m) for m in masks))

    @classmethod
    def identity(cls, n: int) -> LinearAut:
        return cls.from_masks(n, [unit_mask(n, i) for i in range(1, n + 1)])

    @property
    def n(self) -> int:
        return len(self._cols)

    def apply_mask(self, x: int) -> int:
        return _apply_columns(self._cols, self.n, x)

    def __call__(self, x: Z2Vector) -> Z2Vector:
        if x.n != self.n:
            raise DimensionMismatch(f"vector {x} has dimension {x.n}, map has n={self.n}")
        return Z2Vector(self.n, self.apply_mask(x.bits))

    def compose(self, other: LinearAut) -> LinearAut:
        """``self o other`` (``other`` applied first)."""
        if other.n != self.n:
            raise DimensionMismatch("cannot compose maps of different dimension")
        return LinearAut.from_masks(self.n, [self.apply_mask(c) for c in other._cols])

    def inverse(self) -> LinearAut:
        return LinearAut.from_masks(self.n, gf2_solve_columns(self._cols, self.n))

    def is_identity(self) -> bool:
        n = self.n
        return all(c == unit_mask(n, i + 1) for i, c in enumerate(self._cols))

    def is_m_member(self, gens: GeneratorSet | None = None) -> bool:
        """Columns pairwise distinct and all in S (so the map permutes S)."""
        gens = gens or generator_set(self.n)
        return len(set(self._cols)) == self.n and all(gens.contains_mask(c) for c in self._cols)

    def restriction(self, gens: GeneratorSet | None = None) -> SPermutation:
        """The permutation of S induced by this map, as generator indices."""
        gens = gens or generator_set(self.n)
        try:
            return SPermutation(tuple(gens.masks.index(self.apply_mask(s)) for s in gens.masks))
        except ValueError:
            raise ValueError("map does not send S into S") from None


@dataclass(frozen=True)
class AffineAut:
    translation: Z2Vector
    linear: LinearAut

    def __post_init__(self):
        if self.translation.n != self.linear.n:
            raise DimensionMismatch("translation and linear part differ in dimension")

    @classmethod
    def identity(cls, n: int) -> AffineAut:
        return cls(Z2Vector.zero(n), LinearAut.identity(n))

    @property
    def n(self) -> int:
        return self.translation.n

    def apply_mask(self, x: int) -> int:
        return self.translation.bits ^ self.linear.apply_mask(x)

    def __call__(self, x: Z2Vector) -> Z2Vector:
        return apply(self, x)

    def is_identity(self) -> bool:
        return self.translation.bits == 0 and self.linear.is_identity()

    def table(self) -> tuple[int, ...]:
        """Images of all 2^n vertices, in lexicographic vertex order."""
        return tuple(self.apply_mask(x) for x in range(1 << self.n))

    def format(self) -> str:
        return f"v={self.translation} phi={','.join(str(c) for c in self.linear.columns)}"

    @classmethod
    def parse(cls, line: str) -> AffineAut:
        fields = dict(tok.split("=", 1) for tok in line.split())
        if set(fields) != {"v", "phi"}:
            raise ValueError(f"malformed automorphism line: {line!r}")
        v = Z2Vector.parse(fields["v"])
        cols = tuple(Z2Vector.parse(c, v.n) for c in fields["phi"].split(","))
        return cls(v, LinearAut(cols))

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class SPermutation:
    """Permutation of the generator indices ``0..k-1``: ``images[i]`` is the
    index that generator ``i`` is sent to (index n is u in folded mode)."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, k: int) -> SPermutation:
        return cls(tuple(range(k)))

    @classmethod
    def transposition(cls, k: int, i: int, j: int) -> SPermutation:
        images = list(range(k))
        images[i], images[j] = j, i
        return cls(tuple(images))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: SPermutation) -> SPermutation:
        """``self o other``."""
        return SPermutation(tuple(self.images[j] for j in other.images))


def translation_aut(v: Z2Vector) -> AffineAut:
    return AffineAut(v, LinearAut.identity(v.n))


def apply(g: AffineAut, x: Z2Vector) -> Z2Vector:
    if x.n != g.n:
        raise DimensionMismatch(f"vector {x} has dimension {x.n}, map has n={g.n}")
    return Z2Vector(g.n, g.apply_mask(x.bits))


def compose(g1: AffineAut, g2: AffineAut) -> AffineAut:
    """``g1 o g2``: apply ``g2`` first."""
    if g1.n != g2.n:
        raise DimensionMismatch("cannot compose automorphisms of different dimension")
    return AffineAut(g1.translation + g1.linear(g2.translation), g1.linear.compose(g2.linear))


def inverse(g: AffineAut) -> AffineAut:
    lin = g.linear.inverse()
    return AffineAut(lin(g.translation), lin)


def extend_bijection(images: Sequence[Z2Vector], folded: bool = True) -> LinearAut:
    """Linear extension of ``e_i -> images[i-1]``.

    The images must be distinct members of the connection set; any n of them
    form a basis, so the extension is invertible.
    """
    images = list(images)
    if not images:
        raise ValueError("no images given")
    n = images[0].n
    if len(images) != n:
        raise ValueError(f"need exactly {n} images, got {len(images)}")
    gens = generator_set(n, folded)
    for x in images:
        if x not in gens:
            raise ValueError(f"image {x} is not in the connection set")
    if len(set(images)) != n:
        raise ValueError(f"repeated image in {[str(x) for x in images]}")
    return LinearAut(tuple(images))


def extend_s_permutation(pi: SPermutation, folded: bool = True) -> AffineAut:
    n = len(pi) - 1 if folded else len(pi)
    gens = generator_set(n, folded)
    phi = extend_bijection([gens[pi(i)] for i in range(n)], folded)
    if folded and phi(gens[n]) != gens[pi(n)]:
        raise AssertionError(f"extension of {pi.images} does not realize it on u")
    return AffineAut(Z2Vector.zero(n), phi)


class GroupOrder(NamedTuple):
    value: int
    regime: str


def affine_group_order(n: int, folded: bool = True) -> int:
    k = n + 1 if folded else n
    return math.factorial(k) << n


def group_order(n: int, folded: bool = True) -> GroupOrder:
    """|Aut(FQ_n)| (or |Aut(Q_n)|), with the regime that produced it.

    FQ_2 is K_4 and FQ_3 is K_{4,4}; both have more automorphisms than the
    affine count for n = 3 and coincide with it for n = 2.
    """
    check_dim(n, lo=2)
    if not folded:
        return GroupOrder(affine_group_order(n, False), "formula")
    if n == 2:
        return GroupOrder(24, "exceptional:K_4")
    if n == 3:
        return GroupOrder(2 * math.factorial(4) ** 2, "exceptional:K_4,4")
    return GroupOrder(affine_group_order(n), "formula")


def s_permutations(k: int) -> Iterator[SPermutation]:
    for p in itertools.permutations(range(k)):
        yield SPermutation(p)


def enumerate_affine_group(n: int, folded: bool = True) -> Iterator[AffineAut]:
    """Every ``(v, extension of pi)``, pi outer loop, v in lexicographic order."""
    check_dim(n, lo=2)
    if n > ENUMERATE_LIMIT:
        raise LimitExceeded(f"enumerate_affine_group: n={n} exceeds limit {ENUMERATE_LIMIT}")
    k = n + 1 if folded else n
    for pi in s_permutations(k):
        phi = extend_s_permutation(pi, folded).linear
        for v in Z2Vector.all(n):
            yield AffineAut(v, phi)
