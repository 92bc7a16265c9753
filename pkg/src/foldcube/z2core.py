"""Arithmetic in Z_2^n and the connection sets B and S.

Vectors are packed into a Python int. Coordinate 1 is the most significant
bit, so the integer value of a vector is the binary number spelled by its
textual form (``"0010"`` -> 2) and integer order is lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

MAX_DIM = 64


class DimensionMismatch(ValueError):
    pass


class LimitExceeded(ValueError):
    """An operation was asked to materialize more than its documented limit."""


def check_dim(n: int, lo: int = 1, hi: int = MAX_DIM) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"dimension must be an int, got {n!r}")
    if n < lo:
        raise ValueError(f"dimension n={n} below minimum {lo}")
    if n > hi:
        raise LimitExceeded(f"dimension n={n} exceeds limit {hi}")
    return n


def unit_mask(n: int, i: int) -> int:
    """Packed e_i, coordinates numbered 1..n from the left."""
    return 1 << (n - i)


def ones_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, order=True)
class Z2Vector:
    n: int
    bits: int

    def __post_init__(self):
        check_dim(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits} out of range for n={self.n}")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Z2Vector:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {text!r}")
        if n is not None and len(text) != n:
            raise DimensionMismatch(f"bitstring {text!r} has length {len(text)}, expected {n}")
        return cls(len(text), int(text, 2))

    @classmethod
    def zero(cls, n: int) -> Z2Vector:
        return cls(n, 0)

    @classmethod
    def unit(cls, n: int, i: int) -> Z2Vector:
        if not 1 <= i <= n:
            raise ValueError(f"unit vector index {i} outside 1..{n}")
        return cls(n, unit_mask(n, i))

    @classmethod
    def ones(cls, n: int) -> Z2Vector:
        return cls(n, ones_mask(n))

    @classmethod
    def all(cls, n: int) -> Iterator[Z2Vector]:
        """Every vector of Z_2^n in lexicographic order."""
        for b in range(1 << n):
            yield cls(n, b)

    def __add__(self, other: Z2Vector) -> Z2Vector:
        if not isinstance(other, Z2Vector):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch(f"cannot add vectors of dimension {self.n} and {other.n}")
        return Z2Vector(self.n, self.bits ^ other.bits)

    # subtraction equals addition in characteristic 2
    __sub__ = __add__

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"Z2Vector('{self}')"

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def coordinate(self, i: int) -> int:
        return (self.bits >> (self.n - i)) & 1

    def coords(self) -> tuple[int, ...]:
        return tuple(self.coordinate(i) for i in range(1, self.n + 1))


def add(x: Z2Vector, y: Z2Vector) -> Z2Vector:
    return x + y


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered connection set ``[e_1, ..., e_n, u]`` (or ``[e_1, ..., e_n]``
    when ``folded`` is false)."""

    n: int
    folded: bool = True
    elements: tuple[Z2Vector, ...] = field(init=False, repr=False)
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        check_dim(self.n, lo=2)
        masks = [unit_mask(self.n, i) for i in range(1, self.n + 1)]
        if self.folded:
            masks.append(ones_mask(self.n))
        object.__setattr__(self, "masks", tuple(masks))
        object.__setattr__(self, "elements", tuple(Z2Vector(self.n, m) for m in masks))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Z2Vector]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> Z2Vector:
        return self.elements[i]

    def __contains__(self, x: object) -> bool:
        return isinstance(x, Z2Vector) and x.n == self.n and self.contains_mask(x.bits)

    def contains_mask(self, bits: int) -> bool:
        w = bits.bit_count()
        return w == 1 or (self.folded and w == self.n)

    def index(self, x: Z2Vector) -> int:
        """0-based position of ``x`` in the ordered set."""
        if x not in self:
            raise ValueError(f"{x} is not a generator")
        return self.masks.index(x.bits)


@lru_cache(maxsize=None)
def generator_set(n: int, folded: bool = True) -> GeneratorSet:
    return GeneratorSet(n, folded)


def is_generator(x: Z2Vector, folded: bool = True) -> bool:
    w = x.weight
    return w == 1 or (folded and w == x.n)


def gf2_rank(vectors: Sequence[int]) -> int:
    """Rank over GF(2) of packed vectors (xor basis by leading bit)."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def gf2_solve_columns(columns: Sequence[int], n: int) -> list[int]:
    """Columns of the inverse of the n x n GF(2) matrix whose i-th column
    (image of e_i) is ``columns[i]``.

    Raises ValueError when the matrix is singular.
    """
    # Track, for each reduced vector, which combination of columns produced it.
    rows = [(c, unit_mask(n, i + 1)) for i, c in enumerate(columns)]
    pivots: dict[int, tuple[int, int]] = {}
    for vec, combo in rows:
        while vec:
            top = vec.bit_length() - 1
            if top not in pivots:
                pivots[top] = (vec, combo)
                break
            pv, pc = pivots[top]
            vec ^= pv
            combo ^= pc
        else:
            raise ValueError("matrix is singular over GF(2)")
    # back-substitute so each pivot vector is a single unit vector
    for top in sorted(pivots):
        vec, combo = pivots[top]
        for lower in range(top):
            if (vec >> lower) & 1:
                lv, lc = pivots[lower]
                vec ^= lv
                combo ^= lc
        pivots[top] = (vec, combo)
    # inverse column i = combination of columns mapping to e_i
    return [pivots[n - i][1] for i in range(1, n + 1)]


def span_check(n: int, folded: bool = True) -> bool:
    """True iff every n-element subset of the connection set is a basis."""
    gens = generator_set(n, folded).masks
    k = len(gens)
    if k == n:
        return gf2_rank(gens) == n
    return all(gf2_rank(gens[:i] + gens[i + 1:]) == n for i in range(k))
