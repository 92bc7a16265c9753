"""Folded hypercubes as Cayley graphs over Z_2^n, their automorphism group,
symmetry certificates and brute-force cross-checks."""

from foldcube.z2core import Z2Vector, GeneratorSet, generator_set, is_generator
from foldcube.topology import CayleyGraph, folded_hypercube, hypercube
from foldcube.autgroup import (
    AffineAut,
    LinearAut,
    SPermutation,
    compose,
    extend_bijection,
    extend_s_permutation,
    group_order,
    inverse,
    translation_aut,
)

__all__ = [
    "Z2Vector",
    "GeneratorSet",
    "generator_set",
    "is_generator",
    "CayleyGraph",
    "folded_hypercube",
    "hypercube",
    "AffineAut",
    "LinearAut",
    "SPermutation",
    "compose",
    "extend_bijection",
    "extend_s_permutation",
    "group_order",
    "inverse",
    "translation_aut",
]
