"""Toric arrangements with rational phases.

A hypertorus is the level set ``{x in (R/Z)^n : chi . x ≡ angle (mod 1)}``
of a primitive character ``chi``; the complex phase is ``exp(2 pi i angle)``.
The pair ``(chi, angle)`` and ``(-chi, -angle)`` describe the same set, so
both are treated as the same hypertorus when checking for duplicates.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import linalg
from .linalg import frac_mod1


class ArrangementError(ValueError):
    """Invalid arrangement input."""


class NonPrimitiveCharacter(ArrangementError):
    def __init__(self, index: int, chi):
        super().__init__(f"hypertorus {index}: character {list(chi)} is not primitive")
        self.index = index


class DuplicateHypertorus(ArrangementError):
    def __init__(self, i: int, j: int):
        super().__init__(f"hypertori {i} and {j} define the same subtorus")
        self.i, self.j = i, j


class DimensionMismatch(ArrangementError):
    def __init__(self, index: int, got: int, expected: int):
        super().__init__(f"hypertorus {index}: character has length {got}, expected {expected}")
        self.index = index


class NotEssential(ValueError):
    """Raised where an essential arrangement is required."""


def is_primitive(chi: Sequence[int]) -> bool:
    g = 0
    for a in chi:
        g = gcd(g, a)
    return g == 1


@dataclass(frozen=True)
class Hypertorus:
    chi: tuple[int, ...]
    angle: Fraction

    def canonical(self) -> "Hypertorus":
        """Sign-normalized form: first nonzero entry of ``chi`` positive."""
        lead = next((a for a in self.chi if a), 0)
        if lead < 0:
            return Hypertorus(tuple(-a for a in self.chi), frac_mod1(-self.angle))
        return self

    def contains(self, x: Sequence[Fraction]) -> bool:
        return frac_mod1(sum(a * b for a, b in zip(self.chi, x)) - self.angle) == 0


@dataclass(frozen=True)
class ToricArrangement:
    dimension: int
    hypertori: tuple[Hypertorus, ...]

    def __len__(self):
        return len(self.hypertori)

    @property
    def characters(self) -> list[list[int]]:
        return [list(h.chi) for h in self.hypertori]

    def canonical_key(self):
        return (self.dimension, tuple(sorted((h.canonical().chi, h.canonical().angle)
                                             for h in self.hypertori)))

    def without(self, index: int) -> "ToricArrangement":
        return ToricArrangement(self.dimension,
                                self.hypertori[:index] + self.hypertori[index + 1:])


def make_arrangement(dimension: int, pairs) -> ToricArrangement:
    """Build and validate from ``(chi, angle)`` pairs; angles may be anything
    ``Fraction`` accepts."""
    hts = []
    for i, (chi, angle) in enumerate(pairs):
        chi = tuple(int(a) for a in chi)
        if len(chi) != dimension:
            raise DimensionMismatch(i, len(chi), dimension)
        if not is_primitive(chi):
            raise NonPrimitiveCharacter(i, chi)
        hts.append(Hypertorus(chi, frac_mod1(Fraction(angle))))
    seen: dict[Hypertorus, int] = {}
    for i, h in enumerate(hts):
        c = h.canonical()
        if c in seen:
            raise DuplicateHypertorus(seen[c], i)
        seen[c] = i
    return ToricArrangement(dimension, tuple(hts))


def validate(raw) -> ToricArrangement:
    """Validate a raw mapping ``{"dimension": n, "hypertori": [{"chi", "angle"}]}``
    or an existing arrangement."""
    if isinstance(raw, ToricArrangement):
        return make_arrangement(raw.dimension, [(h.chi, h.angle) for h in raw.hypertori])
    return make_arrangement(raw["dimension"], [(h["chi"], h["angle"]) for h in raw["hypertori"]])


def rank(arr: ToricArrangement) -> int:
    return linalg.rank(arr.characters, arr.dimension)


def is_essential(arr: ToricArrangement) -> bool:
    return rank(arr) == arr.dimension


def require_essential(arr: ToricArrangement) -> None:
    r = rank(arr)
    if r != arr.dimension:
        raise NotEssential(f"arrangement has rank {r} < dimension {arr.dimension}")


def essentialize(arr: ToricArrangement) -> tuple[ToricArrangement, list[list[int]]]:
    """Quotient by the common kernel torus.

    Returns the essential arrangement on a torus of dimension ``rank(arr)``
    and the integer matrix ``S`` (rank x n) such that ``x -> S x mod 1`` is
    the projection; input hypertorus ``i`` is the preimage of output
    hypertorus ``i``.
    """
    n = arr.dimension
    S = [list(r) for r in linalg.saturate(arr.characters, n)]
    pairs = []
    for h in arr.hypertori:
        w = linalg.in_row_lattice(h.chi, S)
        assert w is not None
        pairs.append((w, h.angle))
    return make_arrangement(len(S), pairs), S
