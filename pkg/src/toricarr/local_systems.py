"""Rank-one local systems with exact values ``modulus * exp(2 pi i angle)``,
the genericity test over layers, cohomology predictions, and a direct
twisted-cochain computation for n = 1."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import NotEssential, ToricArrangement, rank
from .layers import Layer, LayerPoset, beta_poset, layers
from .linalg import frac_mod1


class NotGeneric(ValueError):
    def __init__(self, witnesses):
        super().__init__(f"local system is not generic: lambda = 1 on {len(witnesses)} layer(s)")
        self.witnesses = witnesses


class WrongDimension(ValueError):
    pass


@dataclass(frozen=True)
class UnitScalar:
    modulus: Fraction = Fraction(1)
    angle: Fraction = Fraction(0)

    def __post_init__(self):
        m, a = Fraction(self.modulus), frac_mod1(Fraction(self.angle))
        if m <= 0:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "angle", a)

    def __mul__(self, other: "UnitScalar") -> "UnitScalar":
        return UnitScalar(self.modulus * other.modulus, self.angle + other.angle)

    def inverse(self) -> "UnitScalar":
        return UnitScalar(1 / self.modulus, -self.angle)

    def is_one(self) -> bool:
        return self.modulus == 1 and self.angle == 0

    def __str__(self):
        return f"{self.modulus}*e(2pi i {self.angle})"


ONE = UnitScalar()


@dataclass(frozen=True)
class LocalSystem:
    lambdas: tuple[UnitScalar, ...]
    torus_monodromies: tuple[UnitScalar, ...]

    def check(self, arr: ToricArrangement) -> None:
        if len(self.lambdas) != len(arr.hypertori):
            raise ValueError(f"{len(self.lambdas)} lambdas for {len(arr.hypertori)} hypertori")
        if len(self.torus_monodromies) != arr.dimension:
            raise ValueError(f"{len(self.torus_monodromies)} torus monodromies, "
                             f"expected {arr.dimension}")


def lambda_of_layer(ls: LocalSystem, arr: ToricArrangement, layer: Layer,
                    poset: LayerPoset | None = None) -> UnitScalar:
    poset = poset or layers(arr)
    g = poset.layers[poset.index(layer)]
    out = ONE
    for i in g.supporting_hypertori:
        out = out * ls.lambdas[i]
    return out


def is_generic(ls: LocalSystem, arr: ToricArrangement,
               poset: LayerPoset | None = None) -> tuple[bool, list[Layer]]:
    ls.check(arr)
    poset = poset or layers(arr)
    witnesses = [g for g in poset.proper() if lambda_of_layer(ls, arr, g, poset).is_one()]
    return not witnesses, witnesses


@dataclass(frozen=True)
class CohomologyPrediction:
    theorem: str            # generic-rank-one | l2-betti | group-ring
    values: tuple           # per degree 0..n; int, or "free abelian" in the top degree

    def as_dict(self):
        return {"theorem": self.theorem, "values": list(self.values)}


def _essential_beta(arr):
    r = rank(arr)
    if r < arr.dimension:
        raise NotEssential(f"arrangement has rank {r} < dimension {arr.dimension}")
    return beta_poset(arr)


def predict_twisted(arr: ToricArrangement, ls: LocalSystem) -> CohomologyPrediction:
    beta = _essential_beta(arr)
    ok, witnesses = is_generic(ls, arr)
    if not ok:
        raise NotGeneric(witnesses)
    return CohomologyPrediction("generic-rank-one", (0,) * arr.dimension + (beta,))


def predict_l2(arr: ToricArrangement) -> CohomologyPrediction:
    beta = _essential_beta(arr)
    return CohomologyPrediction("l2-betti", (0,) * arr.dimension + (beta,))


def predict_group_ring(arr: ToricArrangement) -> CohomologyPrediction:
    """Vanishing below the top degree; the top group is free abelian of
    unspecified rank."""
    _essential_beta(arr)
    return CohomologyPrediction("group-ring", (0,) * arr.dimension + ("free abelian",))


def twisted_cohomology_1d(arr: ToricArrangement, ls: LocalSystem) -> tuple[int, int]:
    """Cohomology of C* minus k points with rank-one coefficients.

    The complement retracts to a wedge of k + 1 circles (one loop per
    puncture plus the torus loop), so the cochain complex is
    ``0 -> A -> A^(k+1) -> 0`` with ``c -> ((mu - 1) c)`` over the loop
    monodromies ``mu``.
    """
    if arr.dimension != 1:
        raise WrongDimension(f"oracle needs n = 1, got n = {arr.dimension}")
    ls.check(arr)
    monodromies = list(ls.lambdas) + list(ls.torus_monodromies)
    column = [0 if mu.is_one() else 1 for mu in monodromies]  # zero pattern of mu - 1
    rank_d = 1 if any(column) else 0
    h0 = 1 - rank_d
    h1 = len(monodromies) - rank_d
    return h0, h1
