"""Random essential arrangements and local systems for property checks."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import ToricArrangement, make_arrangement, is_primitive, rank
from .local_systems import LocalSystem, UnitScalar


@dataclass
class RandomConfig:
    dimensions: tuple[int, ...] = (1, 2)
    min_hypertori: int = 1
    max_hypertori: int = 5
    max_entry: int = 3
    max_denominator: int = 6


def random_arrangement(rng: random.Random, cfg: RandomConfig = RandomConfig()) -> ToricArrangement:
    """Rejection-sample an essential arrangement."""
    while True:
        n = rng.choice(cfg.dimensions)
        k = rng.randint(max(cfg.min_hypertori, n), cfg.max_hypertori)
        pairs = []
        seen = set()
        while len(pairs) < k:
            chi = tuple(rng.randint(-cfg.max_entry, cfg.max_entry) for _ in range(n))
            if not is_primitive(chi):
                continue
            q = rng.randint(1, cfg.max_denominator)
            angle = Fraction(rng.randrange(q), q)
            lead = next(a for a in chi if a)
            canon = (chi, angle) if lead > 0 else (tuple(-a for a in chi), (-angle) % 1)
            if canon in seen:
                continue
            seen.add(canon)
            pairs.append((chi, angle))
        arr = make_arrangement(n, pairs)
        if rank(arr) == n:
            return arr


def random_scalar(rng: random.Random, max_denominator: int = 6, unit_modulus: bool = False) -> UnitScalar:
    q = rng.randint(1, max_denominator)
    modulus = Fraction(1) if unit_modulus or rng.random() < 0.5 else Fraction(rng.randint(1, 4), rng.randint(1, 4))
    return UnitScalar(modulus, Fraction(rng.randrange(q), q))


def random_local_system(rng: random.Random, arr: ToricArrangement, **kw) -> LocalSystem:
    return LocalSystem(tuple(random_scalar(rng, **kw) for _ in arr.hypertori),
                       tuple(random_scalar(rng, **kw) for _ in range(arr.dimension)))
