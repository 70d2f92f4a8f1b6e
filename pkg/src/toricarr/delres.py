"""beta by deletion and restriction.

Restricting to a hypertorus H uses an explicit parametrization of H by an
(n-1)-torus. A pulled-back character ``d * psi`` with ``psi`` primitive and
``d > 1`` cuts H in ``d`` parallel hypertori, one per solution
``psi . s ≡ (a + j) / d``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from threading import Lock

from . import linalg
from .arrangement import Hypertorus, NotEssential, ToricArrangement, rank
from .linalg import frac_mod1


@dataclass(frozen=True)
class RestrictionResult:
    restricted_arrangement: ToricArrangement
    component_multiplicity: dict[int, int]
    # hypertori dropped because they are parallel to H and miss it
    dropped: tuple[int, ...] = ()
    parametrization: tuple = ()   # (base point, basis rows) with x = x0 + s @ B


def restrict(arr: ToricArrangement, index: int) -> RestrictionResult:
    if not 0 <= index < len(arr.hypertori):
        raise IndexError(f"hypertorus index {index} out of range")
    n = arr.dimension
    H = arr.hypertori[index]
    B = linalg.kernel_basis([list(H.chi)], n)
    x0 = linalg.solve_congruence([list(H.chi)], [H.angle], n).offsets[0]
    out: list[Hypertorus] = []
    seen: set[Hypertorus] = set()
    mult: dict[int, int] = {}
    dropped = []
    for i, h in enumerate(arr.hypertori):
        if i == index:
            continue
        psi = [sum(a * b for a, b in zip(h.chi, row)) for row in B]
        rhs = frac_mod1(h.angle - sum(a * b for a, b in zip(h.chi, x0)))
        d = 0
        for a in psi:
            d = gcd(d, a)
        if d == 0:
            # parallel to H; equal sets were rejected at validation
            assert rhs != 0
            dropped.append(i)
            continue
        prim = tuple(a // d for a in psi)
        mult[i] = d
        for j in range(d):
            t = Hypertorus(prim, frac_mod1((rhs + j) / d)).canonical()
            if t not in seen:
                seen.add(t)
                out.append(t)
    return RestrictionResult(ToricArrangement(n - 1, tuple(out)), mult, tuple(dropped),
                             (x0, tuple(map(tuple, B))))


@dataclass
class DelResTrace:
    """Counts of the two recursion cases, plus memo statistics."""
    case1: int = 0
    case2: int = 0
    memo_hits: int = 0
    # Case 2 identifications used: (restricted hypertorus, basis rows of its parametrization)
    splittings: list = field(default_factory=list)
    memo: dict = field(default_factory=dict)
    lock: Lock = field(default_factory=Lock)


def _beta(arr: ToricArrangement, trace: DelResTrace, pivot: int | None = None) -> int:
    n = arr.dimension
    if not arr.hypertori:
        assert n == 0, "empty arrangement is essential only in dimension 0"
        return 1
    key = arr.canonical_key() if pivot is None else None
    if key is not None:
        with trace.lock:
            if key in trace.memo:
                trace.memo_hits += 1
                return trace.memo[key]
    idx = len(arr.hypertori) - 1 if pivot is None else pivot
    deleted = arr.without(idx)
    res = restrict(arr, idx)
    restricted = res.restricted_arrangement
    assert rank(restricted) == n - 1
    if rank(deleted) == n:
        trace.case1 += 1
        b_del = _beta(deleted, trace)
        b_res = _beta(restricted, trace)
        assert b_res >= 0
        beta = b_del + b_res
    else:
        trace.case2 += 1
        trace.splittings.append((arr.hypertori[idx], res.parametrization[1]))
        beta = _beta(restricted, trace)
    if key is not None:
        with trace.lock:
            trace.memo[key] = beta
    return beta


def beta_delres(arr: ToricArrangement, pivot: int | None = None,
                trace: DelResTrace | None = None) -> int:
    """beta of an essential arrangement; ``pivot`` picks the first hypertorus
    removed (default: the last one)."""
    r = rank(arr)
    if r < arr.dimension:
        raise NotEssential(f"arrangement has rank {r} < dimension {arr.dimension}")
    return _beta(arr, trace if trace is not None else DelResTrace(), pivot)
