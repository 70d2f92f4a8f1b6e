"""Poset of layers, tangential arrangements, and the Euler characteristic of
the complement by stratification."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .arrangement import NotEssential, ToricArrangement, rank
from .linalg import frac_mod1


@dataclass(frozen=True)
class Layer:
    """A connected component ``{x : K x ≡ offset (mod 1)}`` with ``K`` saturated
    and in HNF. Equality is by ``(key_matrix, offset)`` only."""
    key_matrix: tuple[tuple[int, ...], ...]
    offset: tuple[Fraction, ...]
    dimension: int = field(compare=False)
    supporting_hypertori: tuple[int, ...] = field(compare=False, default=())

    @property
    def key(self):
        return (self.key_matrix, self.offset)

    def point(self) -> tuple[Fraction, ...]:
        """A rational point on the layer (HNF back-substitution)."""
        n = self.dimension + len(self.key_matrix)
        sol = linalg.solve_congruence([list(r) for r in self.key_matrix], list(self.offset), n)
        assert sol.component_count == 1
        return sol.offsets[0]

    def contained_in(self, other: "Layer") -> bool:
        for row in other.key_matrix:
            if linalg.in_row_lattice(row, self.key_matrix) is None:
                return False
        x = self.point()
        return all(frac_mod1(sum(a * b for a, b in zip(row, x)) - c) == 0
                   for row, c in zip(other.key_matrix, other.offset))


def make_layer(rows, point, n: int) -> Layer:
    K = linalg.saturate(rows, n)
    off = tuple(frac_mod1(sum(a * b for a, b in zip(row, point))) for row in K)
    return Layer(K, off, n - len(K))


def _support(arr: ToricArrangement, layer: Layer) -> tuple[int, ...]:
    x = layer.point() if layer.key_matrix else (Fraction(0),) * arr.dimension
    out = []
    for i, h in enumerate(arr.hypertori):
        if linalg.in_row_lattice(h.chi, layer.key_matrix) is not None and h.contains(x):
            out.append(i)
    return tuple(out)


@dataclass
class LayerPoset:
    n: int
    layers: list[Layer]          # layers[0] is the whole torus
    covers: list[tuple[int, int]]  # (i, j): layers[i] is covered by layers[j]
    below: list[set[int]]        # below[j]: indices strictly contained in layers[j]

    @property
    def top(self) -> Layer:
        return self.layers[0]

    def proper(self) -> list[Layer]:
        return self.layers[1:]

    def index(self, layer: Layer) -> int:
        for i, g in enumerate(self.layers):
            if g == layer:
                return i
        raise KeyError("layer not in poset")

    def by_dimension(self, d: int) -> list[Layer]:
        return [g for g in self.layers[1:] if g.dimension == d]


def _intersect(layer_rows, layer_point, h, n):
    rows = [list(r) for r in layer_rows] + [list(h.chi)]
    rhs = [frac_mod1(sum(a * b for a, b in zip(r, layer_point))) for r in layer_rows] + [h.angle]
    return rows, linalg.solve_congruence(rows, rhs, n)


def layers(arr: ToricArrangement, order=None) -> LayerPoset:
    """Enumerate all layers by incremental closure: intersect every known
    layer with every hypertorus not containing it, deduplicating by key.

    ``order`` permutes the hypertori during generation; the result does not
    depend on it.
    """
    n = arr.dimension
    hts = arr.hypertori
    idx = list(order) if order is not None else list(range(len(hts)))
    top = Layer((), (), n, ())
    found: dict = {}
    queue = []
    for i in idx:
        h = hts[i]
        sol = linalg.solve_congruence([list(h.chi)], [h.angle], n)
        g = make_layer([list(h.chi)], sol.offsets[0], n)
        if g.key not in found:
            found[g.key] = g
            queue.append(g)
    while queue:
        g = queue.pop()
        x = g.point()
        for i in idx:
            h = hts[i]
            if linalg.in_row_lattice(h.chi, g.key_matrix) is not None:
                continue  # h contains g or misses it entirely
            rows, sol = _intersect(g.key_matrix, x, h, n)
            for off in sol.offsets:
                new = make_layer(rows, off, n)
                if new.key not in found:
                    found[new.key] = new
                    queue.append(new)
    proper = sorted(found.values(), key=lambda g: (-g.dimension, g.key_matrix, g.offset))
    full = [top] + [Layer(g.key_matrix, g.offset, g.dimension, _support(arr, g)) for g in proper]
    for g in full[1:]:
        assert len(g.key_matrix) + g.dimension == n
        assert g.supporting_hypertori
    below: list[set[int]] = [set() for _ in full]
    below[0] = set(range(1, len(full)))
    for j in range(1, len(full)):
        for i in range(1, len(full)):
            if i != j and full[i].dimension < full[j].dimension and full[i].contained_in(full[j]):
                below[j].add(i)
    covers = []
    for j in range(len(full)):
        for i in below[j]:
            if not any(i in below[k] for k in below[j]):
                covers.append((i, j))
    covers.sort()
    return LayerPoset(n, full, covers, below)


@dataclass(frozen=True)
class CentralArrangement:
    normals: tuple[tuple[int, ...], ...]
    sources: tuple[int, ...]
    rank: int


def tangential_arrangement(arr: ToricArrangement, layer: Layer,
                           poset: LayerPoset | None = None) -> CentralArrangement:
    poset = poset or layers(arr)
    g = poset.layers[poset.index(layer)]
    normals = tuple(arr.hypertori[i].chi for i in g.supporting_hypertori)
    # pairwise non-proportional: proportional primitive characters are equal
    # up to sign, and then the hypertori would be parallel or duplicates
    canon = {tuple(c) if next(a for a in c if a) > 0 else tuple(-a for a in c) for c in normals}
    assert len(canon) == len(normals)
    r = linalg.rank([list(c) for c in normals], arr.dimension)
    assert r == arr.dimension - g.dimension
    return CentralArrangement(normals, g.supporting_hypertori, r)


def euler_complement(arr: ToricArrangement, poset: LayerPoset | None = None) -> int:
    """Euler characteristic of the complement, by compactly supported Euler
    characteristics of the open strata (torus of positive dimension has
    e_c = 0, a point has e_c = 1)."""
    poset = poset or layers(arr)
    ec_open: dict[int, int] = {}
    for j in sorted(range(1, len(poset.layers)), key=lambda k: poset.layers[k].dimension):
        g = poset.layers[j]
        ec_closed = 1 if g.dimension == 0 else 0
        ec_open[j] = ec_closed - sum(ec_open[i] for i in poset.below[j])
    ec_torus = 1 if arr.dimension == 0 else 0
    return ec_torus - sum(ec_open.values())


def beta_poset(arr: ToricArrangement, poset: LayerPoset | None = None) -> int:
    r = rank(arr)
    if r < arr.dimension:
        raise NotEssential(f"arrangement has rank {r} < dimension {arr.dimension}")
    beta = (-1) ** arr.dimension * euler_complement(arr, poset)
    assert beta >= 0, beta
    return beta
