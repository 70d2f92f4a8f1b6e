"""Cell structure of the compact torus cut by a complexified toric
arrangement, chambers, and integral homology of the pair (T, Sigma).

The unit cube is subdivided exactly by every lift of every hypertorus that
meets it. The faces of that subdivision ("pieces") are glued in two ways:

* a piece and any face in its closure with the same set of hypertori through
  it lie in the same cell of the periodic arrangement;
* pieces on opposite cube facets with equal barycenters mod 1 are translates.

The resulting classes are the cells of the torus. Homology is computed from
the barycentric subdivision of the pieces: simplices are chains of pieces,
identified up to integer translation, which makes a Delta-complex on the torus
with Sigma as a subcomplex.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import linalg
from .arrangement import ToricArrangement, require_essential
from .linalg import frac_mod1

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class LiftedHyperplane:
    chi: tuple[int, ...]
    level: Fraction
    source: int


def lift_periodic(arr: ToricArrangement) -> list[LiftedHyperplane]:
    """All lifts ``chi . x = angle + k`` meeting the closed unit cube."""
    out = []
    for i, h in enumerate(arr.hypertori):
        lo = sum(min(a, 0) for a in h.chi)
        hi = sum(max(a, 0) for a in h.chi)
        for k in range(math.ceil(lo - h.angle), math.floor(hi - h.angle) + 1):
            out.append(LiftedHyperplane(h.chi, h.angle + k, i))
    return out


def _dot(a, x):
    return sum(p * q for p, q in zip(a, x))


def _affine_rank(points) -> int:
    pts = list(points)
    if len(pts) <= 1:
        return 0
    base = pts[0]
    diffs = [[q - b for q, b in zip(p, base)] for p in pts[1:]]
    den = 1
    for row in diffs:
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
    return linalg.rank([[int(v * den) for v in row] for row in diffs], len(base))


class _Region:
    """Full-dimensional convex polytope: inequalities ``a . x <= b`` plus vertices."""

    __slots__ = ("ineqs", "verts")

    def __init__(self, ineqs, verts):
        self.ineqs = ineqs
        self.verts = verts

    def tight(self, v):
        return frozenset(k for k, (a, b) in enumerate(self.ineqs) if _dot(a, v) == b)

    def split(self, a, c, n):
        vals = [_dot(a, v) - c for v in self.verts]
        if min(vals) >= 0 or max(vals) <= 0:
            return None
        tights = [self.tight(v) for v in self.verts]
        new = []
        for i, j in itertools.combinations(range(len(self.verts)), 2):
            if (vals[i] < 0) == (vals[j] < 0) or vals[i] == 0 or vals[j] == 0:
                continue
            common = tights[i] & tights[j]
            if linalg.rank([list(self.ineqs[k][0]) for k in common], n) != n - 1:
                continue
            t = vals[i] / (vals[i] - vals[j])
            u, w = self.verts[i], self.verts[j]
            new.append(tuple(p + t * (q - p) for p, q in zip(u, w)))
        neg = [v for v, s in zip(self.verts, vals) if s <= 0] + new
        pos = [v for v, s in zip(self.verts, vals) if s >= 0] + new
        lo = _Region(self.ineqs + [(a, c)], neg)
        hi = _Region(self.ineqs + [(tuple(-p for p in a), -c)], pos)
        lo.prune(n)
        hi.prune(n)
        return lo, hi

    def prune(self, n):
        keep = []
        for a, b in self.ineqs:
            on = [v for v in self.verts if _dot(a, v) == b]
            if len(on) >= n and _affine_rank(on) == n - 1:
                if (a, b) not in keep:
                    keep.append((a, b))
        self.ineqs = keep

    def faces(self):
        """All nonempty faces as vertex frozensets (including the region)."""
        facet_sets = {frozenset(v for v in self.verts if _dot(a, v) == b) for a, b in self.ineqs}
        faces = set(facet_sets)
        frontier = set(facet_sets)
        while frontier:
            nxt = set()
            for f in frontier:
                for g in facet_sets:
                    h = f & g
                    if h and h not in faces:
                        nxt.add(h)
            faces |= nxt
            frontier = nxt
        faces.add(frozenset(self.verts))
        return faces


def subdivide_cube(n: int, hyperplanes) -> list[_Region]:
    ineqs = []
    for i in range(n):
        e = tuple(int(k == i) for k in range(n))
        ineqs.append((tuple(-p for p in e), Fraction(0)))
        ineqs.append((e, Fraction(1)))
    verts = [tuple(Fraction(b) for b in bits) for bits in itertools.product((0, 1), repeat=n)]
    regions = [_Region(ineqs, verts)]
    seen = set()
    for hp in hyperplanes:
        key = (hp.chi, hp.level)
        if key in seen:
            continue
        seen.add(key)
        out = []
        for r in regions:
            parts = r.split(hp.chi, hp.level, n)
            out.extend(parts if parts else (r,))
        regions = out
    return regions


@dataclass
class Piece:
    """A relatively open face of the cube subdivision."""
    vertices: frozenset
    dimension: int
    barycenter: Point
    singular_set: frozenset   # hypertorus indices through the piece
    subfaces: set = field(default_factory=set)  # indices of proper faces

    @property
    def singular(self) -> bool:
        return bool(self.singular_set)

    @property
    def torus_key(self) -> Point:
        return tuple(frac_mod1(c) for c in self.barycenter)


@dataclass
class Cell:
    dimension: int
    point: Point               # interior point, coordinates in [0, 1)
    singular: bool
    singular_set: frozenset
    pieces: list[int]
    boundary: list[int] = field(default_factory=list)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass
class TorusCellComplex:
    arrangement: ToricArrangement
    pieces: list[Piece]
    regions: list[list[int]]     # piece indices of each region's faces, region itself last
    cells: list[Cell]
    piece_cell: list[int]

    @property
    def n(self) -> int:
        return self.arrangement.dimension

    @cached_property
    def f_vector(self) -> list[int]:
        out = [0] * (self.n + 1)
        for c in self.cells:
            out[c.dimension] += 1
        return out

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector))

    @property
    def chamber_cells(self) -> list[Cell]:
        return [c for c in self.cells if c.dimension == self.n]

    @property
    def chamber_count(self) -> int:
        return len(self.chamber_cells)

    def cells_of_dimension(self, d: int) -> list[Cell]:
        return [c for c in self.cells if c.dimension == d]


def _singular_set(arr: ToricArrangement, x: Point) -> frozenset:
    return frozenset(i for i, h in enumerate(arr.hypertori) if h.contains(x))


def cellulate(arr: ToricArrangement) -> TorusCellComplex:
    require_essential(arr)
    n = arr.dimension
    if n == 0:
        p = Piece(frozenset({()}), 0, (), frozenset())
        return TorusCellComplex(arr, [p], [[0]], [Cell(0, (), False, frozenset(), [0])], [0])
    regions = subdivide_cube(n, lift_periodic(arr))
    index: dict[frozenset, int] = {}
    pieces: list[Piece] = []
    region_faces: list[list[int]] = []
    for r in regions:
        ids = []
        for vs in sorted(r.faces(), key=len):
            if vs not in index:
                bary = tuple(sum(c) / len(vs) for c in zip(*vs))
                index[vs] = len(pieces)
                pieces.append(Piece(vs, _affine_rank(vs), bary, _singular_set(arr, bary)))
            ids.append(index[vs])
        for i in ids:
            for j in ids:
                if i != j and pieces[j].vertices < pieces[i].vertices:
                    pieces[i].subfaces.add(j)
        region_faces.append(ids)

    uf = _UnionFind(len(pieces))
    for i, p in enumerate(pieces):
        for j in p.subfaces:
            if pieces[j].singular_set == p.singular_set:
                uf.union(i, j)
    by_key: dict[Point, int] = {}
    for i, p in enumerate(pieces):
        k = p.torus_key
        if k in by_key:
            uf.union(by_key[k], i)
        else:
            by_key[k] = i

    classes: dict[int, list[int]] = {}
    for i in range(len(pieces)):
        classes.setdefault(uf.find(i), []).append(i)

    def class_rep(members):
        d = max(pieces[i].dimension for i in members)
        return min((pieces[i].torus_key for i in members if pieces[i].dimension == d)), d

    ordered = sorted(classes.values(), key=lambda ms: (class_rep(ms)[1], class_rep(ms)[0]))
    piece_cell = [0] * len(pieces)
    cells = []
    for ci, members in enumerate(ordered):
        point, d = class_rep(members)
        sset = pieces[members[0]].singular_set
        assert all(pieces[i].singular_set == sset for i in members)
        cells.append(Cell(d, point, bool(sset), sset, sorted(members)))
        for i in members:
            piece_cell[i] = ci
    for ci, c in enumerate(cells):
        bd = {piece_cell[j] for i in c.pieces for j in pieces[i].subfaces} - {ci}
        c.boundary = sorted(bd)
    return TorusCellComplex(arr, pieces, region_faces, cells, piece_cell)


def chambers(arr: ToricArrangement, complex_: TorusCellComplex | None = None):
    cx = complex_ or cellulate(arr)
    reps = [c.point for c in cx.chamber_cells]
    return len(reps), reps


def f_vector(arr: ToricArrangement, complex_: TorusCellComplex | None = None) -> list[int]:
    return list((complex_ or cellulate(arr)).f_vector)


@dataclass(frozen=True)
class HomologyTable:
    ranks: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def __getitem__(self, d):
        return self.ranks[d], self.torsion[d]

    @property
    def top_degree(self) -> int:
        return len(self.ranks) - 1

    def concentrated(self) -> bool:
        n = self.top_degree
        return all(r == 0 for r in self.ranks[:n]) and not any(self.torsion)

    def as_dict(self):
        return [{"degree": d, "rank": r, "torsion": list(t)}
                for d, (r, t) in enumerate(zip(self.ranks, self.torsion))]


def _simplex_key(chain, pieces):
    top = pieces[chain[-1]].barycenter
    return (tuple(frac_mod1(c) for c in top),
            tuple(tuple(a - b for a, b in zip(pieces[i].barycenter, top)) for i in chain[:-1]))


def relative_chain_complex(cx: TorusCellComplex):
    """Simplices of the relative barycentric Delta-complex, by degree.

    Returns ``(simplices, keys)``: ``simplices[k]`` is a list of representative
    chains (piece indices, increasing dimension) of the k-simplices not in
    Sigma, ``keys[k]`` maps translation-class keys to positions.
    """
    pieces = cx.pieces
    n = cx.n
    chains_under: dict[int, list[tuple[int, ...]]] = {}

    def chains_ending(i):
        if i not in chains_under:
            out = [(i,)]
            for j in pieces[i].subfaces:
                out.extend(c + (i,) for c in chains_ending(j))
            chains_under[i] = out
        return chains_under[i]

    simplices: list[list[tuple[int, ...]]] = [[] for _ in range(n + 1)]
    keys: list[dict] = [{} for _ in range(n + 1)]
    for i, p in enumerate(pieces):
        if p.singular:
            continue
        for ch in chains_ending(i):
            k = len(ch) - 1
            key = _simplex_key(ch, pieces)
            if key not in keys[k]:
                keys[k][key] = len(simplices[k])
                simplices[k].append(ch)
    return simplices, keys


def relative_homology(arr: ToricArrangement, complex_: TorusCellComplex | None = None) -> HomologyTable:
    require_essential(arr)
    n = arr.dimension
    if n == 0:
        return HomologyTable((1,), ((),))
    cx = complex_ or cellulate(arr)
    pieces = cx.pieces
    simplices, keys = relative_chain_complex(cx)
    # boundary_rank[k], torsion[k] describe d_k : C_k -> C_{k-1}
    bd_rank = [0] * (n + 2)
    bd_tors: list[list[int]] = [[] for _ in range(n + 2)]
    for k in range(1, n + 1):
        rows = []
        for ch in simplices[k]:
            row: dict[int, int] = {}
            for i in range(len(ch)):
                face = ch[:i] + ch[i + 1:]
                if pieces[face[-1]].singular:
                    continue
                col = keys[k - 1][_simplex_key(face, pieces)]
                v = row.get(col, 0) + (-1) ** i
                if v:
                    row[col] = v
                else:
                    row.pop(col, None)
            rows.append(row)
        bd_rank[k], bd_tors[k] = linalg.sparse_elementary_divisors(rows, len(simplices[k - 1]))
    ranks = []
    torsion = []
    for k in range(n + 1):
        ranks.append(len(simplices[k]) - bd_rank[k] - bd_rank[k + 1])
        torsion.append(tuple(sorted(bd_tors[k + 1])))
    return HomologyTable(tuple(ranks), tuple(torsion))


def relative_simplex_counts(cx: TorusCellComplex) -> list[int]:
    if cx.n == 0:
        return [1]
    simplices, _ = relative_chain_complex(cx)
    return [len(s) for s in simplices]
