"""Exact integer linear algebra: Hermite/Smith normal forms, saturation,
and congruence systems on the rational torus (Q/Z)^n.

Matrices are plain lists of lists of Python ints (arbitrary precision).
Nothing here touches floating point.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

IntMatrix = list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def copy_matrix(M: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(map(int, row)) for row in M]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(A))]


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = copy_matrix(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def hnf(M: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ M == H``. ``H`` is in
    row echelon form, pivots are positive, and entries above each pivot lie
    in ``[0, pivot)``. Zero rows are kept at the bottom so that ``H`` has the
    shape of ``M``.
    """
    H = copy_matrix(M)
    m = len(H)
    n = len(H[0]) if m else (ncols or 0)
    U = identity(m)

    def addrow(dst, src, c):
        if c:
            H[dst] = [a + c * b for a, b in zip(H[dst], H[src])]
            U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    r = 0
    for j in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][j] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][j]))
            if p != r:
                H[r], H[p] = H[p], H[r]
                U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][j]:
                    addrow(i, r, -(H[i][j] // H[r][j]))
                    if H[i][j]:
                        done = False
            if done:
                break
        if H[r][j] == 0:
            continue
        if H[r][j] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        piv = H[r][j]
        for i in range(r):
            addrow(i, r, -(H[i][j] // piv))
        r += 1
    return H, U


def hnf_rows(M: Sequence[Sequence[int]], ncols: int) -> tuple[tuple[int, ...], ...]:
    """Nonzero rows of the HNF of ``M`` as a hashable tuple."""
    if not M:
        return ()
    H, _ = hnf(M, ncols)
    return tuple(tuple(row) for row in H if any(row))


@dataclass(frozen=True)
class SmithForm:
    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    Vinv: IntMatrix

    @property
    def divisors(self) -> list[int]:
        out = []
        for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)):
            if self.D[i][i] == 0:
                break
            out.append(self.D[i][i])
        return out

    @property
    def rank(self) -> int:
        return len(self.divisors)


def smith(M: Sequence[Sequence[int]], ncols: int | None = None) -> SmithForm:
    """Smith normal form with transforms: ``U @ M @ V == D``.

    ``Vinv`` is the exact inverse of ``V``, kept alongside because
    saturation needs it.
    """
    D = copy_matrix(M)
    m = len(D)
    n = len(D[0]) if m else (ncols or 0)
    U = identity(m)
    V = identity(n)
    Vinv = identity(n)

    def row_add(dst, src, c):
        D[dst] = [a + c * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def row_swap(a, b):
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]

    def col_add(dst, src, c):
        # column dst += c * column src; Vinv gets the inverse row op
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]
        Vinv[src] = [a - c * b for a, b in zip(Vinv[src], Vinv[dst])]

    def col_swap(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]
        Vinv[a], Vinv[b] = Vinv[b], Vinv[a]

    t = 0
    while t < min(m, n):
        entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        row_swap(t, i0)
        col_swap(t, j0)
        while True:
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    row_add(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    col_add(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        clean = False
            if clean:
                # divisibility: every remaining entry must be a multiple of the pivot
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if D[i][j] % D[t][t]), None)
                if bad is None:
                    break
                row_add(t, bad[0], 1)
                continue
            entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n)
                       if D[i][j] and (i == t or j == t)]
            _, i0, j0 = min(entries)
            row_swap(t, i0)
            col_swap(t, j0)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return SmithForm(D, U, V, Vinv)


def snf(M: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """``(D, U, V)`` with ``U @ M @ V == D`` in Smith normal form."""
    s = smith(M, ncols)
    return s.D, s.U, s.V


def rank(M: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    if not M:
        return 0
    H, _ = hnf(M, ncols)
    return sum(1 for row in H if any(row))


def saturate(rows: Sequence[Sequence[int]], ncols: int) -> tuple[tuple[int, ...], ...]:
    """HNF basis of the saturation of the row lattice of ``rows`` in Z^ncols."""
    if not rows:
        return ()
    s = smith(rows, ncols)
    basis = [s.Vinv[i] for i in range(s.rank)]
    return hnf_rows(basis, ncols)


def kernel_basis(M: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Rows spanning ker(M) ∩ Z^ncols (a saturated lattice)."""
    if not M:
        return identity(ncols)
    s = smith(M, ncols)
    return [[s.V[i][j] for i in range(ncols)] for j in range(s.rank, ncols)]


def in_row_lattice(v: Sequence[int], basis_hnf: Sequence[Sequence[int]]) -> list[int] | None:
    """Integer coefficients ``w`` with ``w @ basis == v``, or None.

    ``basis_hnf`` must be the nonzero rows of a row HNF.
    """
    rest = list(v)
    coeffs = []
    for row in basis_hnf:
        j = next(k for k, a in enumerate(row) if a)
        if any(rest[:j]):
            return None
        q, r = divmod(rest[j], row[j])
        if r:
            return None
        coeffs.append(q)
        rest = [a - q * b for a, b in zip(rest, row)]
    if any(rest):
        return None
    return coeffs


def frac_mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class CongruenceSolution:
    """Solutions of ``M x ≡ q (mod 1)`` on (Q/Z)^n.

    Each component is ``offset + span(direction_basis)``; all components
    share ``direction_basis``.
    """
    offsets: tuple[tuple[Fraction, ...], ...]
    direction_basis: tuple[tuple[int, ...], ...]

    @property
    def empty(self) -> bool:
        return not self.offsets

    @property
    def component_count(self) -> int:
        return len(self.offsets)

    @property
    def components(self):
        return [(off, self.direction_basis) for off in self.offsets]


def solve_congruence(M: Sequence[Sequence[int]], q: Sequence, ncols: int) -> CongruenceSolution:
    if len(q) != len(M):
        raise ValueError(f"dimension mismatch: {len(M)} rows but {len(q)} right-hand sides")
    for row in M:
        if len(row) != ncols:
            raise ValueError(f"dimension mismatch: row of length {len(row)}, expected {ncols}")
    n = ncols
    qf = [as_fraction(a) for a in q]
    if not M:
        return CongruenceSolution(((Fraction(0),) * n,), tuple(map(tuple, identity(n))))
    s = smith(M, n)
    r = s.rank
    uq = [frac_mod1(sum(s.U[i][k] * qf[k] for k in range(len(qf)))) for i in range(len(M))]
    if any(uq[i] != 0 for i in range(r, len(M))):
        return CongruenceSolution((), ())
    direction = tuple(tuple(s.V[i][j] for i in range(n)) for j in range(r, n))
    divs = s.divisors
    offsets = []
    for js in itertools.product(*(range(d) for d in divs)):
        y = [(uq[i] + js[i]) / divs[i] for i in range(r)] + [Fraction(0)] * (n - r)
        x = tuple(frac_mod1(sum(s.V[i][k] * y[k] for k in range(n))) for i in range(n))
        offsets.append(x)
    return CongruenceSolution(tuple(offsets), direction)


def sparse_elementary_divisors(rows: list[dict[int, int]], ncols: int) -> tuple[int, list[int]]:
    """Rank and non-unit elementary divisors of a sparse integer matrix.

    ``rows`` maps column index to nonzero entry. Unit pivots are eliminated
    by Schur complement first (cheap for boundary matrices, whose entries
    are mostly ±1); whatever survives goes through dense Smith form.
    Consumes ``rows``.
    """
    live = [r for r in rows if r]
    cols: dict[int, set[int]] = {}
    for i, r in enumerate(live):
        for j in r:
            cols.setdefault(j, set()).add(i)
    alive = set(range(len(live)))
    units = 0
    progress = True
    while progress:
        progress = False
        # prefer pivots in short rows/columns to limit fill-in
        order = sorted(alive, key=lambda i: len(live[i]))
        for i in order:
            if i not in alive:
                continue
            row = live[i]
            best = None
            for j, a in row.items():
                if a == 1 or a == -1:
                    c = len(cols[j])
                    if best is None or c < best[0]:
                        best = (c, j)
            if best is None:
                continue
            j = best[1]
            a = row[j]
            alive.discard(i)
            for j2 in row:
                cols[j2].discard(i)
            for k in list(cols.get(j, ())):
                rk = live[k]
                f = rk[j] * a  # a = ±1 so a^{-1} = a
                for j2, b in row.items():
                    v = rk.get(j2, 0) - f * b
                    if v:
                        if j2 not in rk:
                            cols.setdefault(j2, set()).add(k)
                        rk[j2] = v
                    elif j2 in rk:
                        del rk[j2]
                        cols[j2].discard(k)
                if not rk:
                    alive.discard(k)
            del cols[j]
            units += 1
            progress = True
    rest = [live[i] for i in alive if live[i]]
    if not rest:
        return units, []
    used = sorted({j for r in rest for j in r})
    pos = {j: k for k, j in enumerate(used)}
    dense = [[0] * len(used) for _ in rest]
    for i, r in enumerate(rest):
        for j, a in r.items():
            dense[i][pos[j]] = a
    divs = smith(dense, len(used)).divisors
    return units + len(divs), [d for d in divs if d > 1]
