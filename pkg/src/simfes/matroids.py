"""Linear matroid representations: graphic, cographic, uniform, elongation, direct sum.

Every :class:`LinearMatroid` carries a full-row-rank matrix, so ``rank`` is
simply the row count. A direct sum remembers its diagonal blocks in
``parts``; the representative-family code uses them to factor minors.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .ecg import Multigraph, components
from .ffield import FMatrix, PrimeField, rank_of_rows, standard_form


@dataclass(frozen=True)
class Part:
    row_start: int
    row_stop: int
    col_start: int
    col_stop: int

    @property
    def rank(self) -> int:
        return self.row_stop - self.row_start


@dataclass(frozen=True)
class LinearMatroid:
    field: PrimeField
    A: FMatrix
    labels: tuple[Hashable, ...]
    parts: tuple[Part, ...] = ()

    def __post_init__(self):
        if self.A.cols != len(self.labels):
            raise ValueError("one label per column required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")
        if not self.parts:
            object.__setattr__(self, "parts", (Part(0, self.A.rows, 0, self.A.cols),))
        object.__setattr__(self, "_index", {lab: j for j, lab in enumerate(self.labels)})

    @property
    def rank(self) -> int:
        return self.A.rows

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown label {label!r}") from None

    def columns(self, S: Iterable) -> list[int]:
        return sorted(self.index(x) for x in S)

    def is_independent(self, S: Iterable) -> bool:
        return is_independent(self, S)


def _from_rows(field: PrimeField, rows: list[list[int]], labels: Sequence) -> LinearMatroid:
    """Bring arbitrary rows to standard form and wrap them."""
    M = field.matrix(rows, len(labels))
    R, _ = standard_form(M)
    return LinearMatroid(field, R, tuple(labels))


def graphic(H: Multigraph, field: PrimeField, labels: Sequence | None = None) -> LinearMatroid:
    """Signed incidence representation: +1 at the smaller endpoint, -1 at the other."""
    labels = tuple(H.edge_ids()) if labels is None else tuple(labels)
    rows = [[0] * H.m for _ in range(H.n)]
    for j, (_, u, v) in enumerate(H.edges):
        if u == v:
            continue
        a, b = min(u, v), max(u, v)
        rows[a - 1][j] = 1
        rows[b - 1][j] = field.p - 1
    return _from_rows(field, rows, labels)


def dual(M: LinearMatroid) -> LinearMatroid:
    R, pivots = standard_form(M.A)
    p = M.field.p
    pivot_set = set(pivots)
    free = [j for j in range(M.size) if j not in pivot_set]
    # R restricted to (pivots, free) is [I | D]; the dual is [-D^T | I] in the same columns
    rows = [[0] * M.size for _ in free]
    for t, j in enumerate(free):
        rows[t][j] = 1
        for r, pc in enumerate(pivots):
            rows[t][pc] = (-R[r, j]) % p
    return LinearMatroid(M.field, M.field.matrix(rows, M.size), M.labels)


def cographic(H: Multigraph, field: PrimeField, labels: Sequence | None = None) -> LinearMatroid:
    return dual(graphic(H, field, labels))


def uniform(tau: int, r: int, field: PrimeField, labels: Sequence | None = None) -> LinearMatroid:
    """U_{tau,r} as an r x tau Vandermonde matrix on the points 1..tau."""
    if r > tau or r < 0:
        raise ValueError(f"uniform matroid needs 0 <= r <= tau, got r={r}, tau={tau}")
    if field.p <= tau:
        raise ValueError(f"field too small: need p > {tau}")
    labels = tuple(range(tau)) if labels is None else tuple(labels)
    if len(labels) != tau:
        raise ValueError("need exactly tau labels")
    rows = [[pow(x, e, field.p) for x in range(1, tau + 1)] for e in range(r)]
    return LinearMatroid(field, field.matrix(rows, tau), labels)


def free(labels: Sequence, field: PrimeField) -> LinearMatroid:
    """U_{n,n} represented by the identity."""
    return LinearMatroid(field, field.identity(len(labels)), tuple(labels))


def elongation(M: LinearMatroid, ell: int, rng: random.Random, attempts: int = 5) -> LinearMatroid:
    """Stack ``ell - rank`` uniformly random rows under M's matrix.

    A set of size ``ell`` spanning M stays a basis except with probability
    at most ell/p per determinant; a set not spanning M can never become one.
    """
    if not M.rank <= ell <= M.size:
        raise ValueError(f"elongation length {ell} outside [{M.rank}, {M.size}]")
    base = M.A.to_rows()
    if ell == M.rank:
        return M
    for _ in range(attempts):
        rows = base + [M.field.random_row(M.size, rng) for _ in range(ell - M.rank)]
        if rank_of_rows(rows, M.field.p) == ell:
            return LinearMatroid(M.field, M.field.matrix(rows, M.size), M.labels)
    raise RuntimeError("elongation sampling failed")


def direct_sum(ms: Sequence[LinearMatroid]) -> LinearMatroid:
    if not ms:
        raise ValueError("direct sum of no matroids")
    field = ms[0].field
    if any(m.field != field for m in ms):
        raise ValueError("field mismatch")
    labels = tuple(lab for m in ms for lab in m.labels)
    if len(set(labels)) != len(labels):
        raise ValueError("label clash in direct sum")
    total_rows = sum(m.rank for m in ms)
    total_cols = len(labels)
    rows = [[0] * total_cols for _ in range(total_rows)]
    parts = []
    r0 = c0 = 0
    for m in ms:
        for i in range(m.rank):
            rows[r0 + i][c0:c0 + m.size] = m.A.row(i)
        # nested sums flatten into their own parts
        for part in m.parts:
            parts.append(Part(r0 + part.row_start, r0 + part.row_stop,
                              c0 + part.col_start, c0 + part.col_stop))
        r0 += m.rank
        c0 += m.size
    return LinearMatroid(field, field.matrix(rows, total_cols), labels, tuple(parts))


def is_independent(M: LinearMatroid, S: Iterable) -> bool:
    cols = M.columns(S)
    if len(cols) > M.rank:
        return False
    if not cols:
        return True
    rows = [[M.A[i, j] for j in cols] for i in range(M.rank)]
    return rank_of_rows(rows, M.field.p) == len(cols)


def cographic_independent(H: Multigraph, S: Iterable[int]) -> bool:
    """Graph-side definition: deleting S keeps the component count."""
    S = set(S)
    rest = Multigraph(H.n, tuple(e for e in H.edges if e[0] not in S))
    return components(rest) == components(H)
