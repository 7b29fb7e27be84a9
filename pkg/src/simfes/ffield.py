"""Exact arithmetic and dense linear algebra over a prime field GF(p).

Matrices are immutable :class:`FMatrix` values (row-major residues). All
routines here are pure; elimination always pivots on the lowest available
row index so results are reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

DEFAULT_PRIME = 2147483647


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p <= 2 or not _is_prime(self.p):
            raise ValueError(f"field modulus must be an odd prime, got {self.p}")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return pow(a, self.p - 2, self.p)

    def matrix(self, rows: Sequence[Sequence[int]], cols: int | None = None) -> "FMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix")
        entries = tuple(x % self.p for r in rows for x in r)
        return FMatrix(self, len(rows), cols, entries)

    def zeros(self, rows: int, cols: int) -> "FMatrix":
        return FMatrix(self, rows, cols, (0,) * (rows * cols))

    def identity(self, n: int) -> "FMatrix":
        return self.matrix([[int(i == j) for j in range(n)] for i in range(n)], n)

    def random_row(self, cols: int, rng: random.Random) -> list[int]:
        return [rng.randrange(self.p) for _ in range(cols)]


@dataclass(frozen=True)
class FMatrix:
    field: PrimeField
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @property
    def p(self) -> int:
        return self.field.p

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, rows: Iterable[int] | None, cols: Iterable[int]) -> "FMatrix":
        rows = range(self.rows) if rows is None else list(rows)
        cols = list(cols)
        return self.field.matrix([[self[i, j] for j in cols] for i in rows], len(cols))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.to_rows())


def _rref(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form, in place on ``rows``; returns (nonzero rows, pivots)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        s = pow(prow[c], p - 2, p)
        if s != 1:
            prow[:] = [(x * s) % p for x in prow]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank_of_rows(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of a list-of-rows matrix (helper shared by the matroid code)."""
    if not rows:
        return 0
    work = [list(r) for r in rows]
    return len(_rref(work, len(work[0]), p)[1])


def rank(M: FMatrix) -> int:
    return rank_of_rows(M.to_rows(), M.p)


def standard_form(M: FMatrix) -> tuple[FMatrix, list[int]]:
    """Row-reduce ``M`` and drop zero rows.

    The result has ``rank(M)`` rows and is the identity on ``pivot_cols``.
    Row operations preserve every column dependency of ``M``.
    """
    reduced, pivots = _rref(M.to_rows(), M.cols, M.p)
    return M.field.matrix(reduced, M.cols), pivots


def det(rows: Sequence[Sequence[int]], p: int) -> int:
    """Determinant of a square matrix mod p."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    d = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        pc = a[c][c]
        d = (d * pc) % p
        s = pow(pc, p - 2, p)
        for i in range(c + 1, n):
            if a[i][c]:
                f = (a[i][c] * s) % p
                ai, ac = a[i], a[c]
                for j in range(c + 1, n):
                    ai[j] = (ai[j] - f * ac[j]) % p
    return d % p


class IncrementalBasis:
    """Greedy span tracker: ``add`` keeps a vector only if it is a new direction.

    Vectors may be dense lists or sparse ``{key: residue}`` dicts; keys must be
    mutually comparable. Reduction is against an echelon basis keyed by the
    smallest nonzero key.
    """

    def __init__(self, p: int):
        self.p = p
        self._basis: dict = {}

    def __len__(self) -> int:
        return len(self._basis)

    def add(self, vec) -> bool:
        p = self.p
        if isinstance(vec, dict):
            v = {k: x % p for k, x in vec.items() if x % p}
        else:
            v = {k: x % p for k, x in enumerate(vec) if x % p}
        basis = self._basis
        while v:
            lead = min(v)
            b = basis.get(lead)
            if b is None:
                s = pow(v[lead], p - 2, p)
                basis[lead] = {k: (x * s) % p for k, x in v.items()}
                return True
            f = v[lead]
            for k, x in b.items():
                y = (v.get(k, 0) - f * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return False


def max_independent_subset(vectors: Sequence[Sequence[int]], field: PrimeField) -> list[int]:
    """Indices of a maximal independent subfamily, greedy in ascending index order."""
    if vectors:
        length = len(vectors[0])
        if any(len(v) != length for v in vectors):
            raise ValueError("vectors must have equal length")
    basis = IncrementalBasis(field.p)
    return [i for i, v in enumerate(vectors) if basis.add(v)]


def wedge_vector(A: FMatrix, S: Sequence[int]) -> list[int]:
    """All |S| x |S| minors of the columns ``S``, row subsets in lexicographic order.

    The vector vanishes exactly when the columns ``S`` are dependent.
    """
    s = len(S)
    if s > A.rows:
        raise ValueError("set larger than rank")
    cols = [A.column(j) for j in S]
    p = A.p
    out = []
    for I in combinations(range(A.rows), s):
        out.append(det([[cols[c][i] for c in range(s)] for i in I], p))
    return out
