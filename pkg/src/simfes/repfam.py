"""Representative families of independent sets via minor (wedge) vectors.

For a rank-r linear matroid with an r-row representation, map an s-set S to
the vector of all s x s minors of its columns. By the generalized Laplace
expansion, ``S + B`` is a basis for an (r - s)-set B exactly when a fixed
bilinear pairing of the two minor vectors is nonzero. Keeping a maximal
linearly independent subfamily of minor vectors therefore keeps, for every
such B, some member that still extends to a basis with it.

Minors are computed per diagonal part of a direct sum: the minor of a
block-diagonal submatrix is the product of the block minors, and only row
sets meeting every part in exactly as many rows as S has columns there can
be nonzero. The result is stored sparsely, keyed by global row tuples.
"""
from __future__ import annotations

from typing import Hashable, Iterable, NamedTuple, Sequence

from .ffield import IncrementalBasis
from .matroids import LinearMatroid


class Member(NamedTuple):
    S: frozenset
    W: frozenset


WitnessedFamily = list  # list[Member]


class MalformedFamily(ValueError):
    pass


class WedgeCalculator:
    """Sparse minor vectors for column sets of one matroid, cached per part."""

    def __init__(self, M: LinearMatroid):
        self.M = M
        self.p = M.field.p
        A = M.A
        self._part_of = {}
        self._colvecs = {}
        for k, part in enumerate(M.parts):
            for j in range(part.col_start, part.col_stop):
                self._part_of[j] = k
                self._colvecs[j] = [A[i, j] for i in range(part.row_start, part.row_stop)]
        self._cache: dict[tuple[int, tuple[int, ...]], dict] = {}

    def _part_wedge(self, k: int, cols: tuple[int, ...]) -> dict:
        # Laplace expansion along the last column, reusing the minors of the prefix
        if not cols:
            return {(): 1}
        hit = self._cache.get((k, cols))
        if hit is not None:
            return hit
        part = self.M.parts[k]
        t = len(cols)
        out: dict = {}
        if t <= part.rank:
            prev = self._part_wedge(k, cols[:-1])
            base = part.row_start
            entries = [(base + i, x) for i, x in enumerate(self._colvecs[cols[-1]]) if x]
            p = self.p
            for I, d in prev.items():
                for g, x in entries:
                    if g in I:
                        continue
                    r = sum(1 for h in I if h < g)
                    J = I[:r] + (g,) + I[r:]
                    term = x * d if (r + t - 1) % 2 == 0 else -x * d
                    out[J] = (out.get(J, 0) + term) % p
            out = {J: v for J, v in out.items() if v}
        self._cache[(k, cols)] = out
        return out

    def retain(self, splits: Iterable[Sequence[tuple[int, ...]]]) -> None:
        """Drop cached minors except those of the given splits (bounds memory between levels)."""
        keep = {}
        for split in splits:
            for k, cols in enumerate(split):
                hit = self._cache.get((k, cols))
                if hit is not None:
                    keep[(k, cols)] = hit
        self._cache = keep

    def split(self, cols: Iterable[int]) -> tuple[tuple[int, ...], ...]:
        """Sorted column tuples, one per part."""
        by_part: list[list[int]] = [[] for _ in self.M.parts]
        for j in cols:
            by_part[self._part_of[j]].append(j)
        return tuple(tuple(sorted(c)) for c in by_part)

    def wedge_split(self, split: Sequence[tuple[int, ...]]) -> dict:
        p = self.p
        ws = []
        for k, cols in enumerate(split):
            if cols:
                w = self._part_wedge(k, cols)
                if not w:
                    return {}
                ws.append(w)
        acc = {(): 1}
        for w in ws:
            if len(w) == 1:
                (b, y), = w.items()
                acc = {a + b: (x * y) % p for a, x in acc.items()}
            else:
                acc = {a + b: (x * y) % p for a, x in acc.items() for b, y in w.items()}
        return acc

    def wedge_columns(self, cols: Iterable[int]) -> dict:
        return self.wedge_split(self.split(cols))

    def wedge(self, S: Iterable[Hashable]) -> dict:
        """Sparse minor vector of label set S; empty dict iff S is dependent."""
        return self.wedge_columns(self.M.columns(S))


def witness_key(member: Member) -> tuple:
    return tuple(sorted(member.W))


def select_representatives(candidates: Sequence[tuple[Member, dict]], p: int) -> list[Member]:
    """Greedy independent subfamily of precomputed minor vectors, in the given order."""
    basis = IncrementalBasis(p)
    return [m for m, vec in candidates if basis.add(vec)]


def representative(family: Sequence[Member], M: LinearMatroid,
                   calc: WedgeCalculator | None = None) -> list[Member]:
    """An (r - s)-representative subfamily of ``family`` with at most C(r, s) members."""
    if not family:
        return []
    sizes = {len(m.S) for m in family}
    if len(sizes) != 1:
        raise MalformedFamily("malformed family: members of different sizes")
    s = sizes.pop()
    if s > M.rank:
        raise MalformedFamily("malformed family: set larger than rank")
    calc = calc or WedgeCalculator(M)
    cands = []
    for m in sorted(family, key=witness_key):
        vec = calc.wedge(m.S)
        if not vec:
            raise MalformedFamily("malformed family: dependent member")
        cands.append((m, vec))
    return select_representatives(cands, M.field.p)
