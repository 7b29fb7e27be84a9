"""alpha-Matroid Parity: pick q blocks whose union is independent.

The solver is a level-by-level dynamic program over partial unions of
blocks, pruned after every level to a representative subfamily (see
:mod:`simfes.repfam`). ``brute_parity`` is the exhaustive oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Hashable

from .matroids import LinearMatroid, is_independent
from .repfam import Member, WedgeCalculator, select_representatives, witness_key

ORACLE_LIMIT = 10 ** 6


@dataclass(frozen=True)
class ParityInstance:
    M: LinearMatroid
    blocks: tuple[tuple[Hashable, ...], ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        if self.q < 0:
            raise ValueError("q must be non-negative")
        sizes = {len(b) for b in self.blocks}
        if len(sizes) > 1:
            raise ValueError("malformed blocks: sizes differ")
        seen = set()
        for b in self.blocks:
            for lab in b:
                if lab in seen:
                    raise ValueError("malformed blocks: not pairwise disjoint")
                seen.add(lab)
                self.M.index(lab)

    @property
    def alpha(self) -> int:
        return len(self.blocks[0]) if self.blocks else 0


def solve_parity(inst: ParityInstance, stats: dict | None = None) -> frozenset[int] | None:
    """Return ids (indices into ``inst.blocks``) of q blocks with independent union, or None.

    ``stats`` (optional) receives the per-level family sizes and, on a NO,
    the number of levels that became empty.
    """
    M, q, alpha = inst.M, inst.q, inst.alpha
    sizes: list[int] = []
    if stats is not None:
        stats["family_sizes"] = sizes
    if q == 0:
        return frozenset()
    if q > len(inst.blocks) or q * alpha > M.rank:
        if stats is not None:
            stats["empty_levels"] = q
        return None
    calc = WedgeCalculator(M)
    p = M.field.p
    block_cols = [tuple(M.index(lab) for lab in b) for b in inst.blocks]
    block_split = [calc.split(cols) for cols in block_cols]
    # blocks that are dependent on their own can never take part
    usable = [b for b in range(len(block_cols)) if calc.wedge_split(block_split[b])]

    family = [Member(frozenset(), frozenset())]
    splits = {frozenset(): tuple(() for _ in M.parts)}
    for level in range(1, q + 1):
        seen = set()
        cands = []
        new_splits = {}
        for mem in family:
            base = splits[mem.W]
            for b in usable:
                if b in mem.W:
                    continue
                W = mem.W | {b}
                if W in seen:
                    continue
                seen.add(W)
                split = tuple(tuple(sorted(x + y)) if y else x
                              for x, y in zip(base, block_split[b]))
                vec = calc.wedge_split(split)
                if vec:
                    new_splits[W] = split
                    cands.append((Member(mem.S | set(block_cols[b]), W), vec))
        cands.sort(key=lambda mv: witness_key(mv[0]))
        family = select_representatives(cands, p)
        splits = {m.W: new_splits[m.W] for m in family}
        calc.retain(splits.values())
        sizes.append(len(family))
        if not family:
            if stats is not None:
                stats["empty_levels"] = q - level + 1
            return None
    return family[0].W


def brute_parity(inst: ParityInstance) -> frozenset[int] | None:
    """Exhaustive search over q-subsets of blocks in lexicographic order."""
    nb, q = len(inst.blocks), inst.q
    if comb(nb, q) > ORACLE_LIMIT:
        raise ValueError("instance too large for oracle")
    for ids in combinations(range(nb), q):
        union = [lab for i in ids for lab in inst.blocks[i]]
        if is_independent(inst.M, union):
            return frozenset(ids)
    return None
