"""Sparse Gaussian elimination over GF(p^k).

Vectors are dicts from comparable keys (words, tuples of words, ints) to
encoded field values.  Every stored row has its pivot at its smallest key and
a pivot coefficient of one.
"""

from __future__ import annotations

import heapq
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

from .field import FieldCtx

Vector = Dict[Hashable, int]


def axpy(ctx: FieldCtx, target: Vector, factor: int, source: Vector) -> Vector:
    """target + factor * source, as a new vector."""

    out = dict(target)
    add, mul = ctx.add, ctx.mul
    for key, value in source.items():
        total = add(out.get(key, 0), mul(factor, value))
        if total:
            out[key] = total
        else:
            out.pop(key, None)
    return out


class SparseEchelon:
    """Incremental row echelon form with optional combination tracking.

    ``add`` records, for each inserted vector, how the current row is expressed
    through the tags of the inserted vectors; a vector reducing to zero yields a
    kernel relation among the tags.
    """

    def __init__(self, ctx: FieldCtx) -> None:
        self.ctx = ctx
        self.pivots: Dict[Hashable, Tuple[Vector, Vector]] = {}
        self.relations: List[Vector] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vector: Vector, combo: Optional[Vector] = None) -> Tuple[Vector, Vector]:
        ctx = self.ctx
        current = {k: v for k, v in vector.items() if v}
        tracked = dict(combo or {})
        heap = list(current)
        heapq.heapify(heap)
        while heap:
            key = heapq.heappop(heap)
            coeff = current.get(key)
            if not coeff or key not in self.pivots:
                continue
            row, row_combo = self.pivots[key]
            factor = ctx.neg(coeff)
            for other, value in row.items():
                total = ctx.add(current.get(other, 0), ctx.mul(factor, value))
                if total:
                    if other not in current:
                        heapq.heappush(heap, other)
                    current[other] = total
                else:
                    current.pop(other, None)
            if row_combo or tracked:
                tracked = axpy(ctx, tracked, factor, row_combo)
        return current, tracked

    def add(self, vector: Vector, tag: Optional[Hashable] = None) -> bool:
        """Insert a vector; return True when it was independent of the stored rows."""

        residual, combo = self.reduce(vector, {tag: 1} if tag is not None else None)
        if not residual:
            if tag is not None and combo:
                self.relations.append(combo)
            return False
        pivot = min(residual)
        scale = self.ctx.inv(residual[pivot])
        mul = self.ctx.mul
        row = {k: mul(v, scale) for k, v in residual.items()}
        self.pivots[pivot] = (row, {k: mul(v, scale) for k, v in combo.items()})
        return True

    def contains(self, vector: Vector) -> bool:
        residual, _ = self.reduce(vector)
        return not residual

    def solve(self, vector: Vector) -> Optional[Vector]:
        """Tag coefficients c with sum c_t * v_t == vector, or None."""

        residual, combo = self.reduce(vector, {})
        if residual:
            return None
        neg = self.ctx.neg
        return {k: neg(v) for k, v in combo.items() if v}


def rank(ctx: FieldCtx, vectors: Iterable[Vector]) -> int:
    echelon = SparseEchelon(ctx)
    for vector in vectors:
        echelon.add(vector)
    return echelon.rank


def kernel(ctx: FieldCtx, images: Iterable[Tuple[Hashable, Vector]]) -> List[Vector]:
    """Basis of the kernel of the linear map sending each tag to its image."""

    echelon = SparseEchelon(ctx)
    for tag, image in images:
        echelon.add(image, tag)
    return echelon.relations


__all__ = ["Vector", "axpy", "SparseEchelon", "rank", "kernel"]
