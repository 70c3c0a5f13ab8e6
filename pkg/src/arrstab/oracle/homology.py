"""Equivariant reduced homology of order complexes over the rationals.

Simplices are chains of poset elements; the boundary is the usual
alternating face sum, augmented by the empty simplex in degree -1, so
the empty complex has one-dimensional homology there.  Group traces on
homology are read off harmonic representatives: in each degree the
kernel of the stacked system (boundary conditions plus orthogonality to
the next boundary image) is a g-invariant copy of homology, because the
permutation action of the group on chains is orthogonal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..partitions import SetPartition
from .linalg import KernelVector, eliminate


class IntervalHomology:
    """Reduced order-complex homology of an open interval with its
    induced symmetry action.

    ``vertices`` are the interval's elements; any permutation that maps
    the vertex set to itself acts on chains without signs, since chains
    are ordered by the poset itself.
    """

    def __init__(self, vertices: Sequence[SetPartition]):
        self.vertices = sorted(vertices, key=lambda el: (el.type().rank, el.blocks))
        self.vertex_index = {el: i for i, el in enumerate(self.vertices)}
        nverts = len(self.vertices)
        above = [
            [
                j
                for j in range(nverts)
                if j != i and self.vertices[i].is_refinement_of(self.vertices[j])
            ]
            for i in range(nverts)
        ]
        self.simplices: dict[int, list[tuple[int, ...]]] = {-1: [()]}
        self.index: dict[int, dict[tuple[int, ...], int]] = {-1: {(): 0}}
        frontier = [(i,) for i in range(nverts)]
        dim = 0
        while frontier:
            self.simplices[dim] = frontier
            self.index[dim] = {s: c for c, s in enumerate(frontier)}
            frontier = [ch + (m,) for ch in frontier for m in above[ch[-1]]]
            dim += 1
        self.top = dim - 1
        self._ranks: dict[int, int] = {}
        self._kernels: dict[int, list[KernelVector]] = {}
        self.dims = self._homology_dims()

    def chain_count(self, degree: int) -> int:
        return len(self.simplices.get(degree, ()))

    def _boundary_rows(self, j: int) -> list[dict[int, int]]:
        """Equations of the boundary map out of degree j, one row per
        (j-1)-simplex."""
        rows: list[dict[int, int]] = [dict() for _ in self.simplices[j - 1]]
        face_index = self.index[j - 1]
        for col, s in enumerate(self.simplices[j]):
            for pos in range(len(s)):
                face = s[:pos] + s[pos + 1 :]
                rows[face_index[face]][col] = 1 if pos % 2 == 0 else -1
        return rows

    def _coface_rows(self, j: int) -> list[dict[int, int]]:
        """One row per (j+1)-simplex: the support of its boundary in
        degree j (orthogonality constraints against boundaries)."""
        rows = []
        index_j = self.index[j]
        for s in self.simplices.get(j + 1, ()):
            row = {}
            for pos in range(len(s)):
                face = s[:pos] + s[pos + 1 :]
                row[index_j[face]] = 1 if pos % 2 == 0 else -1
            rows.append(row)
        return rows

    def boundary_rank(self, j: int) -> int:
        """Rank of the boundary map from degree j to degree j-1."""
        if j < 0 or j > self.top:
            return 0
        if j not in self._ranks:
            rank, _ = eliminate(self._boundary_rows(j), self.chain_count(j))
            self._ranks[j] = rank
        return self._ranks[j]

    def _homology_dims(self) -> dict[int, int]:
        dims = {}
        h_empty = 1 - self.boundary_rank(0)
        if h_empty:
            dims[-1] = h_empty
        for j in range(0, self.top + 1):
            hj = self.chain_count(j) - self.boundary_rank(j) - self.boundary_rank(j + 1)
            if hj:
                dims[j] = hj
        return dims

    def _kernel(self, j: int) -> list[KernelVector]:
        if j not in self._kernels:
            rows = self._boundary_rows(j) + self._coface_rows(j)
            _, kernel = eliminate(rows, self.chain_count(j), want_kernel=True)
            assert kernel is not None and len(kernel) == self.dims.get(j, 0)
            self._kernels[j] = kernel
        return self._kernels[j]

    def vertex_map(self, perm: tuple[int, ...]) -> list[int]:
        """Action of a symmetric-group element on the vertex indices."""
        return [self.vertex_index[v.apply(perm)] for v in self.vertices]

    def trace(self, degree: int, perm: tuple[int, ...]) -> int:
        """Trace of the permutation on reduced homology in ``degree``.

        The coefficient of each harmonic basis vector k inside g*k is
        k evaluated at the preimage of its unit coordinate, so the trace
        is a sum of single lookups.
        """
        if self.dims.get(degree, 0) == 0:
            return 0
        if degree == -1:
            return 1
        vmap = self.vertex_map(perm)
        simp = self.simplices[degree]
        idx = self.index[degree]
        inverse = [0] * len(simp)
        for a, s in enumerate(simp):
            inverse[idx[tuple(vmap[v] for v in s)]] = a
        total = Fraction(0)
        for kv in self._kernel(degree):
            val = kv.entries.get(inverse[kv.free_col])
            if val:
                total += Fraction(val, kv.norm)
        if total.denominator != 1:
            raise AssertionError(f"non-integral homology trace {total}")
        return int(total)

    def trace_on_chains(self, degree: int, perm: tuple[int, ...]) -> int:
        """Number of chains fixed pointwise (trace on the chain group)."""
        if degree == -1:
            return 1
        vmap = self.vertex_map(perm)
        return sum(
            1
            for s in self.simplices.get(degree, ())
            if all(vmap[v] == v for v in s)
        )
