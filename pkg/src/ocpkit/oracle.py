"""Exact geometric face tests for order and chain polytopes.

Both polytopes come with a complete facet list and a complete vertex list, so
the smallest face containing a vertex set ``S`` is the set of vertices lying on
every facet that is tight on all of ``S``.  No hull computation and no floating
point are involved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .poset import (
    ElementSet,
    Poset,
    elements,
    enumerate_antichains,
    enumerate_ideals,
    maximal_chains,
)

LatticePoint = tuple[int, ...]

DEFAULT_MAX_PAIRS = 10**6
DEFAULT_MAX_TRIPLES = 10**7
# vertices are found by scanning the 0/1 cube up to this dimension
CUBE_SCAN_LIMIT = 20


class OracleCapExceeded(RuntimeError):
    pass


def rho(W: ElementSet, d: int) -> LatticePoint:
    return tuple((W >> i) & 1 for i in range(d))


@dataclass(frozen=True)
class FacetInequality:
    """``normal . x <= rhs``."""

    normal: tuple[int, ...]
    rhs: int

    def value(self, x: Sequence[int]) -> int:
        return sum(a * v for a, v in zip(self.normal, x))

    def holds(self, x: Sequence[int]) -> bool:
        return self.value(x) <= self.rhs

    def is_tight(self, x: Sequence[int]) -> bool:
        return self.value(x) == self.rhs


def _unit(d: int, i: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if k == i else 0 for k in range(d))


@dataclass(frozen=True)
class PolytopeModel:
    kind: str
    d: int
    vertices: tuple[LatticePoint, ...]
    sources: tuple[ElementSet, ...]
    facets: tuple[FacetInequality, ...]

    @cached_property
    def index(self) -> dict[LatticePoint, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def vertex_tight(self) -> tuple[int, ...]:
        """Per vertex, the bitmask of facets tight at it."""
        return tuple(
            sum(1 << f for f, h in enumerate(self.facets) if h.is_tight(v))
            for v in self.vertices
        )

    @cached_property
    def facet_tight(self) -> tuple[int, ...]:
        """Per facet, the bitmask of vertices lying on it."""
        out = [0] * len(self.facets)
        for k, mask in enumerate(self.vertex_tight):
            for f in elements(mask):
                out[f] |= 1 << k
        return tuple(out)

    @property
    def all_vertices(self) -> int:
        return (1 << len(self.vertices)) - 1

    def face_mask(self, vertex_mask: int) -> int:
        """Vertex bitmask of the smallest face containing ``vertex_mask``."""
        tight = -1
        for k in elements(vertex_mask):
            tight &= self.vertex_tight[k]
        face = self.all_vertices
        for f in elements(tight & ((1 << len(self.facets)) - 1)):
            face &= self.facet_tight[f]
        return face

    def vertex_mask(self, points: Sequence[LatticePoint]) -> int:
        mask = 0
        for p in points:
            k = self.index.get(tuple(p))
            if k is None:
                raise ValueError(f"{tuple(p)} is not a vertex of the {self.kind} polytope")
            mask |= 1 << k
        return mask


def _cube_points(d: int, facets: Sequence[FacetInequality]) -> list[tuple[ElementSet, LatticePoint]]:
    out = []
    for W in range(1 << d):
        x = rho(W, d)
        if all(h.holds(x) for h in facets):
            out.append((W, x))
    return out


def _build(kind: str, P: Poset, facets: list[FacetInequality], fallback) -> PolytopeModel:
    # every 0/1 point of a 0/1-polytope is a vertex of it
    if P.d <= CUBE_SCAN_LIMIT:
        found = _cube_points(P.d, facets)
    else:
        found = [(W, rho(W, P.d)) for W in fallback(P)]
    return PolytopeModel(
        kind=kind,
        d=P.d,
        vertices=tuple(x for _, x in found),
        sources=tuple(W for W, _ in found),
        facets=tuple(facets),
    )


def order_polytope_model(P: Poset) -> PolytopeModel:
    d = P.d
    facets = [FacetInequality(_unit(d, i, -1), 0) for i in elements(P.maximal())]
    facets += [FacetInequality(_unit(d, j), 1) for j in elements(P.minimal())]
    for i, j in sorted(P.covers):
        # i below j means x_i >= x_j
        normal = [0] * d
        normal[j], normal[i] = 1, -1
        facets.append(FacetInequality(tuple(normal), 0))
    return _build("order", P, facets, enumerate_ideals)


def chain_polytope_model(P: Poset) -> PolytopeModel:
    d = P.d
    facets = [FacetInequality(_unit(d, i, -1), 0) for i in range(d)]
    for chain in maximal_chains(P):
        normal = [0] * d
        for i in chain:
            normal[i] = 1
        facets.append(FacetInequality(tuple(normal), 1))
    return _build("chain", P, facets, enumerate_antichains)


def smallest_face(M: PolytopeModel, S: Sequence[LatticePoint]) -> list[LatticePoint]:
    if not S:
        raise ValueError("need at least one point")
    face = M.face_mask(M.vertex_mask(S))
    return [M.vertices[k] for k in elements(face)]


def affine_rank(S: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of integer points, by fraction-free elimination."""
    if not S:
        raise ValueError("need at least one point")
    base = S[0]
    rows = [[a - b for a, b in zip(p, base)] for p in S[1:]]
    rank = 0
    ncols = len(base)
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if f:
                rows[r] = [p[col] * x - f * y for x, y in zip(rows[r], p)]
        rank += 1
    return rank


def is_edge_geometric(M: PolytopeModel, pair: Sequence[LatticePoint]) -> bool:
    u, v = pair
    if tuple(u) == tuple(v):
        raise ValueError("edge endpoints must differ")
    mask = M.vertex_mask([u, v])
    return M.face_mask(mask) == mask


def is_triangle_geometric(M: PolytopeModel, triple: Sequence[LatticePoint]) -> bool:
    if len({tuple(p) for p in triple}) != 3:
        raise ValueError("triangle vertices must be distinct")
    mask = M.vertex_mask(triple)
    return M.face_mask(mask) == mask and affine_rank(list(triple)) == 2


def _edge_indices(M: PolytopeModel, max_pairs: int) -> list[tuple[int, int]]:
    n = len(M.vertices)
    if n * (n - 1) // 2 > max_pairs:
        raise OracleCapExceeded(f"{n} vertices give more than {max_pairs} pairs")
    out = []
    for a, b in itertools.combinations(range(n), 2):
        mask = (1 << a) | (1 << b)
        if M.face_mask(mask) == mask:
            out.append((a, b))
    return out


def brute_edges(M: PolytopeModel, max_pairs: int = DEFAULT_MAX_PAIRS) -> list[tuple[LatticePoint, LatticePoint]]:
    """Every vertex pair whose smallest face is the pair itself."""
    return sorted(
        (M.vertices[a], M.vertices[b]) for a, b in _edge_indices(M, max_pairs)
    )


def brute_triangles(
    M: PolytopeModel,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_triples: int = DEFAULT_MAX_TRIPLES,
    exhaustive: bool = False,
) -> list[tuple[LatticePoint, LatticePoint, LatticePoint]]:
    """Every vertex triple spanning a triangular 2-face.

    By default only triples whose three sides are geometric edges are tested,
    since each side of a 2-face is an edge of the polytope.  ``exhaustive``
    tests all triples instead.
    """
    n = len(M.vertices)
    if exhaustive:
        if n * (n - 1) * (n - 2) // 6 > max_triples:
            raise OracleCapExceeded(f"{n} vertices give more than {max_triples} triples")
        candidates = itertools.combinations(range(n), 3)
    else:
        nbrs: dict[int, set[int]] = {}
        for a, b in _edge_indices(M, max_pairs):
            nbrs.setdefault(a, set()).add(b)
        candidates = (
            (a, b, c)
            for a, higher in nbrs.items()
            for b in higher
            for c in nbrs.get(b, ())
            if c in higher
        )
    out = []
    for a, b, c in candidates:
        mask = (1 << a) | (1 << b) | (1 << c)
        if M.face_mask(mask) != mask:
            continue
        pts = [M.vertices[a], M.vertices[b], M.vertices[c]]
        if affine_rank(pts) == 2:
            out.append(tuple(sorted(pts)))
    out.sort()
    return out
