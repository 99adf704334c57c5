"""Edges and triangular 2-faces of order and chain polytopes, combinatorially.

Vertices of the order polytope are identified with ideals and vertices of the
chain polytope with antichains, both as bitmasks.  Pairs and triples are kept
as ascending tuples of masks; for order-polytope triangles ascending integer
order coincides with the inclusion order ``I < J < K``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, asdict, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .poset import (
    ElementSet,
    NotGradedError,
    Poset,
    PreconditionError,
    RankDecomposition,
    contains_x_subposet,
    down_closure,
    elements,
    enumerate_antichains,
    enumerate_ideals,
    is_connected,
    is_maximal_ranked,
    max_of_ideal,
    min_of_set,
    popcount,
    rank_levels,
)

ORDER = "O"
CHAIN = "C"


@dataclass(frozen=True, order=True)
class EdgePair:
    kind: str
    endpoints: tuple[ElementSet, ElementSet]

    @classmethod
    def of(cls, kind: str, u: ElementSet, v: ElementSet) -> "EdgePair":
        if u == v:
            raise ValueError("edge endpoints must differ")
        return cls(kind, (min(u, v), max(u, v)))


@dataclass(frozen=True, order=True)
class TriangleTriple:
    kind: str
    members: tuple[ElementSet, ElementSet, ElementSet]

    @classmethod
    def of(cls, kind: str, *sets: ElementSet) -> "TriangleTriple":
        members = tuple(sorted(sets))
        if len(set(members)) != 3:
            raise ValueError("triangle members must be pairwise distinct")
        return cls(kind, members)

    def sides(self) -> list[tuple[ElementSet, ElementSet]]:
        return list(itertools.combinations(self.members, 2))


# -- cached building blocks ---------------------------------------------------

@lru_cache(maxsize=64)
def _ideals(P: Poset) -> tuple[int, ...]:
    return tuple(enumerate_ideals(P))


@lru_cache(maxsize=64)
def _antichains(P: Poset) -> tuple[int, ...]:
    return tuple(enumerate_antichains(P))


@lru_cache(maxsize=64)
def _maxima(P: Poset) -> dict[int, int]:
    return {I: max_of_ideal(P, I) for I in _ideals(P)}


@lru_cache(maxsize=64)
def _o_edge_set(P: Poset) -> frozenset[tuple[int, int]]:
    ideals = _ideals(P)
    out = set()
    for a, I in enumerate(ideals):
        for J in ideals[a + 1:]:
            if I & ~J == 0 and is_connected(P, J & ~I):
                out.add((I, J))
    return frozenset(out)


@lru_cache(maxsize=64)
def _c_edge_set(P: Poset) -> frozenset[tuple[int, int]]:
    antichains = _antichains(P)
    out = set()
    for a, A in enumerate(antichains):
        for B in antichains[a + 1:]:
            if is_connected(P, A ^ B):
                out.add((A, B))
    return frozenset(out)


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _graph_triangles(edges: frozenset[tuple[int, int]]) -> list[tuple[int, int, int]]:
    higher: dict[int, set[int]] = {}
    for u, v in edges:
        higher.setdefault(u, set()).add(v)
    out = []
    for u, nbrs in higher.items():
        for v in nbrs:
            for w in higher.get(v, ()):
                if w in nbrs:
                    out.append((u, v, w))
    out.sort()
    return out


# -- edges and triangles --------------------------------------------------------

def o_edges(P: Poset) -> list[EdgePair]:
    """Pairs of ideals ``I < J`` whose difference is connected."""
    return [EdgePair(ORDER, e) for e in sorted(_o_edge_set(P))]


def c_edges(P: Poset) -> list[EdgePair]:
    """Pairs of antichains whose symmetric difference is connected."""
    return [EdgePair(CHAIN, e) for e in sorted(_c_edge_set(P))]


@lru_cache(maxsize=64)
def _o_triangles(P: Poset) -> tuple[tuple[int, int, int], ...]:
    # edges are oriented by inclusion, so walk chains I < J < K
    above: dict[int, set[int]] = {}
    for I, J in _o_edge_set(P):
        above.setdefault(I, set()).add(J)
    out = []
    for I, js in above.items():
        for J in js:
            for K in above.get(J, ()):
                if K in js:
                    out.append((I, J, K))
    out.sort()
    return tuple(out)


def o_triangles(P: Poset) -> list[TriangleTriple]:
    """Chains of ideals ``I < J < K`` with all three differences connected."""
    return [TriangleTriple(ORDER, t) for t in _o_triangles(P)]


@lru_cache(maxsize=64)
def _c_triangles(P: Poset) -> tuple[tuple[int, int, int], ...]:
    return tuple(_graph_triangles(_c_edge_set(P)))


def c_triangles(P: Poset) -> list[TriangleTriple]:
    """Antichain triples with pairwise connected symmetric differences."""
    return [TriangleTriple(CHAIN, t) for t in _c_triangles(P)]


# -- exceptional edges and triangles ------------------------------------------

@lru_cache(maxsize=64)
def _e_star_o(P: Poset) -> frozenset[tuple[int, int]]:
    maxima = _maxima(P)
    c_set = _c_edge_set(P)
    return frozenset(
        (I, J) for I, J in _o_edge_set(P)
        if _pair(maxima[I], maxima[J]) not in c_set
    )


@lru_cache(maxsize=64)
def _e_star_c(P: Poset) -> frozenset[tuple[int, int]]:
    o_set = _o_edge_set(P)
    return frozenset(
        (A, B) for A, B in _c_edge_set(P)
        if _pair(down_closure(P, A), down_closure(P, B)) not in o_set
    )


def e_star_o(P: Poset) -> list[EdgePair]:
    """Order-polytope edges whose images under ``max`` are not chain-polytope edges."""
    return [EdgePair(ORDER, e) for e in sorted(_e_star_o(P))]


def e_star_c(P: Poset) -> list[EdgePair]:
    """Chain-polytope edges whose generated ideals are not order-polytope edges."""
    return [EdgePair(CHAIN, e) for e in sorted(_e_star_c(P))]


def _require_maximal_ranked(P: Poset) -> RankDecomposition:
    if not is_maximal_ranked(P):
        raise PreconditionError("poset is not maximal ranked")
    return rank_levels(P)


def e_star_o_characterized(P: Poset) -> list[EdgePair]:
    """``{(empty, J)}`` with ``J`` connected and at least two maximal elements.

    Valid for maximal ranked posets only.
    """
    _require_maximal_ranked(P)
    maxima = _maxima(P)
    return [
        EdgePair.of(ORDER, 0, J)
        for J in _ideals(P)
        if J and is_connected(P, J) and popcount(maxima[J]) >= 2
    ]


def e_star_c_characterized(P: Poset) -> list[EdgePair]:
    """``{(P_{l-1}, B)}`` with ``B`` a subset of ``P_l`` of size two or more.

    ``B = P_l`` is included.  Valid for maximal ranked posets only.
    """
    levels = _require_maximal_ranked(P).levels
    out = []
    for ell in range(1, len(levels)):
        members = elements(levels[ell])
        for size in range(2, len(members) + 1):
            for combo in itertools.combinations(members, size):
                B = sum(1 << i for i in combo)
                out.append(EdgePair.of(CHAIN, levels[ell - 1], B))
    return sorted(out)


def _touches(triangle: tuple[int, int, int], star: frozenset[tuple[int, int]]) -> bool:
    return any(side in star for side in itertools.combinations(triangle, 2))


@lru_cache(maxsize=64)
def _delta_star_o(P: Poset) -> tuple[tuple[int, int, int], ...]:
    star = _e_star_o(P)
    return tuple(t for t in _o_triangles(P) if _touches(t, star))


@lru_cache(maxsize=64)
def _delta_star_c(P: Poset) -> tuple[tuple[int, int, int], ...]:
    star = _e_star_c(P)
    return tuple(t for t in _c_triangles(P) if _touches(t, star))


def delta_star_o(P: Poset) -> list[TriangleTriple]:
    return [TriangleTriple(ORDER, t) for t in _delta_star_o(P)]


def delta_star_c(P: Poset) -> list[TriangleTriple]:
    return [TriangleTriple(CHAIN, t) for t in _delta_star_c(P)]


# -- the injection from exceptional O-triangles to exceptional C-triangles ------

def phi_case(P: Poset, t: TriangleTriple) -> int:
    """Which of the three branches of :func:`phi` applies to ``t``."""
    _, J, K = _validate_phi_input(P, t)
    levels = rank_levels(P)
    maxima = _maxima(P)
    if popcount(maxima[J]) >= 2:
        return 1
    j = levels.level_of(elements(maxima[J])[0])
    k = levels.level_of(elements(maxima[K])[0])
    return 2 if k - j != 1 else 3


def _validate_phi_input(P: Poset, t: TriangleTriple) -> tuple[int, int, int]:
    _require_maximal_ranked(P)
    if t.kind != ORDER or t.members not in set(_delta_star_o(P)):
        raise PreconditionError("triangle is not an exceptional order-polytope triangle")
    return t.members


def phi(P: Poset, t: TriangleTriple) -> TriangleTriple:
    """Map an exceptional O-triangle ``{empty, J, K}`` to an exceptional C-triangle.

    With ``max(J)`` in level ``j`` and ``max(K)`` in level ``k``:

    * ``|max J| >= 2``:            ``{P_{j-1}, max J, max K}``
    * ``|max J| = 1, k - j != 1``: ``{P_{k-1}, max J, max K}``
    * ``|max J| = 1, k - j = 1``:  ``{P_{k-1}, min(K - J), max K}``
    """
    I, J, K = _validate_phi_input(P, t)
    assert I == 0, "exceptional order triangles of a maximal ranked poset start at the empty ideal"
    levels = rank_levels(P)
    maxima = _maxima(P)
    max_j, max_k = maxima[J], maxima[K]
    j = levels.level_of(elements(max_j)[0])
    k = levels.level_of(elements(max_k)[0])
    if popcount(max_j) >= 2:
        assert j >= 1, "J is connected with two maximal elements, so j >= 1"
        return TriangleTriple.of(CHAIN, levels.levels[j - 1], max_j, max_k)
    if k - j != 1:
        return TriangleTriple.of(CHAIN, levels.levels[k - 1], max_j, max_k)
    return TriangleTriple.of(CHAIN, levels.levels[k - 1], min_of_set(P, K & ~J), max_k)


def x_witness_triples(P: Poset) -> list[TriangleTriple]:
    """Triples ``{P_{s-t}, P_{s-1}, P_s}`` with ``|P_s|, |P_{s-t}| >= 2``, ``t >= 2``."""
    levels = _require_maximal_ranked(P).levels
    sizes = [popcount(level) for level in levels]
    return [
        TriangleTriple.of(CHAIN, levels[s - t], levels[s - 1], levels[s])
        for s in range(2, len(levels))
        for t in range(2, s + 1)
        if sizes[s] >= 2 and sizes[s - t] >= 2
    ]


def excess_formula(levels: RankDecomposition | Sequence[int]) -> int:
    """Predicted surplus of chain-polytope triangles for a maximal ranked poset.

    Sum over ``2 <= s <= n``, ``2 <= t <= s`` of
    ``(2^|P_s| - |P_s| - 1) * (2^|P_{s-t}| - |P_{s-t}| - 1)`` written out as
    the binomial double sum over subset sizes ``m, l >= 2``.
    """
    sizes = levels.sizes if isinstance(levels, RankDecomposition) else tuple(levels)
    n = len(sizes) - 1
    total = 0
    for s in range(2, n + 1):
        for t in range(2, s + 1):
            for m in range(2, sizes[s] + 1):
                for ell in range(2, sizes[s - t] + 1):
                    total += comb(sizes[s], m) * comb(sizes[s - t], ell)
    return total


# -- report -------------------------------------------------------------------

@dataclass
class ComparisonReport:
    d: int
    levels: tuple[int, ...] | None
    f0_O: int
    f0_C: int
    f1_O: int
    f1_C: int
    tri_O: int
    tri_C: int
    estar_O_count: int
    estar_C_count: int
    dstar_O_count: int
    dstar_C_count: int
    has_x: bool
    formula_value: int | None
    equality_holds: bool
    maximal_ranked: bool = False
    oracle_consistent: bool | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.failures and self.oracle_consistent is not False

    def to_dict(self) -> dict:
        return asdict(self)


def compare(P: Poset) -> ComparisonReport:
    """Count vertices, edges, triangles and exceptional sets on both sides."""
    mr = is_maximal_ranked(P)
    try:
        level_sizes = rank_levels(P).sizes
    except NotGradedError:
        level_sizes = None
    report = ComparisonReport(
        d=P.d,
        levels=level_sizes,
        f0_O=len(_ideals(P)),
        f0_C=len(_antichains(P)),
        f1_O=len(_o_edge_set(P)),
        f1_C=len(_c_edge_set(P)),
        tri_O=len(_o_triangles(P)),
        tri_C=len(_c_triangles(P)),
        estar_O_count=len(_e_star_o(P)),
        estar_C_count=len(_e_star_c(P)),
        dstar_O_count=len(_delta_star_o(P)),
        dstar_C_count=len(_delta_star_c(P)),
        has_x=contains_x_subposet(P) is not None,
        formula_value=excess_formula(level_sizes) if mr else None,
        equality_holds=False,
        maximal_ranked=mr,
    )
    report.equality_holds = report.tri_O == report.tri_C
    report.failures = _report_failures(report)
    return report


def _report_failures(r: ComparisonReport) -> list[str]:
    checks = {
        "f0_equal": r.f0_O == r.f0_C,
        "f1_equal": r.f1_O == r.f1_C,
        "triangle_equality_lemma": r.tri_O - r.dstar_O_count == r.tri_C - r.dstar_C_count,
    }
    if r.maximal_ranked:
        checks["tri_O_le_tri_C"] = r.tri_O <= r.tri_C
        checks["equality_iff_no_x"] = r.equality_holds == (not r.has_x)
        checks["excess_formula"] = r.tri_C - r.tri_O == r.formula_value
    return [name for name, ok in checks.items() if not ok]
