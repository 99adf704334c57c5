"""Finite posets on ``0..d-1`` with subsets encoded as integer bitmasks.

Every subset of elements (ideals, antichains, differences, levels) is an
``int`` whose bit ``i`` is set iff element ``i`` is a member.  Equal subsets
therefore have equal representations, and enumeration order is simply
ascending integer order.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_ELEMENTS = 64
DEFAULT_ENUM_CAP = 1_000_000

ElementSet = int


class PosetError(ValueError):
    """Invalid poset input (cycle, index out of range, capacity)."""


class NotGradedError(PosetError):
    pass


class PreconditionError(ValueError):
    """An argument violates a documented precondition."""


class EnumerationTooLarge(RuntimeError):
    pass


def enum_cap() -> int:
    """Enumeration cap, overridable through ``OCPKIT_MAX_ENUM``."""
    value = os.environ.get("OCPKIT_MAX_ENUM")
    return int(value) if value else DEFAULT_ENUM_CAP


def bit(i: int) -> int:
    return 1 << i


def elements(mask: ElementSet) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(items: Iterable[int]) -> ElementSet:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def popcount(mask: ElementSet) -> int:
    return bin(mask).count("1")


class XWitness(NamedTuple):
    """Five elements with a||b, x||y and a, b < c < x, y."""

    a: int
    b: int
    c: int
    x: int
    y: int


@dataclass(frozen=True)
class RankDecomposition:
    levels: tuple[ElementSet, ...]

    @property
    def n(self) -> int:
        return len(self.levels) - 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(popcount(level) for level in self.levels)

    def level_of(self, i: int) -> int:
        for k, level in enumerate(self.levels):
            if level >> i & 1:
                return k
        raise KeyError(i)


@dataclass(frozen=True)
class Poset:
    """A finite poset; build instances with :func:`build_poset`.

    ``down[i]`` is the mask of elements ``<= i`` and ``up[i]`` the mask of
    elements ``>= i`` (both include ``i``).
    """

    d: int
    covers: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = None
    down: tuple[int, ...] = field(default=(), repr=False, compare=False)
    up: tuple[int, ...] = field(default=(), repr=False, compare=False)

    @property
    def universe(self) -> ElementSet:
        return (1 << self.d) - 1

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def comparable_mask(self, i: int) -> ElementSet:
        return self.down[i] | self.up[i]

    def leq_pairs(self) -> set[tuple[int, int]]:
        return {(i, j) for j in range(self.d) for i in elements(self.down[j])}

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def format_set(self, mask: ElementSet) -> str:
        return "{" + ",".join(self.label(i) for i in elements(mask)) + "}"

    def minimal(self) -> ElementSet:
        return to_mask(i for i in range(self.d) if self.down[i] == bit(i))

    def maximal(self) -> ElementSet:
        return to_mask(i for i in range(self.d) if self.up[i] == bit(i))

    def __len__(self) -> int:
        return self.d


def build_poset(
    d: int,
    covers: Iterable[Sequence[int]],
    labels: Sequence[str] | None = None,
) -> Poset:
    """Build a poset from order pairs ``(i, j)`` meaning ``i < j``.

    The pairs need not be a transitive reduction; redundant pairs are
    dropped so that ``covers`` of the result is exactly the cover relation.
    """
    if d < 1:
        raise PosetError("a poset needs at least one element")
    if d > MAX_ELEMENTS:
        raise PosetError(f"at most {MAX_ELEMENTS} elements are supported, got {d}")
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != d:
            raise PosetError(f"expected {d} labels, got {len(labels)}")

    succ = [0] * d
    for pair in covers:
        i, j = (int(v) for v in pair)
        if not (0 <= i < d and 0 <= j < d):
            raise PosetError(f"index out of range in pair ({i}, {j})")
        if i == j:
            raise PosetError("not a partial order: pair ({0}, {0}) is a loop".format(i))
        succ[i] |= bit(j)

    # reachability by iterated DFS; d <= 64 keeps this cheap
    up = []
    for i in range(d):
        seen = bit(i)
        stack = [i]
        while stack:
            u = stack.pop()
            new = succ[u] & ~seen
            seen |= new
            stack.extend(elements(new))
        up.append(seen)
    for i in range(d):
        for j in elements(up[i] & ~bit(i)):
            if up[j] >> i & 1:
                raise PosetError("not a partial order: cycle through elements {} and {}".format(i, j))
    down = [0] * d
    for i in range(d):
        for j in elements(up[i]):
            down[j] |= bit(i)

    reduced = set()
    for i in range(d):
        strictly_above = up[i] & ~bit(i)
        for j in elements(strictly_above):
            between = strictly_above & down[j] & ~bit(j)
            if not between:
                reduced.add((i, j))
    return Poset(d, frozenset(reduced), labels, tuple(down), tuple(up))


def comparability_graph(P: Poset) -> set[tuple[int, int]]:
    """Edges ``(i, j)``, ``i < j`` as integers, joining comparable elements."""
    return {
        (i, j)
        for i in range(P.d)
        for j in range(i + 1, P.d)
        if P.comparable(i, j)
    }


def is_connected(P: Poset, S: ElementSet) -> bool:
    """Whether ``S`` induces a connected subgraph of the comparability graph.

    The empty set is not connected.
    """
    if not S:
        return False
    seen = frontier = S & -S
    while frontier:
        reach = 0
        for i in elements(frontier):
            reach |= P.comparable_mask(i)
        frontier = reach & S & ~seen
        seen |= frontier
    return seen == S


def linear_extension(P: Poset) -> list[int]:
    return sorted(range(P.d), key=lambda i: (popcount(P.down[i]), i))


def enumerate_ideals(P: Poset, cap: int | None = None) -> list[ElementSet]:
    """All down-closed subsets, ascending by bitmask."""
    cap = enum_cap() if cap is None else cap
    order = linear_extension(P)
    below = [P.down[i] & ~bit(i) for i in range(P.d)]
    out: list[int] = []

    # every branch ends in an ideal, so the walk costs O(d) per output
    def walk(k: int, current: int) -> None:
        if k == len(order):
            out.append(current)
            if len(out) > cap:
                raise EnumerationTooLarge(f"more than {cap} ideals")
            return
        e = order[k]
        walk(k + 1, current)
        if below[e] & ~current == 0:
            walk(k + 1, current | bit(e))

    walk(0, 0)
    out.sort()
    return out


def enumerate_antichains(P: Poset, cap: int | None = None) -> list[ElementSet]:
    """All antichains, ascending by bitmask."""
    cap = enum_cap() if cap is None else cap
    out: list[int] = []

    def walk(e: int, current: int, blocked: int) -> None:
        if e == P.d:
            out.append(current)
            if len(out) > cap:
                raise EnumerationTooLarge(f"more than {cap} antichains")
            return
        walk(e + 1, current, blocked)
        if not blocked >> e & 1:
            walk(e + 1, current | bit(e), blocked | P.comparable_mask(e))

    walk(0, 0, 0)
    out.sort()
    return out


def is_ideal(P: Poset, S: ElementSet) -> bool:
    return all(P.down[i] & ~S == 0 for i in elements(S))


def is_antichain(P: Poset, S: ElementSet) -> bool:
    return all(P.comparable_mask(i) & S == bit(i) for i in elements(S))


def max_of_ideal(P: Poset, I: ElementSet) -> ElementSet:
    if not is_ideal(P, I):
        raise PreconditionError(f"{P.format_set(I)} is not an ideal")
    return to_mask(i for i in elements(I) if P.up[i] & I == bit(i))


def min_of_set(P: Poset, S: ElementSet) -> ElementSet:
    """Minimal elements of an arbitrary subset."""
    return to_mask(i for i in elements(S) if P.down[i] & S == bit(i))


def ideal_of_antichain(P: Poset, A: ElementSet) -> ElementSet:
    if not is_antichain(P, A):
        raise PreconditionError(f"{P.format_set(A)} is not an antichain")
    return down_closure(P, A)


def down_closure(P: Poset, S: ElementSet) -> ElementSet:
    out = 0
    for i in elements(S):
        out |= P.down[i]
    return out


def heights(P: Poset) -> list[int]:
    """Length of the longest chain ending at each element."""
    h = [0] * P.d
    for e in linear_extension(P):
        strictly_below = P.down[e] & ~bit(e)
        h[e] = max((h[i] + 1 for i in elements(strictly_below)), default=0)
    return h


def is_graded(P: Poset) -> bool:
    try:
        rank_levels(P)
    except NotGradedError:
        return False
    return True


def rank_levels(P: Poset) -> RankDecomposition:
    """Split a graded poset into its rank levels ``P_0, ..., P_n``.

    All maximal chains have equal length iff every cover step raises the
    height by exactly one and all maximal elements share one height.
    """
    h = heights(P)
    for i, j in P.covers:
        if h[j] != h[i] + 1:
            raise NotGradedError(
                f"not graded: cover {P.label(i)} < {P.label(j)} skips a rank"
            )
    tops = {h[i] for i in elements(P.maximal())}
    if len(tops) != 1:
        raise NotGradedError("not graded: maximal chains have different lengths")
    n = tops.pop()
    levels = [0] * (n + 1)
    for i in range(P.d):
        levels[h[i]] |= bit(i)
    return RankDecomposition(tuple(levels))


def is_maximal_ranked(P: Poset) -> bool:
    try:
        levels = rank_levels(P).levels
    except NotGradedError:
        return False
    for lo, hi in itertools.combinations(range(len(levels)), 2):
        for i in elements(levels[lo]):
            if P.up[i] & levels[hi] != levels[hi]:
                return False
    return True


def ordinal_sum_of_antichains(level_sizes: Sequence[int], labels: bool = False) -> Poset:
    """Maximal ranked poset whose rank levels have the given sizes.

    Elements are numbered level by level, bottom first.
    """
    sizes = [int(s) for s in level_sizes]
    if not sizes:
        raise PosetError("need at least one level")
    if any(s < 1 for s in sizes):
        raise PosetError(f"level sizes must be positive, got {sizes}")
    starts = list(itertools.accumulate([0] + sizes))
    d = starts[-1]
    covers = [
        (i, j)
        for k in range(len(sizes) - 1)
        for i in range(starts[k], starts[k + 1])
        for j in range(starts[k + 1], starts[k + 2])
    ]
    names = None
    if labels and d <= 26:
        names = [chr(ord("a") + i) for i in range(d)]
    return build_poset(d, covers, names)


def _x_witness_at(P: Poset, c: int) -> XWitness | None:
    below = elements(P.down[c] & ~bit(c))
    above = elements(P.up[c] & ~bit(c))
    lower = next(((a, b) for a, b in itertools.combinations(below, 2) if not P.comparable(a, b)), None)
    if lower is None:
        return None
    upper = next(((x, y) for x, y in itertools.combinations(above, 2) if not P.comparable(x, y)), None)
    if upper is None:
        return None
    return XWitness(lower[0], lower[1], c, upper[0], upper[1])


def contains_x_subposet(P: Poset) -> XWitness | None:
    """First X-shaped configuration, scanning the middle element in index order."""
    if P.d < 5:
        return None
    for c in range(P.d):
        w = _x_witness_at(P, c)
        if w is not None:
            return w
    return None


def has_x_by_levels(sizes: Sequence[int]) -> bool:
    """X test for a maximal ranked poset from its level sizes alone.

    Needs a level ``s`` and a level at most ``s - 2`` that both have two or
    more elements.
    """
    return any(
        sizes[s] >= 2 and any(sizes[t] >= 2 for t in range(s - 1))
        for s in range(2, len(sizes))
    )


def maximal_chains(P: Poset) -> list[list[int]]:
    succ: list[list[int]] = [[] for _ in range(P.d)]
    for i, j in sorted(P.covers):
        succ[i].append(j)
    chains: list[list[int]] = []

    def extend(chain: list[int]) -> None:
        nxt = succ[chain[-1]]
        if not nxt:
            chains.append(list(chain))
            return
        for j in nxt:
            chain.append(j)
            extend(chain)
            chain.pop()

    for m in elements(P.minimal()):
        extend([m])
    return chains


def random_poset(d: int, edge_probability: float, seed: int) -> Poset:
    """Random DAG on a shuffled linear order, closed transitively."""
    if not 0.0 <= edge_probability <= 1.0:
        raise PreconditionError("edge_probability must lie in [0, 1]")
    rng = random.Random(seed)
    order = list(range(d))
    rng.shuffle(order)
    pairs = [
        (order[a], order[b])
        for a in range(d)
        for b in range(a + 1, d)
        if rng.random() < edge_probability
    ]
    return build_poset(d, pairs)


def iter_compositions(max_size: int) -> Iterator[tuple[int, ...]]:
    """All tuples of positive integers with sum at most ``max_size``."""
    for total in range(1, max_size + 1):
        for cuts in range(total):
            for pos in itertools.combinations(range(1, total), cuts):
                bounds = (0,) + pos + (total,)
                yield tuple(b - a for a, b in zip(bounds, bounds[1:]))
