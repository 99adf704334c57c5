import itertools

import pytest
from hypothesis import strategies as st

from ocpkit.poset import build_poset, elements, is_connected, ordinal_sum_of_antichains


@pytest.fixture
def xposet():
    """a, b < c < d, e with elements numbered a..e = 0..4."""
    return ordinal_sum_of_antichains((2, 1, 2), labels=True)


def chain(n):
    return build_poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n):
    return build_poset(n, [])


@st.composite
def posets(draw, max_d=6):
    """Random posets: pairs i < j (as integers) guarantee acyclicity."""
    d = draw(st.integers(1, max_d))
    pairs = list(itertools.combinations(range(d), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    perm = draw(st.permutations(range(d)))
    return build_poset(d, [(perm[i], perm[j]) for i, j in chosen])


# Brute-force references: scan all 2^d subsets, test definitions directly.

def brute_ideals(P):
    return [S for S in range(1 << P.d)
            if all(S >> j & 1 for i in elements(S) for j in range(P.d) if P.leq(j, i))]


def brute_antichains(P):
    return [S for S in range(1 << P.d)
            if all(not P.comparable(i, j) for i, j in itertools.combinations(elements(S), 2))]


def brute_o_triangles(P):
    ideals = brute_ideals(P)
    ok = lambda S: is_connected(P, S)
    return {
        (I, J, K)
        for I, J, K in itertools.combinations(ideals, 3)
        if I & ~J == 0 and J & ~K == 0 and ok(J & ~I) and ok(K & ~J) and ok(K & ~I)
    }


def brute_c_triangles(P):
    ok = lambda S: is_connected(P, S)
    return {
        (A, B, C)
        for A, B, C in itertools.combinations(brute_antichains(P), 3)
        if ok(A ^ B) and ok(B ^ C) and ok(A ^ C)
    }


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one acceptance line; returns the recorded verdict."""
    def record(number, title, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
