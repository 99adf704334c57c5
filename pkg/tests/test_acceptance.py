"""Exit criteria; every check is exact."""

import json
import time

import pytest

from ocpkit import faces
from ocpkit.checks import oracle_agreement, poset_checks
from ocpkit.cli import main
from ocpkit.poset import (
    contains_x_subposet,
    enumerate_antichains,
    enumerate_ideals,
    iter_compositions,
    ordinal_sum_of_antichains,
    random_poset,
)
from ocpkit.sweep import random_family

pytestmark = pytest.mark.acceptance

SWEEP_SIZE = 8


@pytest.fixture(scope="module")
def level_posets():
    return [(c, ordinal_sum_of_antichains(c)) for c in iter_compositions(SWEEP_SIZE)]


@pytest.fixture(scope="module")
def level_checks(level_posets):
    return {c: poset_checks(P) for c, P in level_posets}


@pytest.fixture(scope="module")
def random_posets():
    return [P for _, P in random_family(7, 500, base_seed=0)]


def _failures(checks, names):
    return [c for c, ch in checks.items() if not all(ch[n] for n in names)]


def test_x_poset_golden_run(tmp_path, capsys, criterion):
    start = time.perf_counter()
    path = tmp_path / "x.json"
    assert main(["gen", "--levels", "2,1,2", "--out", str(path)]) == 0
    code = main(["analyze", str(path), "--format", "json"])
    elapsed = time.perf_counter() - start
    r = json.loads(capsys.readouterr().out)
    got = (r["f0_O"], r["f0_C"], r["f1_O"], r["f1_C"], r["tri_O"], r["tri_C"],
           r["estar_O_count"], r["estar_C_count"], r["dstar_O_count"], r["dstar_C_count"],
           r["formula_value"], r["has_x"], r["equality_holds"])
    want = (8, 8, 24, 24, 32, 33, 1, 1, 4, 5, 1, True, False)
    ok = criterion(1, "X-poset golden run", code == 0 and got == want and elapsed < 1.0,
                   f"{elapsed:.3f}s")
    assert ok, (got, elapsed)


def test_oracle_equivalence(level_posets, criterion):
    start = time.perf_counter()
    family = [(str(c), P) for c, P in level_posets]
    family += [(f"rand{s}", random_poset(1 + s % 6, (0.2, 0.4, 0.6, 0.8)[s % 4], 1000 + s))
               for s in range(120)]
    bad = []
    for name, P in family:
        for a in oracle_agreement(P):
            if not a.ok:
                bad.append(f"{name} {a.witness()}")
    elapsed = time.perf_counter() - start
    ok = criterion(2, "lemma sets equal oracle sets on both polytopes", not bad and elapsed < 300,
                   f"{len(family)} posets, {elapsed:.1f}s")
    assert ok, bad[:5]


def test_main_theorem(level_checks, criterion):
    bad = _failures(level_checks, ["tri_O_le_tri_C", "equality_iff_no_x", "x_fast_path"])
    ok = criterion(3, "tri_O <= tri_C, equality iff no X", not bad, f"{len(level_checks)} compositions")
    assert ok, bad[:5]


def test_excess_formula(level_posets, criterion):
    bad = []
    for c, P in level_posets:
        r = faces.compare(P)
        if r.tri_C - r.tri_O != faces.excess_formula(c):
            bad.append((c, r.tri_C - r.tri_O, faces.excess_formula(c)))
    ok = criterion(4, "tri_C - tri_O equals the excess formula", not bad)
    assert ok, bad[:5]


def test_triangle_equality_lemma(random_posets, criterion):
    assert len(random_posets) >= 500 and max(P.d for P in random_posets) <= 7
    bad = [P for P in random_posets if not poset_checks(P)["triangle_equality_lemma"]]
    ok = criterion(5, "tri_O - |D*_O| = tri_C - |D*_C| on random posets", not bad,
                   f"{len(random_posets)} posets")
    assert ok


def test_phi_contract(level_checks, criterion):
    bad = _failures(level_checks, ["phi_into_delta_star_c", "phi_injective", "phi_misses_x_witness"])
    with_x = sum(1 for c, _ in level_checks.items()
                 if contains_x_subposet(ordinal_sum_of_antichains(c)) is not None)
    ok = criterion(6, "phi injective into D*_C, misses X witnesses", not bad,
                   f"{with_x} compositions contain X")
    assert ok, bad[:5]


def test_stanley_identities(level_posets, random_posets, criterion):
    bad = []
    for P in [P for _, P in level_posets] + random_posets:
        if len(enumerate_ideals(P)) != len(enumerate_antichains(P)):
            bad.append(P)
        elif len(faces.o_edges(P)) != len(faces.c_edges(P)):
            bad.append(P)
    ok = criterion(7, "#ideals = #antichains and f1(O) = f1(C)", not bad)
    assert ok


def test_exceptional_edge_characterizations(level_checks, criterion):
    bad = _failures(level_checks, ["e_star_o_characterization", "e_star_c_characterization"])
    ok = criterion(8, "E* definitions equal their characterizations", not bad)
    assert ok, bad[:5]
