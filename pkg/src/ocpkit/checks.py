"""Cross-checks run by ``verify`` and ``sweep``."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import faces
from .oracle import (
    DEFAULT_MAX_PAIRS,
    DEFAULT_MAX_TRIPLES,
    brute_edges,
    brute_triangles,
    chain_polytope_model,
    order_polytope_model,
    rho,
)
from .poset import (
    Poset,
    contains_x_subposet,
    enumerate_antichains,
    enumerate_ideals,
    has_x_by_levels,
    rank_levels,
)


@dataclass
class Agreement:
    name: str
    lemma_count: int
    oracle_count: int
    missing_from_oracle: list = field(default_factory=list)
    missing_from_lemma: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing_from_oracle and not self.missing_from_lemma

    def witness(self) -> str:
        if self.missing_from_oracle:
            return f"{self.name}: lemma-only {self.missing_from_oracle[0]}"
        if self.missing_from_lemma:
            return f"{self.name}: oracle-only {self.missing_from_lemma[0]}"
        return ""


def _agree(name: str, lemma: set, oracle: set) -> Agreement:
    return Agreement(
        name,
        len(lemma),
        len(oracle),
        sorted(lemma - oracle),
        sorted(oracle - lemma),
    )


def oracle_agreement(
    P: Poset,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_triples: int = DEFAULT_MAX_TRIPLES,
) -> list[Agreement]:
    """Compare lemma-based edges/triangles with geometric ones on both polytopes."""
    d = P.d

    def image(sets):
        return frozenset(rho(W, d) for W in sets)

    out = []
    for kind, model, edges, triangles in (
        ("O", order_polytope_model(P), faces.o_edges(P), faces.o_triangles(P)),
        ("C", chain_polytope_model(P), faces.c_edges(P), faces.c_triangles(P)),
    ):
        out.append(_agree(
            f"{kind}-edges",
            {image(e.endpoints) for e in edges},
            {frozenset(e) for e in brute_edges(model, max_pairs)},
        ))
        out.append(_agree(
            f"{kind}-triangles",
            {image(t.members) for t in triangles},
            {frozenset(t) for t in brute_triangles(model, max_pairs, max_triples)},
        ))
    # frozensets do not sort; order witnesses by their sorted tuples
    for a in out:
        a.missing_from_oracle = sorted(tuple(sorted(s)) for s in a.missing_from_oracle)
        a.missing_from_lemma = sorted(tuple(sorted(s)) for s in a.missing_from_lemma)
    return out


def poset_checks(P: Poset) -> dict[str, bool]:
    """Every identity that must hold for ``P``; maximal ranked posets get more."""
    report = faces.compare(P)
    checks = {
        "ideals_eq_antichains": len(enumerate_ideals(P)) == len(enumerate_antichains(P)),
        "f1_equal": report.f1_O == report.f1_C,
        "triangle_equality_lemma": (
            report.tri_O - report.dstar_O_count == report.tri_C - report.dstar_C_count
        ),
    }
    if not report.maximal_ranked:
        return checks

    sizes = rank_levels(P).sizes
    has_x = contains_x_subposet(P) is not None
    checks["x_fast_path"] = has_x == has_x_by_levels(sizes)
    checks["tri_O_le_tri_C"] = report.tri_O <= report.tri_C
    checks["equality_iff_no_x"] = (report.tri_O == report.tri_C) == (not has_x)
    checks["excess_formula"] = report.tri_C - report.tri_O == faces.excess_formula(sizes)
    checks["e_star_o_characterization"] = faces.e_star_o(P) == faces.e_star_o_characterized(P)
    checks["e_star_c_characterization"] = faces.e_star_c(P) == faces.e_star_c_characterized(P)

    dstar_c = set(faces.delta_star_c(P))
    images = [faces.phi(P, t) for t in faces.delta_star_o(P)]
    checks["phi_into_delta_star_c"] = all(t in dstar_c for t in images)
    checks["phi_injective"] = len(set(images)) == len(images)
    witnesses = faces.x_witness_triples(P)
    image_set = set(images)
    checks["phi_misses_x_witness"] = all(
        w in dstar_c and w not in image_set for w in witnesses
    ) and (bool(witnesses) == has_x)
    return checks

