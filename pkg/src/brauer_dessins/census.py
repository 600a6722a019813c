"""Exhaustive enumeration of small dessins and corpus-wide verification."""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from brauer_dessins import _accel
from brauer_dessins.algebra import (
    RelationKind,
    Socle,
    associativity_failures,
    centre_bruteforce,
    centre_dimension_formula,
    dimension_formula,
    non_formal_loops,
    presentation,
)
from brauer_dessins.dessin import Dessin, Passport, canonical_key, dual, new_dessin, oriented_dual, passport
from brauer_dessins.permutation import Permutation, orbits
from brauer_dessins.quiver import (
    arrows_correspond,
    check_face_decomposition,
    full_quiver,
    opposite,
    quiver_equal,
)

MAX_N = 7

# fields of the fingerprint that depend on the passport alone
PASSPORT_FIELDS = ("q0", "q1", "sigma_class_count", "sigma_class_lengths", "dim_algebra")


@dataclass(frozen=True)
class Fingerprint:
    q0: int
    q1: int
    sigma_class_count: int
    sigma_class_lengths: tuple[int, ...]
    dim_algebra: int
    dim_centre_formula: int
    loop_count: int

    def as_dict(self) -> dict:
        out = asdict(self)
        out["sigma_class_lengths"] = list(self.sigma_class_lengths)
        return out


def fingerprint(d: Dessin) -> Fingerprint:
    alg = presentation(d)
    lengths = tuple(sorted((len(c) for c in d.sigma.cycles() if len(c) >= 2), reverse=True))
    return Fingerprint(
        q0=len(alg.vertices),
        q1=len(alg.quiver.arrows),
        sigma_class_count=len(lengths),
        sigma_class_lengths=lengths,
        dim_algebra=dimension_formula(d),
        dim_centre_formula=centre_dimension_formula(d),
        loop_count=len(non_formal_loops(d)),
    )


def _cycle_type_rows(n: int) -> list[np.ndarray]:
    perms = _accel.all_permutations(n)
    groups = defaultdict(list)
    for k, p in enumerate(perms):
        groups[Permutation(tuple(int(x) + 1 for x in p)).cycle_type()].append(k)
    return [np.array(groups[t], dtype=np.int64) for t in sorted(groups)]


def _enumerate_slice(args):
    n, rows, backend = args
    return _accel.enumerate_transitive_pairs(n, backend=backend, rows=rows)


@lru_cache(maxsize=None)
def _enumerate(n: int, backend: Optional[str], workers: int):
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    if workers <= 1:
        reps, sizes = _accel.enumerate_transitive_pairs(n, backend=backend)
    else:
        jobs = [(n, rows, backend) for rows in _cycle_type_rows(n)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_enumerate_slice, jobs))
        reps = np.concatenate([p[0] for p in parts])
        sizes = np.concatenate([p[1] for p in parts])
        # slices come back in cycle-type order; restore lexicographic order
        order = sorted(range(len(reps)), key=lambda k: (tuple(reps[k, 0]), tuple(reps[k, 1])))
        reps, sizes = reps[order], sizes[order]
    dessins = tuple(
        new_dessin(n, Permutation(tuple(int(x) + 1 for x in s)), Permutation(tuple(int(x) + 1 for x in a)))
        for s, a in reps
    )
    return dessins, tuple(int(x) for x in sizes)


def enumerate_dessins(n: int, backend: Optional[str] = None, workers: int = 1) -> list[Dessin]:
    """One canonical representative per isomorphism class of dessins with n half-edges.

    Representatives are the canonical forms (lexicographically least
    relabellings), returned in increasing order.
    """
    return list(_enumerate(n, backend, workers)[0])


def class_sizes(n: int, backend: Optional[str] = None) -> list[int]:
    """Number of labelled triples in each class of :func:`enumerate_dessins`."""
    return list(_enumerate(n, backend, 1)[1])


def count_transitive_pairs(n: int) -> int:
    """Brute-force count of transitive pairs in S_n, independent of the kernels."""
    perms = [Permutation(tuple(p)) for p in itertools.permutations(range(1, n + 1))]
    return sum(1 for s in perms for a in perms if len(orbits(n, [s, a])) == 1)


def corpus(max_n: int = 6, **kw) -> list[Dessin]:
    return [d for n in range(1, max_n + 1) for d in enumerate_dessins(n, **kw)]


def group_by_passport(dessins: Iterable[Dessin]) -> dict[Passport, list[Dessin]]:
    groups: dict[Passport, list[Dessin]] = {}
    for d in dessins:
        groups.setdefault(passport(d), []).append(d)
    return groups


# ---------------------------------------------------------------------------
# verification


def relations_evaluate(d: Dessin) -> bool:
    """Type-one sides agree in the algebra; type-two and type-three vanish."""
    alg = presentation(d)
    for r in alg.relations:
        if r.kind is RelationKind.TYPE_ONE:
            lhs, rhs = (alg.evaluate_path(t) for t in r.terms)
            if lhs is None or lhs != rhs:
                return False
        elif alg.evaluate_path(r.terms[0]) is not None:
            return False
    return True


def identity_is_two_sided(d: Dessin) -> bool:
    alg = presentation(d)
    one = alg.identity
    return all(
        alg.multiply_elements(one, {x: 1}) == {x: 1} == alg.multiply_elements({x: 1}, one)
        for x in alg.basis
    )


def socles_and_identity_central(d: Dessin) -> bool:
    alg = presentation(d)
    elems = [alg.identity] + [{x: 1} for x in alg.basis if isinstance(x, Socle)]
    return all(alg.commutes_with_generators(e) for e in elems)


def phi_bijection(d: Dessin) -> dict[int, int]:
    """Arrow ``i`` of the oriented dual's quiver <-> arrow ``i^phi`` of the opposite quiver."""
    return {i: d.phi(i) for i in range(1, d.n + 1)}


def alpha_bijection(d: Dessin) -> dict[int, int]:
    return {i: d.alpha(i) for i in range(1, d.n + 1)}


def duality_checks(d: Dessin) -> dict[str, bool]:
    q = full_quiver(d)
    q_dual = full_quiver(dual(d))
    q_oriented = full_quiver(oriented_dual(d))
    q_op = opposite(q)
    return {
        "labelled_equal": quiver_equal(q_dual, q, "labelled", ignore_formal=True),
        "oriented_op_equal": quiver_equal(q_oriented, q_op, "unlabelled")
        and arrows_correspond(q_oriented, q_op, phi_bijection(d)),
        "oriented_op_alpha_bijection": arrows_correspond(q_oriented, q_op, alpha_bijection(d)),
    }


@dataclass
class CorpusReport:
    n: int
    dessin_count: int = 0
    checks: dict[str, list[int]] = field(default_factory=dict)
    centre_mismatches: list[dict] = field(default_factory=list)
    passport_groups: int = 0
    loop_count_varying_groups: int = 0
    alpha_bijection_holds: int = 0
    notes: list[str] = field(default_factory=list)

    def record(self, name: str, ok: bool) -> None:
        tally = self.checks.setdefault(name, [0, 0])
        tally[0 if ok else 1] += 1

    @property
    def ok(self) -> bool:
        return all(failed == 0 for _, failed in self.checks.values())

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "dessin_count": self.dessin_count,
            "ok": self.ok,
            "checks": {k: {"passed": v[0], "failed": v[1]} for k, v in sorted(self.checks.items())},
            "centre_mismatches": self.centre_mismatches,
            "passport_groups": self.passport_groups,
            "loop_count_varying_groups": self.loop_count_varying_groups,
            "alpha_bijection_holds": self.alpha_bijection_holds,
            "notes": self.notes,
        }


def verify_dessin(d: Dessin, report: CorpusReport, assoc_max_dim: int = 64, centre_max_dim: int = 512) -> None:
    report.record("validation", new_dessin(d.n, d.sigma, d.alpha) == d)
    report.record("face_decomposition", check_face_decomposition(d))
    dc = duality_checks(d)
    report.record("dual_labelled_equal", dc["labelled_equal"])
    report.record("oriented_dual_opposite", dc["oriented_op_equal"])
    report.alpha_bijection_holds += dc["oriented_op_alpha_bijection"]
    alg = presentation(d)
    report.record("basis_count", alg.dim == dimension_formula(d))
    report.record("relations_evaluate", relations_evaluate(d))
    report.record("identity_two_sided", identity_is_two_sided(d))
    report.record("socles_central", socles_and_identity_central(d))
    if alg.dim <= assoc_max_dim:
        report.record("associativity", associativity_failures(d) == 0)
    if alg.dim <= centre_max_dim:
        brute = centre_bruteforce(d, max_dim=centre_max_dim).dim
        socles = sum(isinstance(x, Socle) for x in alg.basis)
        report.record("centre_lower_bound", brute >= 1 + socles)
        formula = centre_dimension_formula(d)
        if brute != formula:
            report.centre_mismatches.append(
                {
                    "sigma": d.sigma.cycle_string(),
                    "alpha": d.alpha.cycle_string(),
                    "formula": formula,
                    "bruteforce": brute,
                }
            )


def verify_corpus(n: int = 6, backend: Optional[str] = None, assoc_max_dim: int = 64) -> CorpusReport:
    """Run every structural check on the dessins with at most n half-edges."""
    report = CorpusReport(n)
    dessins = corpus(n, backend=backend)
    report.dessin_count = len(dessins)
    keys = {(d.n, canonical_key(d)) for d in dessins}
    for d in dessins:
        verify_dessin(d, report, assoc_max_dim=assoc_max_dim)
        report.record("dual_in_corpus", (d.n, canonical_key(dual(d), backend=backend)) in keys)
    groups = group_by_passport(dessins)
    report.passport_groups = len(groups)
    for members in groups.values():
        fps = [fingerprint(d) for d in members]
        report.record(
            "passport_invariants",
            all(len({getattr(f, name) for f in fps}) == 1 for name in PASSPORT_FIELDS),
        )
        if len({f.loop_count for f in fps}) > 1:
            report.loop_count_varying_groups += 1
    report.notes.append(
        "dual quiver equals the original quiver label by label; the opposite quiver "
        "arises for the orientation-reversed dual, witnessed by arrow i -> i^phi"
    )
    return report


def passport_loop_statistics(dessins: Iterable[Dessin]) -> dict[Passport, Counter]:
    return {p: Counter(fingerprint(d).loop_count for d in ms) for p, ms in group_by_passport(dessins).items()}
