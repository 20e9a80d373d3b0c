"""Sampling census of the Grassmannian strata of an arrangement.

Each sampled subspace U gets three labels computed independently:

* the flat of L(A^(k)) whose relative interior holds its Plücker vector,
* the matroid of the restricted normals (fingerprinted by its bases),
* the Schubert symbols of U along every maximal chain of L(A).

The census checks that the three labelings partition the samples the same
way, and that invariants decrease weakly along the order of L(A^(k)).
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .adjoint import AdjointArrangement, k_adjoint
from .arrangement import (
    DEFAULT_CHAIN_CAP,
    Arrangement,
    Flag,
    Flat,
    IntersectionLattice,
    build_lattice,
    maximal_chains,
)
from .errors import ChainBudgetExceeded, RangeError
from .grassmann import (
    DEFAULT_BOUND,
    SchubertSignature,
    Subspace,
    l_lower,
    locate_stratum,
    plucker,
    random_subspace,
    refined_signature,
)
from .linalg import format_rational
from .matroid import (
    MatroidInvariants,
    fingerprint,
    invariants,
    matroid_of_restriction,
    nbc_counts,
    restricted_matroid,
)

log = logging.getLogger(__name__)


@dataclass
class SampleLabels:
    index: int
    subspace: Subspace
    stratum: int
    matroid: tuple
    signature: SchubertSignature | None
    lower: frozenset
    invariants: MatroidInvariants


@dataclass
class StratumRecord:
    stratum: int
    stratum_flat: Flat
    matroid: tuple
    signature: SchubertSignature | None
    lower: frozenset
    invariants: MatroidInvariants
    representatives: list[int] = field(default_factory=list)


@dataclass
class CensusReport:
    arrangement: Arrangement
    k: int
    sample_count: int
    seed: int
    bound: int
    total_strata: int
    strata: list[StratumRecord]
    samples: list[SampleLabels]
    violations: list[dict]
    warnings: list[str]
    comparable_pairs: list[tuple[int, int]] = field(default_factory=list)

    @property
    def coverage(self) -> tuple[int, int]:
        return len(self.strata), self.total_strata


@dataclass(eq=False)
class Setting:
    """Everything derived from (A, k) once and shared by all samples."""

    arrangement: Arrangement
    k: int
    lattice: IntersectionLattice
    adjoint: AdjointArrangement
    adjoint_lattice: IntersectionLattice
    chains: list[Flag] | None
    warnings: list[str]

    @classmethod
    def build(cls, a: Arrangement, k: int, chain_cap: int = DEFAULT_CHAIN_CAP) -> Setting:
        if not 0 < k < a.dim:
            raise RangeError(f"k={k} outside 1..{a.dim - 1}")
        lat = build_lattice(a)
        adj = k_adjoint(a, k, lat)
        warnings = []
        try:
            chains = maximal_chains(lat, chain_cap)
        except ChainBudgetExceeded as exc:
            chains = None
            warnings.append(f"Schubert labels skipped: {exc}; comparing two labelings only")
        return cls(a, k, lat, adj, build_lattice(adj.base), chains, warnings)

    def label(self, index: int, u: Subspace, order: Sequence[int] | None = None) -> SampleLabels:
        p = locate_stratum(u, self.adjoint, self.adjoint_lattice)
        m = matroid_of_restriction(self.arrangement, u)
        sig = refined_signature(u, self.chains) if self.chains is not None else None
        lower = frozenset(x.contains for x in l_lower(u, self.lattice))
        inv = invariants(m, order, restricted=restricted_matroid(self.arrangement, u))
        return SampleLabels(
            index,
            u,
            self.adjoint_lattice.index_of(p.contains),
            fingerprint(m),
            sig,
            lower,
            inv,
        )


def _partition(labels: Sequence) -> frozenset[frozenset[int]]:
    groups: dict = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, set()).add(i)
    return frozenset(frozenset(g) for g in groups.values())


def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream per sample index, so results do not depend on batching."""
    return np.random.default_rng([seed, index])


def classify_samples(
    a: Arrangement,
    k: int,
    count: int,
    seed: int,
    bound: int = DEFAULT_BOUND,
    *,
    chain_cap: int = DEFAULT_CHAIN_CAP,
    extra: Sequence[Subspace] = (),
    setting: Setting | None = None,
) -> CensusReport:
    """Draw ``count`` subspaces, label them three ways and compare the partitions.

    ``extra`` subspaces are labelled after the random ones.
    """
    setting = setting or Setting.build(a, k, chain_cap)
    subspaces = [random_subspace(k, a.dim, bound, sample_rng(seed, i)) for i in range(count)]
    subspaces += list(extra)
    samples = [setting.label(i, u) for i, u in enumerate(subspaces)]
    violations: list[dict] = []

    by_stratum = _partition([s.stratum for s in samples])
    by_matroid = _partition([s.matroid for s in samples])
    if by_stratum != by_matroid:
        violations.append({"kind": "partition", "labels": ["stratum", "matroid"]})
    if setting.chains is not None:
        by_signature = _partition([s.signature for s in samples])
        if by_stratum != by_signature:
            violations.append({"kind": "partition", "labels": ["stratum", "signature"]})

    # L^U must be exactly the X whose adjoint hyperplane contains the stratum
    for s in samples:
        p = setting.adjoint_lattice.flats[s.stratum]
        predicted = frozenset(
            h.source.contains
            for i, h in enumerate(setting.adjoint.hyperplanes)
            if i not in p.contains
        )
        if predicted != s.lower:
            violations.append({"kind": "lower-set", "sample": s.index})

    records: dict[int, StratumRecord] = {}
    for s in samples:
        rec = records.get(s.stratum)
        if rec is None:
            records[s.stratum] = StratumRecord(
                s.stratum,
                setting.adjoint_lattice.flats[s.stratum],
                s.matroid,
                s.signature,
                s.lower,
                s.invariants,
                [s.index],
            )
            continue
        for name in ("matroid", "signature", "lower", "invariants"):
            if getattr(rec, name) != getattr(s, name):
                violations.append(
                    {"kind": "record-conflict", "field": name, "stratum": s.stratum, "sample": s.index}
                )
        rec.representatives.append(s.index)

    strata = [records[i] for i in sorted(records)]
    report = CensusReport(
        a,
        k,
        count,
        seed,
        bound,
        len(setting.adjoint_lattice.flats),
        strata,
        samples,
        violations,
        list(setting.warnings),
    )
    report.comparable_pairs = comparable_pairs(report, setting.adjoint_lattice)
    log.debug("census: %d samples, %d strata realized", len(samples), len(strata))
    return report


def comparable_pairs(report: CensusReport, lat: IntersectionLattice) -> list[tuple[int, int]]:
    """Pairs (i, j) of record positions with P_i <= P_j, equal pairs included."""
    out = []
    for i, r1 in enumerate(report.strata):
        for j, r2 in enumerate(report.strata):
            if lat.leq(r1.stratum, r2.stratum):
                out.append((i, j))
    return out


def verify_antimonotonicity(report: CensusReport, pairs: Sequence[tuple[int, int]] | None = None) -> list[dict]:
    """For P_1 <= P_2, every I_i and |w_i| of U_1 must dominate those of U_2.

    Also compares NBC counts, which carry the same information on loop-free
    matroids and vanish otherwise.
    """
    pairs = report.comparable_pairs if pairs is None else pairs
    out = []
    for i, j in pairs:
        inv1 = report.strata[i].invariants
        inv2 = report.strata[j].invariants
        checks = {
            "I": (inv1.independence_numbers, inv2.independence_numbers),
            "|w|": (inv1.signless_whitney(), inv2.signless_whitney()),
            "nbc": (inv1.nbc_counts, inv2.nbc_counts),
        }
        for name, (hi, lo) in checks.items():
            for pos, (x, y) in enumerate(zip(hi, lo)):
                if x < y:
                    out.append({"kind": name, "pair": [i, j], "index": pos, "values": [x, y]})
    return out


def verify_lower_set_inclusion(report: CensusReport, pairs: Sequence[tuple[int, int]] | None = None) -> list[dict]:
    """For P_1 <= P_2 the complementary flats of U_2 are complementary to U_1."""
    pairs = report.comparable_pairs if pairs is None else pairs
    out = []
    for i, j in pairs:
        if not report.strata[j].lower <= report.strata[i].lower:
            out.append({"kind": "lower-inclusion", "pair": [i, j]})
    return out


def verify_nbc_theorem(report: CensusReport, orders: Sequence[Sequence[int] | None] = (None,)) -> list[dict]:
    """|w_i| equals the NBC count for every loop-free realized matroid and every order."""
    out = []
    for idx, rec in enumerate(report.strata):
        if rec.invariants.loops:
            continue
        m = matroid_of_restriction(report.arrangement, report.samples[rec.representatives[0]].subspace)
        target = rec.invariants.signless_whitney()
        for order in orders:
            counts = nbc_counts(m, order)
            if counts != target:
                out.append({"kind": "nbc", "stratum": idx, "order": None if order is None else list(order),
                            "nbc": list(counts), "w": list(target)})
    return out


def _subset_list(s) -> list[int]:
    return [i + 1 for i in sorted(s)]


def report_to_dict(report: CensusReport, *, include_pairs: bool = True) -> dict:
    """JSON-ready dict; hyperplane and ground-set indices are 1-based."""
    strata = []
    for rec in report.strata:
        inv = rec.invariants
        rep = report.samples[rec.representatives[0]].subspace
        strata.append(
            {
                "stratum": rec.stratum,
                "stratum_rank": rec.stratum_flat.rank,
                "stratum_contains": _subset_list(rec.stratum_flat.contains),
                "samples": len(rec.representatives),
                "representative": [[format_rational(x) for x in row] for row in rep.basis.rows],
                "plucker": list(plucker(rep).coords),
                "bases": [_subset_list(b) for b in rec.matroid],
                "lower": sorted(_subset_list(x) for x in rec.lower),
                "signature_distinct": None if rec.signature is None else [list(x) for x in sorted(set(rec.signature.per_chain))],
                "I_groundset_m": list(inv.independence_numbers),
                "I_restricted": list(inv.independence_numbers_restricted or ()),
                "w": list(inv.whitney),
                "nbc": list(inv.nbc_counts),
                "loops": _subset_list(inv.loops),
            }
        )
    out = {
        "dim": report.arrangement.dim,
        "hyperplanes": [list(h.normal) for h in report.arrangement.hyperplanes],
        "k": report.k,
        "samples": report.sample_count,
        "seed": report.seed,
        "bound": report.bound,
        "coverage": {"realized": len(report.strata), "total": report.total_strata},
        "strata": strata,
        "violations": report.violations,
        "warnings": report.warnings,
    }
    if include_pairs:
        out["comparable_pairs"] = [list(p) for p in report.comparable_pairs]
    return out


def report_to_json(report: CensusReport, **kwargs) -> str:
    return json.dumps(report_to_dict(report, **kwargs), indent=2)
