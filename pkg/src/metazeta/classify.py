"""End-to-end classification reports and cross-validation sweeps.

classify() answers, for one (p, m, n): which k are valid, and how the
valid set partitions under isomorphism, count-vector equality, and
lattice isomorphism.  sweep_verify() grinds every group in a size range
through all independent routes (closed formulas, theorem classifier,
enumeration oracle, stratum census, product multiplicativity, lattice
lemma) and reports the first counterexample of each kind.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import zeta
from .errors import ResourceLimitError
from .groups import (GroupParams, KPartition, iso_classes, is_isomorphic,
                     valid_k_set)
from .lattice import build_lattice, is_lattice_isomorphic, lattice_classes
from .oracle import (OracleLimits, build_group, cocycle_subgroup_census,
                     direct_product, enumerate_subgroups)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named cross-check: pass, fail, or skipped."""

    name: str
    status: str
    detail: str = ""

    def __post_init__(self):
        if self.status not in ("pass", "fail", "skipped"):
            raise ValueError(f"unknown status {self.status!r}")

    def to_json_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class ClassificationReport:
    """Everything classify() found for one (p, m, n)."""

    p: int
    m: int
    n: int
    valid_k: tuple[int, ...]
    iso: KPartition
    zeta_partition: KPartition
    lattice: KPartition | None
    cross_checks: tuple[CheckResult, ...]

    @property
    def base(self) -> tuple[int, int, int]:
        return (self.p, self.m, self.n)

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.cross_checks)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "valid_k": list(self.valid_k),
            "iso": self.iso.to_json_dict(),
            "zeta": self.zeta_partition.to_json_dict(),
            "lattice": self.lattice.to_json_dict() if self.lattice else None,
            "cross_checks": [c.to_json_dict() for c in self.cross_checks],
        }

    def to_json(self) -> str:
        """Canonical serialization: byte-identical for identical inputs."""
        return json.dumps(self.to_json_dict(), sort_keys=True,
                          separators=(",", ":")) + "\n"


def zeta_classes(p: int, m: int, n: int) -> KPartition:
    """Partition of the valid k set by count-vector equality, decided
    entirely by the classifier criterion (no coefficient computation).
    """
    blocks: list[list[int]] = []
    reps: list[GroupParams] = []
    for k in valid_k_set(p, m, n):
        params = GroupParams(p, m, n, k)
        for block, rep in zip(blocks, reps):
            if zeta.zeta_equal_by_theorem(rep, params):
                block.append(k)
                break
        else:
            blocks.append([k])
            reps.append(params)
    return KPartition(p, m, n, "zeta", tuple(tuple(b) for b in blocks))


def _blocks_nest(finer: KPartition, coarser: KPartition) -> bool:
    """Every block of `finer` lies inside a single block of `coarser`."""
    return all(set(b) <= set(coarser.block_of(b[0])) for b in finer.blocks)


def classify(p: int, m: int, n: int, with_lattice: bool = False,
             verify: bool = False,
             limits: OracleLimits | None = None) -> ClassificationReport:
    """Valid k set and its partitions, with internal consistency checks.

    The lattice partition needs the enumeration oracle; when the group
    order is over the oracle bound it is skipped and flagged rather
    than attempted.  verify=True recomputes every coefficient vector
    and cross-checks the classifier partition against vector equality.
    """
    limits = limits or OracleLimits.from_env()
    valid = tuple(valid_k_set(p, m, n))
    iso = iso_classes(p, m, n)
    zpart = zeta_classes(p, m, n)
    checks: list[CheckResult] = []

    checks.append(CheckResult(
        "iso-blocks-within-zeta-blocks",
        "pass" if _blocks_nest(iso, zpart) else "fail",
        "group isomorphism must imply count-vector equality"))

    if verify:
        vectors = {k: zeta.coefficients(GroupParams(p, m, n, k)).counts
                   for k in valid}
        bad = None
        for a_idx in range(len(valid)):
            for b_idx in range(a_idx + 1, len(valid)):
                k1, k2 = valid[a_idx], valid[b_idx]
                by_theorem = zeta.zeta_equal_by_theorem(
                    GroupParams(p, m, n, k1), GroupParams(p, m, n, k2))
                if by_theorem != (vectors[k1] == vectors[k2]):
                    bad = (k1, k2)
                    break
            if bad:
                break
        checks.append(CheckResult(
            "zeta-theorem-vs-coefficients",
            "fail" if bad else "pass",
            f"classifier disagrees with vectors at k1={bad[0]}, k2={bad[1]}"
            if bad else f"agree on all {len(valid)} valid k, pairwise"))

    lattice_part: KPartition | None = None
    if with_lattice:
        order = p ** (m + n)
        if order > limits.max_order:
            checks.append(CheckResult(
                "lattice-blocks-within-zeta-blocks", "skipped",
                f"order {order} exceeds oracle bound {limits.max_order}"))
        else:
            lattice_part = lattice_classes(p, m, n, limits)
            checks.append(CheckResult(
                "lattice-blocks-within-zeta-blocks",
                "pass" if _blocks_nest(lattice_part, zpart) else "fail",
                "lattice isomorphism must imply count-vector equality"))

    return ClassificationReport(p=p, m=m, n=n, valid_k=valid, iso=iso,
                                zeta_partition=zpart, lattice=lattice_part,
                                cross_checks=tuple(checks))


@dataclass
class SweepSummary:
    """Aggregate result of sweep_verify over one prime."""

    p: int
    max_order: int
    cells: list[tuple[int, int]] = field(default_factory=list)
    groups_checked: int = 0
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "max_order": self.max_order,
            "cells": [list(c) for c in self.cells],
            "groups_checked": self.groups_checked,
            "checks": [c.to_json_dict() for c in self.checks],
        }


def _first_fail(failures: list[str], name: str, ok_detail: str) -> CheckResult:
    if failures:
        return CheckResult(name, "fail",
                           failures[0] + f" (+{len(failures) - 1} more)"
                           if len(failures) > 1 else failures[0])
    return CheckResult(name, "pass", ok_detail)


def sweep_verify(p: int, max_order: int,
                 limits: OracleLimits | None = None,
                 with_lattice: bool = True,
                 product_cofactor: int | None = None,
                 product_samples: int = 5) -> SweepSummary:
    """Exhaustive cross-validation over all valid (p, m, n, k) with
    p^(m+n) <= max_order.

    Each group is enumerated once; every check reuses that enumeration:

    * formula-vs-oracle: closed-form coefficients == enumerated counts;
    * cocycle-census: per-stratum subgroup counts == p^kernel_log(i, j);
    * theorem-vs-coefficients: classifier == vector equality, all pairs;
    * multiplicativity: counts(G x Z_q) == Dirichlet product, sampled;
    * lattice-lemma: lattice-isomorphic pairs have equal vectors.

    Failures carry the first pinpointed counterexample (p, m, n, k, t).
    """
    limits = limits or OracleLimits.from_env()
    if product_cofactor is None:
        product_cofactor = 3 if p != 3 else 2
    summary = SweepSummary(p=p, max_order=max_order)
    f_formula: list[str] = []
    f_census: list[str] = []
    f_theorem: list[str] = []
    f_product: list[str] = []
    f_lattice: list[str] = []
    product_groups: list[GroupParams] = []

    ell = 2
    while p**ell <= max_order:
        for m in range(1, ell):
            n = ell - m
            summary.cells.append((m, n))
            cell: list[tuple[int, tuple[int, ...]]] = []  # (k, counts)
            lattices = {}
            for k in valid_k_set(p, m, n):
                params = GroupParams(p, m, n, k)
                subs = enumerate_subgroups(build_group(params, limits), limits)
                counts = tuple(subs.counts_by_power())
                formula = tuple(zeta.coefficients(params).counts)
                summary.groups_checked += 1
                if formula != counts:
                    t = next(i for i, (a, b) in enumerate(zip(formula, counts))
                             if a != b)
                    f_formula.append(
                        f"({p},{m},{n},{k}): formula a_{p}^{t}={formula[t]} "
                        f"!= oracle {counts[t]}")
                census = cocycle_subgroup_census(params, limits, subs)
                for (i, j), got in sorted(census.items()):
                    want = p ** zeta.kernel_log(params, i, j)
                    if got != want:
                        f_census.append(
                            f"({p},{m},{n},{k}): census(i={i},j={j})={got} "
                            f"!= p^kernel_log={want}")
                        break
                if with_lattice:
                    lattices[k] = build_lattice(subs)
                cell.append((k, counts))
                product_groups.append(params)
            for x in range(len(cell)):
                for y in range(x + 1, len(cell)):
                    k1, c1 = cell[x]
                    k2, c2 = cell[y]
                    a = GroupParams(p, m, n, k1)
                    b = GroupParams(p, m, n, k2)
                    if zeta.zeta_equal_by_theorem(a, b) != (c1 == c2):
                        f_theorem.append(
                            f"({p},{m},{n}): classifier vs vectors disagree "
                            f"at k1={k1}, k2={k2}")
                    if with_lattice and is_lattice_isomorphic(
                            lattices[k1], lattices[k2]) and c1 != c2:
                        f_lattice.append(
                            f"({p},{m},{n}): lattices of k1={k1}, k2={k2} "
                            "isomorphic but count vectors differ")
        ell += 1

    stride = max(1, len(product_groups) // max(1, product_samples))
    sampled = product_groups[::stride][:product_samples]
    for params in sampled:
        g = build_group(params, limits)
        prod = direct_product(g, product_cofactor, limits)
        got = enumerate_subgroups(prod, limits).count_map()
        base = enumerate_subgroups(g, limits).count_map()
        cof = {d: 1 for d in range(1, product_cofactor + 1)
               if product_cofactor % d == 0}
        want = zeta.dirichlet_multiply(base, cof)
        if got != want:
            f_product.append(
                f"({params.p},{params.m},{params.n},{params.k}) x "
                f"Z{product_cofactor}: {got} != {want}")

    summary.checks = [
        _first_fail(f_formula, "formula-vs-oracle",
                    f"{summary.groups_checked} groups, coordinatewise equal"),
        _first_fail(f_census, "cocycle-census",
                    "every stratum count matches p^kernel_log"),
        _first_fail(f_theorem, "theorem-vs-coefficients",
                    "classifier matches vector equality on all pairs"),
        _first_fail(f_product, "multiplicativity",
                    f"{len(sampled)} products against Z{product_cofactor}"),
    ]
    if with_lattice:
        summary.checks.append(_first_fail(
            f_lattice, "lattice-lemma",
            "every lattice-isomorphic pair has equal count vectors"))
    else:
        summary.checks.append(CheckResult("lattice-lemma", "skipped",
                                          "lattice checks disabled"))
    return summary


def compare(a: GroupParams, b: GroupParams,
            limits: OracleLimits | None = None) -> dict[str, bool]:
    """The three pairwise questions for two parameter sets at once."""
    limits = limits or OracleLimits.from_env()
    out = {
        "isomorphic": is_isomorphic(a, b),
        "zeta_equal": zeta.zeta_equal_by_theorem(a, b),
    }
    l1 = build_lattice(enumerate_subgroups(build_group(a, limits), limits))
    l2 = build_lattice(enumerate_subgroups(build_group(b, limits), limits))
    out["lattice_isomorphic"] = is_lattice_isomorphic(l1, l2)
    return out
