"""Desk-scale sweeps of the inequality beta(f^2) <= beta(f) and of the gracefulness corollaries."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .config import DEFAULT_SEED, RunConfig, check_size
from .errors import ConstructionUnavailableError, PremiseError
from .labeling import beta, cycle_union, edge_label_set, fixed_point_swap, grl
from .transform import (
    Transformation,
    automorphism_group,
    enumerate_all,
    enumerate_semigroup,
    square,
)

LEMMAS = ("a", "b", "swap-remark", "trees-corollary", "cycles-corollary")

EXHAUSTIVE_MAX_N = 5
DEFAULT_SAMPLE_SIZE = 10_000


@dataclass
class VerificationReport:
    lemma: str
    n: int
    domain_size: int
    checked: int = 0
    premise_holds: Optional[int] = None
    counterexamples: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    instances: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    wall_time: float = 0.0
    sampling: Optional[dict] = None
    witness: Optional[list] = None

    @property
    def verdict(self) -> str:
        if self.counterexamples:
            return "FAIL"
        return "FLAGGED" if self.flags else "PASS"

    @property
    def complete(self) -> bool:
        return self.checked == self.domain_size

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {
            "lemma": self.lemma,
            "n": self.n,
            "domain_size": self.domain_size,
            "checked": self.checked,
            "premise_holds": self.premise_holds,
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
            "flags": self.flags,
            "instances": self.instances,
            "config": self.config,
            "sampling": self.sampling,
            "witness": self.witness,
        }
        if include_timing:
            d["wall_time"] = round(self.wall_time, 6)
        return d


def _map(fn: Callable, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _strict_inclusion(f: Transformation):
    a1 = automorphism_group(f)
    a2 = automorphism_group(square(f))
    if not a1.issubset(a2):
        raise AssertionError(f"Aut(G_f) not contained in Aut(G_f^2) for f={f}")
    return a1.order, a2.order, a1.order < a2.order


def _composition_instance(images: tuple) -> dict:
    f = Transformation(images)
    o1, o2, strict = _strict_inclusion(f)
    row = {"f": str(f), "aut_order": o1, "aut_square_order": o2, "premise": strict,
           "beta_f": None, "beta_f2": None, "holds": None}
    if strict:
        b1, b2 = beta(f), beta(square(f))
        row.update(beta_f=b1.beta, beta_f2=b2.beta, holds=b2.beta <= b1.beta,
                   witness_f=list(b1.witness.values), witness_f2=list(b2.witness.values))
    return row


def _fill(report: VerificationReport, rows: list, bad: Callable[[dict], bool],
          details: Callable[[dict], dict]) -> None:
    rows = sorted(rows, key=lambda r: r["f"])
    report.instances = rows
    report.checked = len(rows)
    report.counterexamples = [{"f": r["f"], "details": details(r)} for r in rows if bad(r)]


def _composition_report(lemma: str, n: int, domain: list, config: RunConfig,
                        sampling: Optional[dict]) -> VerificationReport:
    start = time.perf_counter()
    rows = _map(_composition_instance, domain, config.workers)
    report = VerificationReport(lemma, n, len(domain), config=config.snapshot(), sampling=sampling)
    _fill(report, rows, lambda r: r["holds"] is False,
          lambda r: {"beta_f": r["beta_f"], "beta_f2": r["beta_f2"]})
    report.premise_holds = sum(1 for r in rows if r["premise"])
    report.wall_time = time.perf_counter() - start
    return report


def verify_lemma_a(n: int, config: Optional[RunConfig] = None) -> VerificationReport:
    """beta(f^2) <= beta(f) over semigroup members with Aut(G_f) strictly inside Aut(G_f^2)."""
    config = config or RunConfig.from_env()
    check_size(n, config.max_n)
    domain = [f.images for f in enumerate_semigroup(n)]
    return _composition_report("a", n, domain, config, None)


def sample_transformations(n: int, size: int, seed: int) -> list:
    """Distinct uniformly drawn maps on Z_n, returned in lexicographic order."""
    population = n ** n
    size = min(size, population)
    rng = np.random.default_rng(seed)
    if population <= 10**6:
        codes = rng.choice(population, size=size, replace=False)
    else:
        chosen = set()
        while len(chosen) < size:
            chosen.update(int(c) for c in rng.integers(0, population, size=size - len(chosen)))
        codes = list(chosen)
    out = []
    for code in sorted(int(c) for c in codes):
        digits = []
        for _ in range(n):
            code, r = divmod(code, n)
            digits.append(r)
        out.append(tuple(reversed(digits)))
    return out


def verify_lemma_b(n: int, config: Optional[RunConfig] = None, *,
                   sample_size: int = DEFAULT_SAMPLE_SIZE,
                   exhaustive: Optional[bool] = None) -> VerificationReport:
    """Same inequality over all of Z_n^Z_n; sampled above EXHAUSTIVE_MAX_N."""
    config = config or RunConfig.from_env()
    check_size(n, config.max_n)
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_MAX_N
    if exhaustive:
        domain = [f.images for f in enumerate_all(n)]
        sampling = None
    else:
        domain = sample_transformations(n, sample_size, config.seed)
        sampling = {"seed": config.seed, "sample_size": len(domain), "population": n ** n}
    return _composition_report("b", n, domain, config, sampling)


def _swap_instance(images: tuple) -> dict:
    f = Transformation(images)
    o1, o2, strict = _strict_inclusion(f)
    row = {"f": str(f), "aut_order": o1, "aut_square_order": o2}
    if strict:
        row["status"] = "skipped-premise-holds"
        return row
    try:
        g = fixed_point_swap(f)
    except ConstructionUnavailableError as exc:
        row.update(status="construction-unavailable", error=str(exc))
        return row
    g1, g2, g_strict = _strict_inclusion(g)
    count_f, count_g = grl(f).count, grl(g).count
    row.update(g=str(g), g_aut_order=g1, g_aut_square_order=g2, g_strict_inclusion=g_strict,
               grl_f=count_f, grl_g=count_g, grl_equal=count_f == count_g)
    row["status"] = "consistent" if (g_strict and count_f == count_g) else "flagged"
    return row


def verify_swap_remark(n: int, config: Optional[RunConfig] = None) -> VerificationReport:
    """Report, per semigroup member with Aut(G_f) == Aut(G_f^2), what the swap produces.

    Disagreements with the remark are flags, not counterexamples.
    """
    config = config or RunConfig.from_env()
    if n <= 2:
        raise PremiseError("the swap remark concerns n > 2")
    check_size(n, config.max_n)
    start = time.perf_counter()
    domain = [f.images for f in enumerate_semigroup(n)]
    rows = sorted(_map(_swap_instance, domain, config.workers), key=lambda r: r["f"])
    report = VerificationReport("swap-remark", n, len(domain), config=config.snapshot())
    report.instances = rows
    report.checked = len(rows)
    report.premise_holds = sum(1 for r in rows if r["status"] == "skipped-premise-holds")
    report.flags = [
        {"f": r["f"], "details": {k: r.get(k) for k in
                                  ("status", "g", "g_strict_inclusion", "grl_f", "grl_g", "error")
                                  if k in r}}
        for r in rows if r["status"] in ("flagged", "construction-unavailable")
    ]
    report.wall_time = time.perf_counter() - start
    return report


def _tree_instance(images: tuple) -> dict:
    f = Transformation(images)
    b = beta(f)
    return {"f": str(f), "beta": b.beta, "graceful": b.graceful, "witness": list(b.witness.values)}


def verify_trees_corollary(n: int, config: Optional[RunConfig] = None) -> VerificationReport:
    """Every semigroup member on Z_n is graceful."""
    config = config or RunConfig.from_env()
    check_size(n, config.max_n)
    start = time.perf_counter()
    domain = [f.images for f in enumerate_semigroup(n)]
    rows = _map(_tree_instance, domain, config.workers)
    report = VerificationReport("trees-corollary", n, len(domain), config=config.snapshot())
    _fill(report, rows, lambda r: not r["graceful"], lambda r: {"beta": r["beta"]})
    report.wall_time = time.perf_counter() - start
    return report


def verify_cycles_corollary(s: int, t: int, config: Optional[RunConfig] = None) -> VerificationReport:
    """cycle_union(s, t) is graceful; the witness is re-checked label by label."""
    config = config or RunConfig.from_env()
    if s < 1:
        raise ValueError(f"s > 0 required, got s={s}")
    if t < 2:
        raise ValueError(f"t > 1 required, got t={t}")
    start = time.perf_counter()
    f = cycle_union(s, t, max_n=config.max_n)
    b = beta(f, max_n=config.max_n, workers=config.workers)
    labels = edge_label_set(f, b.witness)
    recheck = labels == tuple(range(f.n))
    row = {"f": str(f), "beta": b.beta, "graceful": b.graceful,
           "witness": list(b.witness.values), "edge_labels": list(labels), "recheck": recheck}
    report = VerificationReport("cycles-corollary", f.n, 1, config={**config.snapshot(), "s": s, "t": t})
    report.instances = [row]
    report.checked = 1
    report.witness = list(b.witness.values)
    if not (b.graceful and recheck):
        report.counterexamples = [{"f": str(f), "details": {"beta": b.beta, "recheck": recheck}}]
    report.wall_time = time.perf_counter() - start
    return report


def run_lemma(lemma: str, n: Optional[int] = None, config: Optional[RunConfig] = None,
              **kw) -> VerificationReport:
    aliases = {"swap": "swap-remark", "trees": "trees-corollary", "cycles": "cycles-corollary"}
    lemma = aliases.get(lemma, lemma)
    if lemma == "a":
        return verify_lemma_a(n, config)
    if lemma == "b":
        return verify_lemma_b(n, config, **kw)
    if lemma == "swap-remark":
        return verify_swap_remark(n, config)
    if lemma == "trees-corollary":
        return verify_trees_corollary(n, config)
    if lemma == "cycles-corollary":
        return verify_cycles_corollary(kw["s"], kw["t"], config)
    raise ValueError(f"unknown lemma {lemma!r}; expected one of {LEMMAS}")


def recheck_counterexample(entry: dict) -> bool:
    """Recompute both beta values of a stored counterexample."""
    f = Transformation.from_literal(entry["f"])
    d = entry["details"]
    return beta(f).beta == d["beta_f"] and beta(square(f)).beta == d["beta_f2"]


__all__ = [
    "VerificationReport", "verify_lemma_a", "verify_lemma_b", "verify_swap_remark",
    "verify_trees_corollary", "verify_cycles_corollary", "run_lemma",
    "sample_transformations", "recheck_counterexample", "DEFAULT_SEED",
]
