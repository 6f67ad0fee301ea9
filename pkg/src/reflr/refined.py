"""
Refined LR coefficients c_{lam mu}^nu(w): engine dispatch and cross-checks,
an independent tableau oracle, saturation scans, the hive symmetry map and
Bruhat value tables.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import crystal, hive, polyring
from .partitions import Partition, as_partition, partitions_in_box, partitions_of, scale
from .permutations import (
    Permutation,
    all_permutations,
    avoids_pattern,
    block_factor,
    bruhat_covers,
    double_coset_rep,
    is_covered,
    longest_element,
)

log = logging.getLogger(__name__)

ENGINES = ("crystal", "hive", "demazure")
DEFAULT_ENGINE = "crystal"


class EngineDisagreement(RuntimeError):
    """Two engines returned different values: a correctness bug, never a result."""

    def __init__(self, report: EngineReport, bundle: dict):
        super().__init__(f"engines disagree: {report.values}")
        self.report = report
        self.bundle = bundle


@dataclass
class EngineReport:
    value: int
    values: dict[str, int]
    agreement: bool
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "values": dict(sorted(self.values.items())),
            "agreement": self.agreement,
        }


def _engine(name: str):
    return {
        "crystal": crystal.refined_lr_crystal,
        "hive": hive.refined_lr_hive,
        "demazure": polyring.refined_lr_demazure,
    }[name]


def _check_inputs(lam, mu, nu, w: Permutation):
    n = w.n
    return as_partition(lam, n), as_partition(mu, n), as_partition(nu, n)


def refined_lr(lam, mu, nu, w: Permutation, engines: Iterable[str] = (DEFAULT_ENGINE,)) -> EngineReport:
    """
    Run every requested engine; raises EngineDisagreement (with a reproducer
    bundle) if they do not all agree.
    """
    lam, mu, nu = _check_inputs(lam, mu, nu, w)
    engines = list(dict.fromkeys(engines))
    unknown = set(engines) - set(ENGINES)
    if unknown or not engines:
        raise ValueError(f"unknown engines {sorted(unknown)}; choose from {ENGINES}")
    values, timings = {}, {}
    for name in engines:
        t0 = time.perf_counter()
        values[name] = _engine(name)(lam, mu, nu, w)
        timings[name] = time.perf_counter() - t0
    agreement = len(set(values.values())) == 1
    report = EngineReport(values[engines[0]], values, agreement, timings)
    if not agreement:
        raise EngineDisagreement(report, _reproducer(lam, mu, nu, w, engines))
    return report


def _reproducer(lam, mu, nu, w, engines) -> dict:
    """Inputs plus the intermediate objects each engine counted."""
    bundle: dict = {"lam": lam, "mu": mu, "nu": nu, "w": str(w), "engines": list(engines)}
    if "crystal" in engines:
        target = tuple(b - a for a, b in zip(lam, nu))
        bundle["crystal_elements"] = sorted(
            u for u in crystal.demazure_crystal(mu, w).elements
            if crystal.weight(u, w.n) == target
            and crystal.is_dominant(crystal.reverse_row_word(crystal.highest_tableau(lam)) + u, w.n)
        )
    if "hive" in engines:
        u = longest_element(w.n) * w
        bundle["faces"] = [sorted(F.flats) for F in hive.reduced_faces_for(u)]
        bundle["hives"] = sorted(h.labels for h in hive.kogan_hives_for(lam, mu, nu, u))
    if "demazure" in engines:
        bundle["schur_expansion"] = sorted(polyring.refined_lr_expansion(lam, mu, w).items())
    return bundle


def _ballot(word: Sequence[int], n: int) -> bool:
    counts = [0] * (n + 1)
    for x in word:
        counts[x - 1] += 1
        if x > 1 and counts[x - 1] > counts[x - 2]:
            return False
    return True


def classical_lr_oracle(lam, mu, nu) -> int:
    """
    #{T in Tab(mu) : word(T_lam) * b_T is a ballot word of weight nu}, by
    enumerating every SSYT of shape mu.  Shares no code with the engines.
    """
    n = len(lam)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    prefix = [j for j, part in enumerate(lam, 1) for _ in range(part)]
    count = 0
    for T in crystal.semistandard_tableaux(mu, n):
        word = prefix + [x for row in T for x in reversed(row)]
        wt = [0] * n
        for x in word:
            wt[x - 1] += 1
        if tuple(wt) == tuple(nu) and _ballot(word, n):
            count += 1
    return count


# --- saturation ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Violation:
    w: str
    lam: Partition
    mu: Partition
    nu: Partition
    k: int
    c_k: int
    c_1: int

    def to_dict(self) -> dict:
        return {"w": self.w, "lam": list(self.lam), "mu": list(self.mu), "nu": list(self.nu),
                "k": self.k, "c_k": self.c_k, "c_1": self.c_1}


@dataclass
class SaturationReport:
    params: dict
    triples: int = 0
    permutations: list[str] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "params": self.params,
            "triples_examined": self.triples,
            "permutations": self.permutations,
            "violations": [v.to_dict() for v in self.violations],
        }


def _second_opinion(lam, mu, nu, w: Permutation, k: int) -> tuple[int, int]:
    """(c_k, c_1) from the hive engine, used to confirm a suspected violation."""
    ck = hive.refined_lr_hive(scale(lam, k), scale(mu, k), scale(nu, k), w)
    c1 = hive.refined_lr_hive(lam, mu, nu, w)
    return ck, c1


def saturation_check(w: Permutation, lam, mu, nu, kmax: int = 3) -> Violation | None:
    """Smallest k in 2..kmax with c(k lam, k mu, k nu)(w) > 0 = c(lam, mu, nu)(w), if any."""
    if kmax < 2:
        raise ValueError("kmax must be at least 2")
    lam, mu, nu = _check_inputs(lam, mu, nu, w)
    c1 = crystal.refined_lr_crystal(lam, mu, nu, w)
    if c1 > 0:
        return None
    for k in range(2, kmax + 1):
        ck = crystal.refined_lr_crystal(scale(lam, k), scale(mu, k), scale(nu, k), w)
        if ck > 0:
            if _second_opinion(lam, mu, nu, w, k) != (ck, c1):
                raise EngineDisagreement(
                    EngineReport(ck, {"crystal": ck}, False),
                    {"lam": lam, "mu": mu, "nu": nu, "w": str(w), "k": k},
                )
            return Violation(str(w), lam, mu, nu, k, ck, c1)
    return None


CLASS_FILTERS = ("312", "231", "block", "excluded", "all")


def in_class(w: Permutation, class_filter: str) -> bool:
    """
    312 / 231: pattern avoiders; block: every w of the form w_1...w_p in a Young
    subgroup with 312- or 231-avoiding factors (this contains the first two);
    excluded: the rest of S_n.
    """
    if class_filter == "312":
        return avoids_pattern(w, "312")
    if class_filter == "231":
        return avoids_pattern(w, "231")
    if class_filter == "block":
        return is_covered(w)
    if class_filter == "excluded":
        return not is_covered(w)
    if class_filter == "all":
        return True
    raise ValueError(f"class filter must be one of {CLASS_FILTERS}")


def _scan_one(args) -> tuple[int, list[Violation]]:
    """All (lam, mu) for one permutation; every nu is covered by the distributions."""
    w, n, max_part, kmax = args
    boxes = list(partitions_in_box(n, max_part))
    triples = 0
    found = []
    for lam in boxes:
        for mu in boxes:
            triples += sum(1 for _ in partitions_of(sum(lam) + sum(mu), n))
            base = crystal.refined_lr_crystal_distribution(lam, mu, w)
            seen = set()
            for k in range(2, kmax + 1):
                dist = crystal.refined_lr_crystal_distribution(scale(lam, k), scale(mu, k), w)
                for big, ck in sorted(dist.items()):
                    if any(x % k for x in big):
                        continue
                    nu = tuple(x // k for x in big)
                    if nu in seen or base.get(nu, 0) > 0:
                        continue
                    seen.add(nu)
                    if _second_opinion(lam, mu, nu, w, k) != (ck, 0):
                        raise EngineDisagreement(
                            EngineReport(ck, {"crystal": ck}, False),
                            {"lam": lam, "mu": mu, "nu": nu, "w": str(w), "k": k},
                        )
                    found.append(Violation(str(w), lam, mu, nu, k, ck, 0))
    return triples, found


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("REFLR_JOBS", "1")))
    except ValueError:
        return 1


def saturation_scan(n: int, max_part: int, kmax: int, class_filter: str = "all",
                    jobs: int | None = None) -> SaturationReport:
    """
    Exhaustive scan over w in the class and all lam, mu with parts <= max_part;
    nu runs over every partition of |lam| + |mu| with at most n parts.
    """
    if n < 1 or max_part < 0 or kmax < 2:
        raise ValueError("need n >= 1, max_part >= 0 and kmax >= 2")
    perms = [w for w in all_permutations(n) if in_class(w, class_filter)]
    report = SaturationReport(
        params={"n": n, "max_part": max_part, "kmax": kmax, "class": class_filter},
        permutations=[str(w) for w in perms],
    )
    work = [(w, n, max_part, kmax) for w in perms]
    jobs = default_jobs() if jobs is None else jobs
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, work))
    else:
        results = [_scan_one(item) for item in work]
    for triples, found in results:
        report.triples += triples
        report.violations.extend(found)
    report.violations.sort()
    log.info("scanned %d permutations, %d triples, %d violations",
             len(perms), report.triples, len(report.violations))
    return report


# --- symmetry ---------------------------------------------------------------

def symmetry_map(h: hive.Hive) -> hive.Hive:
    """
    Psi(h) = delta^{-1}(eta_lam(delta_NE h)): a hive of Hive(lam, mu, nu) goes to
    one of Hive(mu, lam, nu); the face for w0 w lands on the face for w0 w^{-1}.
    """
    n = h.n
    T = hive.gt_to_tableau(hive.hive_delta_ne(h))
    A = hive.tableau_to_gt(crystal.evacuation(T, n), n)
    return hive.delta_inverse(A, h.mu)


def symmetry_inverse(h: hive.Hive) -> hive.Hive:
    n = h.n
    T = hive.gt_to_tableau(hive.hive_delta(h))
    A = hive.tableau_to_gt(crystal.evacuation(T, n), n)
    return hive.delta_ne_inverse(A, h.nu)


def symmetry_check(lam, mu, nu, w: Permutation) -> dict:
    """Compare Psi's image of the (lam, mu, nu, w0 w) face with the (mu, lam, nu, w0 w^-1) face."""
    lam, mu, nu = _check_inputs(lam, mu, nu, w)
    w0 = longest_element(w.n)
    domain = hive.kogan_hives_for(lam, mu, nu, w0 * w)
    codomain = hive.kogan_hives_for(mu, lam, nu, w0 * w.inverse())
    image = {symmetry_map(h) for h in domain}
    round_trip = all(symmetry_inverse(symmetry_map(h)) == h for h in domain)
    return {
        "w": str(w),
        "domain": len(domain),
        "codomain": len(codomain),
        "injective": len(image) == len(domain),
        "onto": image == codomain,
        "round_trip": round_trip,
        "bijective": len(image) == len(domain) and image == codomain and round_trip,
    }


# --- block products ----------------------------------------------------------

def _gl_block_coefficient(lam_r, mu_r, nu_r, w_r: Permutation) -> int:
    """Refined coefficient of one block; GL coefficients are unchanged by shifting
    lam_r and mu_r (and nu_r by both shifts) by multiples of (1, ..., 1)."""
    a, b = lam_r[-1], mu_r[-1]
    lam_r = tuple(x - a for x in lam_r)
    mu_r = tuple(x - b for x in mu_r)
    nu_r = tuple(x - a - b for x in nu_r)
    if min(nu_r) < 0:
        return 0
    return crystal.refined_lr_crystal(lam_r, mu_r, nu_r, w_r)


def block_product(lam, mu, nu, blocks: Sequence[int], w: Permutation) -> int:
    """
    delta * prod_r c^r for w = w_1 ... w_p in a Young subgroup.

    The weight nu - lam - mu must be a sum of roots of the blocks, i.e. sum to
    zero over every block (delta); c^r is then the refined coefficient of the
    restrictions of lam, mu, nu to block r, with w_r.
    """
    factors = block_factor(w, blocks)
    if factors is None:
        raise ValueError(f"{w} is not in the Young subgroup for blocks {tuple(blocks)}")
    lam, mu, nu = _check_inputs(lam, mu, nu, w)
    value = 1
    start = 0
    for size, w_r in zip(blocks, factors):
        cut = slice(start, start + size)
        if sum(nu[cut]) != sum(lam[cut]) + sum(mu[cut]):
            return 0
        value *= _gl_block_coefficient(lam[cut], mu[cut], nu[cut], w_r)
        if value == 0:
            return 0
        start += size
    return value


def block_product_check(lam, mu, nu, blocks: Sequence[int], w: Permutation) -> bool:
    lam, mu, nu = _check_inputs(lam, mu, nu, w)
    return block_product(lam, mu, nu, blocks, w) == crystal.refined_lr_crystal(lam, mu, nu, w)


# --- Bruhat tables -------------------------------------------------------------

@dataclass
class BruhatTable:
    lam: Partition
    mu: Partition
    nu: Partition
    engine: str
    values: dict[Permutation, int]
    covers: list[tuple[Permutation, Permutation]]
    monotone: bool
    coset_constant: bool

    def to_dict(self) -> dict:
        return {
            "params": {"lam": list(self.lam), "mu": list(self.mu), "nu": list(self.nu),
                       "n": len(self.lam)},
            "engine": self.engine,
            "values": [{"w": str(w), "c": c} for w, c in sorted(
                self.values.items(), key=lambda kv: (kv[0].length(), kv[0].images))],
            "covers": [[str(u), str(v)] for u, v in self.covers],
            "monotone": self.monotone,
            "coset_constant": self.coset_constant,
            "violations": [],
        }

    def to_dot(self) -> str:
        lines = ["digraph bruhat {", "  rankdir=BT;"]
        by_len: dict[int, list[Permutation]] = {}
        for w in self.values:
            by_len.setdefault(w.length(), []).append(w)
        for ell in sorted(by_len):
            names = " ".join(f'"{w}";' for w in sorted(by_len[ell]))
            lines.append(f"  {{ rank=same; {names} }}")
        for w in sorted(self.values, key=lambda u: (u.length(), u.images)):
            lines.append(f'  "{w}" [label="{w} : {self.values[w]}"];')
        for u, v in self.covers:
            lines.append(f'  "{u}" -> "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def bruhat_value_table(lam, mu, nu, engine: str = DEFAULT_ENGINE) -> BruhatTable:
    """c(w) for every w in S_n, with cover edges and the monotonicity / coset checks."""
    n = len(lam)
    if n > 5:
        raise ValueError("Bruhat tables are limited to n <= 5")
    w0 = longest_element(n)
    lam, mu, nu = _check_inputs(lam, mu, nu, w0)
    perms = all_permutations(n)
    values = {w: _engine(engine)(lam, mu, nu, w) for w in perms}
    covers = sorted(((u, v) for u in perms for v in bruhat_covers(u)),
                    key=lambda e: (e[0].length(), e[0].images, e[1].images))
    monotone = all(values[u] <= values[v] for u, v in covers)
    coset_constant = all(values[w] == values[double_coset_rep(lam, w, mu)] for w in perms)
    return BruhatTable(lam, mu, nu, engine, values, covers, monotone, coset_constant)
