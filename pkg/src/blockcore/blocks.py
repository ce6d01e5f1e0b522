"""Blocks of S_n, A_n and 2.A_n, and the search for single-orbit blocks.

Ordinary blocks are labelled by p-cores (A_n: up to conjugation), spin
blocks at p = 3 by 3-bar-cores.  Descriptors are listed by ascending weight,
then cores in reverse-lexicographic order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

from . import counting
from .partitions import (
    BarPartition,
    Partition,
    conjugate,
    enumerate_bar_cores,
    enumerate_p_cores,
    is_self_conjugate,
)
from .tables import TableRow, alternating_a6_rows

FAMILIES = ("Sym", "Alt", "SpinSym", "SpinAlt")
CASES = ("Alt-1", "Spin-2", "SpinA6-3", "SpinA6-4", "Sporadic", "ExcCover")
_CASE_PRIME = {"Alt-1": 3, "Spin-2": 3, "SpinA6-3": 5, "SpinA6-4": 5}


@dataclass(frozen=True)
class BlockDescriptor:
    """One block label.  ``None`` in defect or l means the value is not determined here.

    ``multiplicity`` counts the actual blocks sharing the label: 2 for a
    self-conjugate defect-zero label of A_n, whose character splits.
    """

    family: str
    n: int
    p: int
    core: Partition
    weight: int
    self_conjugate: Optional[bool] = None
    sign: Optional[int] = None
    defect: Optional[int] = None
    l: Optional[int] = None
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.core.size + self.p * self.weight != self.n:
            raise ValueError("core size + p * weight must equal n")


@dataclass(frozen=True)
class ClassificationHit:
    case_id: str
    descriptor: Union[BlockDescriptor, TableRow]
    l: int
    degrees: Optional[tuple[int, ...]] = None


def defect_Sn(p: int, w: int) -> int:
    """p-adic valuation of (p*w)!, the order of a Sylow p-subgroup of S_{pw}."""
    counting._check_odd_prime(p)
    if w < 0:
        raise ValueError("w must be non-negative")
    total, q = 0, p
    while q <= p * w:
        total += (p * w) // q
        q *= p
    return total


def _weights(n: int, p: int, weight: Optional[int]) -> range:
    if weight is not None:
        return range(weight, weight + 1) if 0 <= weight * p <= n else range(0)
    return range(n // p + 1)


def blocks_Sn(n: int, p: int, weight: Optional[int] = None) -> list[BlockDescriptor]:
    counting._check_odd_prime(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for w in _weights(n, p, weight):
        l = counting.l_block_Sn(p, w) if w else 1
        for core in enumerate_p_cores(n - p * w, p):
            out.append(
                BlockDescriptor(
                    "Sym", n, p, core, w,
                    self_conjugate=is_self_conjugate(core),
                    defect=defect_Sn(p, w),
                    l=l,
                )
            )
    return out


def _representative(core: Partition) -> bool:
    """Keep the reverse-lex larger of a core and its conjugate."""
    return core.parts >= conjugate(core).parts


def blocks_An(n: int, p: int, weight: Optional[int] = None) -> list[BlockDescriptor]:
    if n < 5:
        raise ValueError("alternating groups need n >= 5")
    if not counting.is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    out = []
    for w in _weights(n, p, weight):
        for core in enumerate_p_cores(n - p * w, p):
            if not _representative(core):
                continue
            sc = is_self_conjugate(core)
            if p == 2:
                # 2-cores are staircases, hence self-conjugate
                total = counting.l_block_An_p2(w)
                defect = 0 if w <= 1 else None
            else:
                total = counting.l_block_An(p, w, sc)
                defect = defect_Sn(p, w)
            mult = 2 if (w == 0 and sc) else 1
            out.append(
                BlockDescriptor(
                    "Alt", n, p, core, w,
                    self_conjugate=sc,
                    defect=defect,
                    l=total // mult,
                    multiplicity=mult,
                )
            )
    return out


def spin_blocks_An(n: int, p: int = 3, weight: Optional[int] = None) -> list[BlockDescriptor]:
    if p != 3:
        raise ValueError("spin blocks are only supported for p = 3")
    if n < 5:
        raise ValueError("alternating groups need n >= 5")
    out = []
    for w in _weights(n, p, weight):
        for core in enumerate_bar_cores(n - p * w, p):
            sign = l = None
            if w == 1:
                sign = counting.spin_block_sign(core)
                l = counting.l_spin_An_weight1(core)
            out.append(
                BlockDescriptor("SpinAlt", n, p, core, w, sign=sign, defect=defect_Sn(p, w), l=l)
            )
    return out


def classify_single_orbit(n: int, p: int) -> list[ClassificationHit]:
    """Blocks of covers of A_n whose Brauer characters form one automorphism orbit."""
    if n < 5:
        raise ValueError("alternating groups need n >= 5")
    hits = []
    if p == 3:
        for b in blocks_An(n, 3, weight=1):
            if b.self_conjugate and b.l == 1:
                hits.append(ClassificationHit("Alt-1", b, b.l))
        for b in spin_blocks_An(n, 3, weight=1):
            if b.l is not None and b.l <= 2:
                hits.append(ClassificationHit("Spin-2", b, b.l))
    if n == 6 and p == 5:
        for case, row in zip(("SpinA6-3", "SpinA6-4"), alternating_a6_rows()):
            hits.append(ClassificationHit(case, row, row.l, row.ibr_degrees))
    return hits


def _case_present(args: tuple[str, int]) -> bool:
    case_id, n = args
    return any(h.case_id == case_id for h in classify_single_orbit(n, _CASE_PRIME[case_id]))


def first_occurrences(case_id: str, n_max: int, jobs: int = 1) -> list[int]:
    """All n in [5, n_max] where classify_single_orbit yields a hit of case_id."""
    if case_id not in _CASE_PRIME:
        raise ValueError(f"no range search for case {case_id!r}")
    if n_max < 5:
        raise ValueError("n_max must be >= 5")
    tasks = [(case_id, n) for n in range(5, n_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flags = list(pool.map(_case_present, tasks))
    else:
        flags = [_case_present(t) for t in tasks]
    return [n for (_, n), hit in zip(tasks, flags) if hit]
