"""Partitions, bar partitions, hooks, beta-sets, cores and quotients.

Cores and quotients are computed on the p-abacus: a partition of length at
most L is encoded by its beta-set {lam_i + L - i}, and beta-numbers are
placed on p runners by residue.  L is always taken to be a multiple of p,
which makes runner i hold exactly the beta-numbers congruent to i mod p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool) or x <= 0:
                raise ValueError(f"parts must be positive integers: {parts!r}")
        self._check_order(parts)
        object.__setattr__(self, "size", sum(parts))

    @staticmethod
    def _check_order(parts: tuple[int, ...]) -> None:
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts!r}")

    @classmethod
    def parse(cls, text: str):
        """Read the comma-separated text form; "" and "-" are the empty partition."""
        text = text.strip()
        if text in ("", "-"):
            return cls(())
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]


@dataclass(frozen=True, order=False)
class BarPartition(Partition):
    """A strictly decreasing tuple of positive integers."""

    @staticmethod
    def _check_order(parts: tuple[int, ...]) -> None:
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be strictly decreasing: {parts!r}")


@dataclass(frozen=True)
class CoreQuotient:
    core: Partition
    quotient: tuple[Partition, ...]
    p: int
    weight: int


def _check_p(p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"p must be an integer >= 2, got {p!r}")


def _check_odd_p(p: int) -> None:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd integer >= 3, got {p!r}")


# --- shape -----------------------------------------------------------------

def conjugate(lam: Partition) -> Partition:
    parts = lam.parts
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in parts if x > j) for j in range(parts[0])))


def is_self_conjugate(lam: Partition) -> bool:
    return conjugate(lam).parts == lam.parts


def hook_lengths(lam: Partition) -> list[int]:
    """Hook lengths row by row, one per cell."""
    conj = conjugate(lam).parts
    return [
        (row - j - 1) + (conj[j] - i - 1) + 1
        for i, row in enumerate(lam.parts)
        for j in range(row)
    ]


def is_triangular(lam: Partition) -> bool:
    k = len(lam)
    return lam.parts == tuple(range(k, 0, -1))


# --- abacus ----------------------------------------------------------------

def beta_set(lam: Partition, length: int) -> list[int]:
    """Beta-numbers lam_i + length - i (1-indexed i), padding with zero parts."""
    if length < len(lam):
        raise ValueError("beta-set length shorter than partition")
    parts = list(lam.parts) + [0] * (length - len(lam))
    return [x + length - 1 - i for i, x in enumerate(parts)]


def from_beta_set(betas: Iterable[int]) -> Partition:
    bs = sorted(betas, reverse=True)
    n = len(bs)
    parts = [b - (n - 1 - i) for i, b in enumerate(bs)]
    return Partition(tuple(x for x in parts if x > 0))


def _abacus_length(lam: Partition, p: int) -> int:
    return -(-len(lam) // p) * p


def _runners(lam: Partition, p: int) -> list[list[int]]:
    """Bead levels on each runner, descending."""
    runners: list[list[int]] = [[] for _ in range(p)]
    for b in beta_set(lam, _abacus_length(lam, p)):
        runners[b % p].append(b // p)
    return runners


def _runner_partition(levels: Sequence[int]) -> Partition:
    c = len(levels)
    return Partition(tuple(x for x in (lv - (c - 1 - j) for j, lv in enumerate(levels)) if x > 0))


def p_core(lam: Partition, p: int) -> Partition:
    _check_p(p)
    return _p_core(lam, p)


@lru_cache(maxsize=1 << 16)
def _p_core(lam: Partition, p: int) -> Partition:
    betas = []
    for r, levels in enumerate(_runners(lam, p)):
        betas.extend(r + p * k for k in range(len(levels)))
    return from_beta_set(betas)


def is_p_core(lam: Partition, p: int) -> bool:
    _check_p(p)
    bs = set(beta_set(lam, len(lam)))
    return not any(b >= p and b - p not in bs for b in bs)


def p_quotient(lam: Partition, p: int) -> CoreQuotient:
    _check_p(p)
    runners = _runners(lam, p)
    quotient = tuple(_runner_partition(levels) for levels in runners)
    core = _p_core(lam, p)
    return CoreQuotient(core, quotient, p, (lam.size - core.size) // p)


def reconstruct(core: Partition, quotient: Sequence[Partition], p: int) -> Partition:
    """Inverse of p_quotient: rebuild the partition from its core and quotient."""
    _check_p(p)
    if len(quotient) != p:
        raise ValueError(f"quotient must have {p} components")
    weight = sum(q.size for q in quotient)
    # w extra beads per runner leaves room for every quotient row
    length = _abacus_length(core, p) + p * weight
    counts = [0] * p
    for b in beta_set(core, length):
        counts[b % p] += 1
    betas = []
    for r, (c, q) in enumerate(zip(counts, quotient)):
        rows = list(q.parts) + [0] * (c - len(q))
        betas.extend(r + p * (x + c - 1 - j) for j, x in enumerate(rows))
    return from_beta_set(betas)


# --- hook removal (independent route, used as an oracle) --------------------

def remove_rim_hook(lam: Partition, i: int, j: int) -> Partition:
    """Remove the rim hook attached to cell (i, j), 0-indexed."""
    parts = list(lam.parts)
    leg = conjugate(lam).parts[j] - i - 1
    for r in range(i, i + leg):
        parts[r] = parts[r + 1] - 1
    parts[i + leg] = j
    return Partition(tuple(x for x in parts if x > 0))


def removable_hooks(lam: Partition, p: int) -> list[tuple[int, int]]:
    conj = conjugate(lam).parts
    return [
        (i, j)
        for i, row in enumerate(lam.parts)
        for j in range(row)
        if (row - j - 1) + (conj[j] - i - 1) + 1 == p
    ]


def p_core_by_hooks(lam: Partition, p: int, rng: random.Random | None = None) -> Partition:
    """Strip p-hooks one at a time, in a random order when rng is given."""
    _check_p(p)
    while True:
        cells = removable_hooks(lam, p)
        if not cells:
            return lam
        i, j = rng.choice(cells) if rng is not None else cells[0]
        lam = remove_rim_hook(lam, i, j)


# --- bars ------------------------------------------------------------------

def removable_bars(lam: BarPartition, p: int) -> list[tuple[int, ...]]:
    """Removable p-bars as the tuple of parts they touch, largest first.

    A part x with x - p > 0 and x - p not a part can be lowered by p; a part
    equal to p can be deleted; two parts summing to p can be deleted together.
    """
    parts = set(lam.parts)
    moves: list[tuple[int, ...]] = []
    for x in lam.parts:
        if x == p or (x > p and x - p not in parts):
            moves.append((x,))
        y = p - x
        if 0 < y < x and y in parts:
            moves.append((x, y))
    return moves


def remove_bar(lam: BarPartition, move: tuple[int, ...], p: int) -> BarPartition:
    parts = list(lam.parts)
    if len(move) == 2:
        parts.remove(move[0])
        parts.remove(move[1])
    else:
        (x,) = move
        parts.remove(x)
        if x > p:
            parts.append(x - p)
    return BarPartition(tuple(sorted(parts, reverse=True)))


def p_bar_core(lam: BarPartition, p: int) -> BarPartition:
    _check_odd_p(p)
    if not isinstance(lam, BarPartition):
        lam = BarPartition(lam.parts)
    while True:
        moves = removable_bars(lam, p)
        if not moves:
            return lam
        lam = remove_bar(lam, max(moves), p)


def is_bar_core(lam: BarPartition, p: int) -> bool:
    _check_odd_p(p)
    return not removable_bars(lam, p)


# --- enumeration -------------------------------------------------------------

def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _strict_partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _strict_partitions(n - first, first - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(t) for t in _partitions(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_all_partitions(n))


def enumerate_strict_partitions(n: int) -> list[BarPartition]:
    if n < 0:
        raise ValueError("n must be non-negative")
    return [BarPartition(t) for t in _strict_partitions(n, n)]


@lru_cache(maxsize=None)
def _p_cores(n: int, p: int) -> tuple[Partition, ...]:
    return tuple(lam for lam in _all_partitions(n) if is_p_core(lam, p))


def enumerate_p_cores(n: int, p: int) -> list[Partition]:
    _check_p(p)
    return list(_p_cores(n, p))


def enumerate_self_conjugate_p_cores(n: int, p: int) -> list[Partition]:
    _check_p(p)
    return [lam for lam in _all_partitions(n) if is_self_conjugate(lam) and is_p_core(lam, p)]


@lru_cache(maxsize=None)
def _bar_cores(n: int, p: int) -> tuple[BarPartition, ...]:
    return tuple(lam for lam in enumerate_strict_partitions(n) if is_bar_core(lam, p))


def enumerate_bar_cores(n: int, p: int) -> list[BarPartition]:
    _check_odd_p(p)
    return list(_bar_cores(n, p))
