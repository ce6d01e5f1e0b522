"""Partition counts and the l(B) formulas for blocks of S_n, A_n and 2.A_n."""

from __future__ import annotations

import logging
import os
import pickle
import struct
import threading
from dataclasses import dataclass, field
from pathlib import Path

from .partitions import BarPartition

log = logging.getLogger(__name__)

CACHE_MAGIC = b"BLKCORE\0"
CACHE_VERSION = 1
CACHE_FILE = "counts.bin"


@dataclass
class CountCache:
    """Memo tables for p(w), k(a, w) and sc(w); guarded by one lock."""

    p_table: dict[int, int] = field(default_factory=lambda: {0: 1})
    k_table: dict[tuple[int, int], int] = field(default_factory=dict)
    sc_table: dict[int, int] = field(default_factory=lambda: {0: 1})
    lock: threading.RLock = field(default_factory=threading.RLock, repr=False, compare=False)

    def partition_count(self, w: int) -> int:
        if w < 0:
            return 0
        with self.lock:
            if w in self.p_table:
                return self.p_table[w]
            top = max(self.p_table)
            for m in range(top + 1, w + 1):
                self.p_table[m] = self._pentagonal(m)
            return self.p_table[w]

    def _pentagonal(self, m: int) -> int:
        # p(m) = sum_{j>=1} (-1)^(j+1) [p(m - j(3j-1)/2) + p(m - j(3j+1)/2)]
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            g2 = g1 + j
            term = self.p_table[m - g1] + (self.p_table[m - g2] if g2 <= m else 0)
            total += term if j % 2 else -term
            j += 1
        return total

    def k(self, a: int, w: int) -> int:
        if a < 0 or w < 0:
            raise ValueError("k(a, w) needs a >= 0 and w >= 0")
        if w == 0:
            return 1
        if a == 0:
            return 0
        with self.lock:
            key = (a, w)
            if key not in self.k_table:
                # iterate over a to keep recursion shallow
                for b in range(1, a + 1):
                    for v in range(1, w + 1):
                        if (b, v) not in self.k_table:
                            self.k_table[(b, v)] = sum(
                                self.k(b - 1, v - j) * self.partition_count(j) for j in range(v + 1)
                            )
            return self.k_table[key]

    def self_conjugate_count(self, w: int) -> int:
        """Number of self-conjugate partitions of w (= partitions into distinct odd parts)."""
        if w < 0:
            return 0
        with self.lock:
            if w not in self.sc_table:
                counts = [1] + [0] * w
                for part in range(1, w + 1, 2):
                    for m in range(w, part - 1, -1):
                        counts[m] += counts[m - part]
                self.sc_table.update(enumerate(counts))
            return self.sc_table[w]

    # -- persistence --

    def dump(self, path: Path) -> None:
        with self.lock:
            payload = pickle.dumps((self.p_table, self.k_table, self.sc_table))
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_bytes(CACHE_MAGIC + struct.pack("<I", CACHE_VERSION) + payload)
        os.replace(tmp, path)

    def load(self, path: Path) -> bool:
        """Merge tables from path; returns False (and keeps current tables) on any mismatch."""
        try:
            blob = path.read_bytes()
        except OSError:
            return False
        head = len(CACHE_MAGIC) + 4
        if blob[: len(CACHE_MAGIC)] != CACHE_MAGIC or len(blob) < head:
            log.info("ignoring cache %s: bad header", path)
            return False
        (version,) = struct.unpack("<I", blob[len(CACHE_MAGIC) : head])
        if version != CACHE_VERSION:
            log.info("ignoring cache %s: version %d", path, version)
            return False
        try:
            p_table, k_table, sc_table = pickle.loads(blob[head:])
        except Exception:
            log.info("ignoring cache %s: unreadable payload", path)
            return False
        with self.lock:
            # p_table must stay contiguous for the recurrence
            if all(m in p_table for m in range(max(p_table) + 1)):
                self.p_table.update(p_table)
            self.k_table.update(k_table)
            self.sc_table.update(sc_table)
        return True


_cache = CountCache()


def default_cache() -> CountCache:
    return _cache


def partition_count(w: int) -> int:
    if w < 0:
        raise ValueError("w must be non-negative")
    return _cache.partition_count(w)


def k(a: int, w: int) -> int:
    """Number of a-tuples of partitions of total size w."""
    return _cache.k(a, w)


def self_conjugate_count(w: int) -> int:
    if w < 0:
        raise ValueError("w must be non-negative")
    return _cache.self_conjugate_count(w)


def k_sym(a: int, w: int) -> int:
    """Number of a-tuples (l_1..l_a) of total size w with l_i = conjugate(l_{a+1-i}).

    Paired components contribute a tuple of half the length and half the size;
    for odd a the middle component must itself be self-conjugate.
    """
    if a < 0 or w < 0:
        raise ValueError("k_sym(a, w) needs a >= 0 and w >= 0")
    if a % 2 == 0:
        return 0 if w % 2 else k(a // 2, w // 2)
    half = (a - 1) // 2
    return sum(k(half, j) * self_conjugate_count(w - 2 * j) for j in range(w // 2 + 1))


def _check_odd_prime(p: int) -> None:
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p!r}")


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def l_block_Sn(p: int, w: int) -> int:
    _check_odd_prime(p)
    return k(p - 1, w)


def l_block_An(p: int, w: int, self_conjugate: bool) -> int:
    """Brauer characters of the A_n block(s) labelled by a p-core of weight w, p odd.

    For a self-conjugate core of weight 0 the value counts both of the two
    defect-zero blocks sharing that label.
    """
    _check_odd_prime(p)
    if not self_conjugate:
        return k(p - 1, w)
    total = k(p - 1, w) + 3 * k_sym(p - 1, w)
    assert total % 2 == 0
    return total // 2


def l_block_An_p2(w: int) -> int:
    if w < 0:
        raise ValueError("w must be non-negative")
    if w % 2:
        return partition_count(w)
    return partition_count(w) + partition_count(w // 2)


def spin_block_sign(core: BarPartition) -> int:
    """(-1)^(|core| - number of parts)."""
    return -1 if (core.size - len(core)) % 2 else 1


def l_spin_An_weight1(core: BarPartition) -> int:
    """l(B) for a weight-one spin 3-block of 2.A_n with the given 3-bar-core."""
    return 1 if spin_block_sign(core) == 1 else 2
