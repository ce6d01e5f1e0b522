import struct
from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockcore import counting
from blockcore.counting import (
    CountCache,
    k,
    k_sym,
    l_block_An,
    l_block_An_p2,
    l_block_Sn,
    l_spin_An_weight1,
    partition_count,
    self_conjugate_count,
    spin_block_sign,
)
from blockcore.partitions import enumerate_p_cores, enumerate_partitions, is_self_conjugate

from .oracles import bar, symmetric_tuples, tuples_of_partitions


def coin_change_partition_counts(n_max):
    counts = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for m in range(part, n_max + 1):
            counts[m] += counts[m - part]
    return counts


@pytest.mark.parametrize("w, expected", [(0, 1), (2, 2), (5, 7)])
def test_partition_count_examples(w, expected):
    assert partition_count(w) == expected


def test_partition_count_matches_enumeration():
    for w in range(26):
        assert partition_count(w) == len(enumerate_partitions(w))


def test_partition_count_matches_coin_change_dp():
    counts = coin_change_partition_counts(500)
    assert [partition_count(w) for w in range(501)] == counts
    assert partition_count(500) > 2**64  # arbitrary precision exercised


def test_partition_count_rejects_negative():
    with pytest.raises(ValueError):
        partition_count(-1)


@pytest.mark.parametrize("a, w, expected", [(2, 2, 5), (4, 1, 4), (0, 0, 1), (3, 0, 1), (0, 3, 0), (2, 1, 2)])
def test_k_examples(a, w, expected):
    assert k(a, w) == expected


def test_k_one_is_partition_count():
    for w in range(61):
        assert k(1, w) == partition_count(w)


def test_k_matches_tuple_enumeration():
    for a in range(5):
        for w in range(9):
            assert k(a, w) == len(tuples_of_partitions(a, w)), (a, w)


@given(st.integers(1, 6), st.integers(0, 25))
def test_k_convolution(a, w):
    assert k(a, w) == sum(k(a - 1, w - j) * partition_count(j) for j in range(w + 1))


@pytest.mark.parametrize("a, w, expected", [(2, 2, 1), (4, 1, 0), (2, 1, 0), (0, 0, 1), (6, 0, 1)])
def test_k_sym_examples(a, w, expected):
    assert k_sym(a, w) == expected


def test_k_sym_matches_tuple_enumeration():
    for a in range(6):
        for w in range(9):
            assert k_sym(a, w) == len(symmetric_tuples(a, w)), (a, w)


@given(st.integers(0, 8), st.integers(0, 20))
def test_k_sym_bounded_by_k(a, w):
    assert 0 <= k_sym(a, w) <= k(a, w)


def test_self_conjugate_count_matches_enumeration():
    for w in range(21):
        assert self_conjugate_count(w) == sum(1 for lam in enumerate_partitions(w) if is_self_conjugate(lam))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_block_partition_identity_small(p):
    for n in range(21):
        total = sum(len(enumerate_p_cores(n - p * w, p)) * k(p, w) for w in range(n // p + 1))
        assert total == partition_count(n)


# --- l(B) formulas ---

@pytest.mark.parametrize("p, w, expected", [(5, 1, 4), (3, 1, 2), (3, 0, 1), (7, 0, 1)])
def test_l_block_Sn(p, w, expected):
    assert l_block_Sn(p, w) == expected


def test_l_block_Sn_rejects_non_odd_prime():
    for p in (2, 4, 9):
        with pytest.raises(ValueError):
            l_block_Sn(p, 1)


@pytest.mark.parametrize(
    "p, w, sc, expected",
    [(3, 2, True, 4), (5, 1, True, 2), (3, 1, False, 2), (3, 1, True, 1), (3, 2, False, 5)],
)
def test_l_block_An(p, w, sc, expected):
    assert l_block_An(p, w, sc) == expected


def test_l_block_An_three_at_least_four_from_weight_two():
    for w in range(2, 21):
        assert l_block_An(3, w, True) >= 4
        assert l_block_An(3, w, False) >= 4


def test_l_block_An_self_conjugate_large_p_at_least_two():
    for p in (5, 7, 11):
        for w in range(1, 8):
            value = l_block_An(p, w, True)
            assert value >= 2
            assert (value == 2) == (p == 5 and w == 1)


@pytest.mark.parametrize("w, expected", [(2, 3), (3, 3), (1, 1), (4, 7), (0, 2)])
def test_l_block_An_p2(w, expected):
    assert l_block_An_p2(w) == expected


def test_l_block_An_p2_at_least_three():
    assert all(l_block_An_p2(w) >= 3 for w in range(2, 21))


@pytest.mark.parametrize("core, sign", [((), 1), ((8, 5, 2), 1), ((5, 2), -1), ((2,), -1), ((4, 1), -1), ((7, 4, 1), -1)])
def test_spin_block_sign(core, sign):
    assert spin_block_sign(bar(*core)) == sign


@pytest.mark.parametrize("core, expected", [((8, 5, 2), 1), ((2,), 2), ((), 1)])
def test_l_spin_weight1(core, expected):
    assert l_spin_An_weight1(bar(*core)) == expected


# --- cache ---

def test_cache_invariants():
    c = CountCache()
    assert c.partition_count(0) == 1
    assert c.k(4, 0) == 1 and c.k(0, 3) == 0
    assert c.self_conjugate_count(0) == 1


def test_cache_round_trip(tmp_path):
    c = CountCache()
    c.partition_count(50)
    c.k(3, 6)
    c.self_conjugate_count(12)
    path = tmp_path / "counts.bin"
    c.dump(path)
    d = CountCache()
    assert d.load(path)
    assert d.p_table == c.p_table and d.k_table == c.k_table and d.sc_table == c.sc_table


def test_cache_mismatch_is_ignored(tmp_path):
    path = tmp_path / "counts.bin"
    path.write_bytes(b"garbage")
    c = CountCache()
    assert not c.load(path)
    assert c.partition_count(10) == 42

    path.write_bytes(counting.CACHE_MAGIC + struct.pack("<I", counting.CACHE_VERSION + 1) + b"x")
    assert not c.load(path)
    path.write_bytes(counting.CACHE_MAGIC + struct.pack("<I", counting.CACHE_VERSION) + b"not a pickle")
    assert not c.load(path)
    assert not c.load(tmp_path / "missing.bin")


def test_concurrent_access_is_deterministic():
    c = CountCache()
    jobs = [(a, w) for a in range(1, 7) for w in range(0, 30)]
    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(lambda aw: c.k(*aw), jobs))
    assert got == [k(a, w) for a, w in jobs]
