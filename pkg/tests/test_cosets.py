from __future__ import annotations

import pytest

from tracerepair.cosets import enumerate_cosets, filter_cosets, repair_space_dim

SEVEN_FIELDS = ((2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (5, 2), (8, 2))


def test_gf9_cosets_golden() -> None:
    cc = enumerate_cosets(3, 2)
    assert [c.elements for c in cc.cosets] == [(0,), (1, 3), (2, 6), (4,), (5, 7)]


def test_small_binary_cosets() -> None:
    assert [c.elements for c in enumerate_cosets(2, 2).cosets] == [(0,), (1, 2)]
    # orbit order follows repeated multiplication, not sorting
    assert [c.elements for c in enumerate_cosets(2, 3).cosets] == [(0,), (1, 2, 4), (3, 6, 5)]


def test_enumerate_rejects_bad_input() -> None:
    with pytest.raises(ValueError):
        enumerate_cosets(6, 2)  # not a prime power
    with pytest.raises(ValueError):
        enumerate_cosets(3, 0)


@pytest.mark.parametrize("q,t", SEVEN_FIELDS)
def test_partition_properties(q, t) -> None:
    cc = enumerate_cosets(q, t)
    mod = q ** t - 1
    all_elems = [e for c in cc.cosets for e in c.elements]
    assert sorted(all_elems) == list(range(mod))
    for c in cc.cosets:
        assert c.rep == min(c.elements)
        assert t % c.size == 0
        # closure under multiplication by q
        assert {e * q % mod for e in c.elements} == set(c.elements)
        # orbit order: each element is q times the previous
        for a, b in zip(c.elements, c.elements[1:]):
            assert b == a * q % mod
    # collections are ordered by representative
    reps = [c.rep for c in cc.cosets]
    assert reps == sorted(reps)


@pytest.mark.parametrize("q,t", SEVEN_FIELDS)
def test_coset_of_lookup(q, t) -> None:
    cc = enumerate_cosets(q, t)
    for c in cc.cosets:
        for e in c.elements:
            assert cc.coset_of(e) is c


def test_gf9_filter_golden_k3() -> None:
    cc = enumerate_cosets(3, 2)
    fc = filter_cosets(cc, 3)
    assert [c.elements for c in fc.selected] == [(2, 6), (4,)]
    assert [c.elements for c in fc.removed] == [(0,), (1, 3), (5, 7)]
    assert fc.dim == 3


def test_gf9_dim_series() -> None:
    cc = enumerate_cosets(3, 2)
    assert [repair_space_dim(cc, k) for k in range(1, 9)] == [6, 5, 3, 1, 1, 0, 0, 0]


def test_k1_keeps_zero_coset() -> None:
    cc = enumerate_cosets(3, 2)
    fc = filter_cosets(cc, 1)
    assert [c.rep for c in fc.selected] == [0, 2, 4, 5]
    assert [c.rep for c in fc.removed] == [1]
    assert fc.dim == 6


def test_gf4_degenerates() -> None:
    cc = enumerate_cosets(2, 2)
    assert repair_space_dim(cc, 1) == 1
    assert repair_space_dim(cc, 2) == 0


def test_gf64_over_gf8_extremes() -> None:
    cc = enumerate_cosets(8, 2)
    assert repair_space_dim(cc, 1) == 61
    assert repair_space_dim(cc, 56) == 0


@pytest.mark.parametrize("q,t", SEVEN_FIELDS)
def test_filter_invariants(q, t) -> None:
    cc = enumerate_cosets(q, t)
    n = q ** t
    for k in range(1, n):
        fc = filter_cosets(cc, k)
        assert set(fc.selected) | set(fc.removed) == set(cc.cosets)
        assert not set(fc.selected) & set(fc.removed)
        assert fc.dim == sum(c.size for c in fc.selected)
        for c in fc.selected:
            assert 1 not in c.elements
            if k >= 2:
                assert c.rep != 0
                assert max(c.elements) <= n - k
        # no more cosets are lost than k
        assert len(fc.removed) <= k


@pytest.mark.parametrize("q,t", SEVEN_FIELDS)
def test_selection_shrinks_as_k_grows(q, t) -> None:
    cc = enumerate_cosets(q, t)
    n = q ** t
    prev = None
    for k in range(2, n):
        fc = filter_cosets(cc, k)
        reps = {c.rep for c in fc.selected}
        if prev is not None:
            assert reps <= prev[0]
            assert fc.dim <= prev[1]
        prev = (reps, fc.dim)


def test_filter_k_out_of_range() -> None:
    cc = enumerate_cosets(3, 2)
    with pytest.raises(ValueError):
        filter_cosets(cc, 0)
    with pytest.raises(ValueError):
        filter_cosets(cc, 9)


def test_two_element_field_refused() -> None:
    cc = enumerate_cosets(2, 1)
    with pytest.raises(ValueError):
        filter_cosets(cc, 1)
