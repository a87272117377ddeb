from __future__ import annotations

import types

import pytest

from tracerepair.cosets import enumerate_cosets, repair_space_dim
from tracerepair.oracle import (VERIFICATION_FIELDS, brute_dim,
                                brute_repair_check, equivalence_report,
                                rank_over_base)
from tracerepair.repair import gw_max_k


def test_brute_dim_gf9_known_values(gf9) -> None:
    assert brute_dim(gf9, 3) == 3
    assert [brute_dim(gf9, k) for k in range(1, 9)] == [6, 5, 3, 1, 1, 0, 0, 0]


def test_brute_dim_gf4(gf4) -> None:
    assert brute_dim(gf4, 1) == 1
    assert brute_dim(gf4, 2) == 0


def test_brute_dim_validates(gf9) -> None:
    with pytest.raises(ValueError):
        brute_dim(gf9, 0)
    with pytest.raises(ValueError):
        brute_dim(gf9, 9)
    big = types.SimpleNamespace(order=1 << 13)
    with pytest.raises(ValueError):
        brute_dim(big, 1)


def test_formula_matches_oracle_small_fields(gf4, gf9, gf8, gf16_over_gf2) -> None:
    for ctx in (gf4, gf9, gf8, gf16_over_gf2):
        cc = enumerate_cosets(ctx.q, ctx.t)
        for k in range(1, ctx.order):
            assert repair_space_dim(cc, k) == brute_dim(ctx, k), (ctx, k)


def test_rank_over_base(gf9) -> None:
    ident = [[1, 0], [0, 1]]
    assert rank_over_base(gf9, ident) == 2
    assert rank_over_base(gf9, [[0, 0]]) == 0
    # entries are GF(3) constants; [[1,2],[2,1]] is singular there (det = -3)
    assert rank_over_base(gf9, [[1, 2], [2, 1]]) == 1
    assert rank_over_base(gf9, [[1, 2], [0, 1]]) == 2


def test_rank_over_base_rejects_outsiders(gf9) -> None:
    with pytest.raises(ValueError):
        rank_over_base(gf9, [[gf9.exp(1), 0]])


def test_repair_round_trip_every_field(gf4, gf9, gf8, gf16_over_gf4,
                                       gf16_over_gf2, gf25, gf64_over_gf8) -> None:
    # light pass over the whole matrix; the acceptance suite goes deeper
    for ctx in (gf4, gf9, gf8, gf16_over_gf4, gf16_over_gf2, gf25, gf64_over_gf8):
        kmax = gw_max_k(ctx)
        for k in sorted({1, 2, kmax}):
            trials = None if ctx.order ** k <= 1000 else 40
            assert brute_repair_check(ctx, k, r=k % (ctx.order - 1), trials=trials,
                                      seed=13), (ctx, k)


def test_brute_repair_check_exhaustive_mode(gf4) -> None:
    # 16 messages, swept exhaustively by default
    assert brute_repair_check(gf4, 2, 0)


def test_equivalence_report_clean() -> None:
    rows = equivalence_report(fields=((2, 1, 2), (3, 1, 2)))
    assert len(rows) == 3 + 8
    assert all(r["ok"] for r in rows)


def test_equivalence_report_fault_injection() -> None:
    rows = equivalence_report(fields=((2, 1, 2),), perturb=1)
    assert all(not r["ok"] for r in rows)
