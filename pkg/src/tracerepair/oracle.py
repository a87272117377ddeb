"""Brute-force cross-checks, independent of the coset machinery.

The repair-space dimension is recomputed here straight from its
definition: a vector supported on the nonzero points with entries
b_a / a, b_a in B, that annihilates every monomial codeword of degree
below k.  Expanding each F-linear condition into t B-linear ones gives a
(k t) x (n - 1) system over B whose nullity must match the coset count.
Nothing from cosets.py or repair.py is consulted on the way.
"""

from __future__ import annotations

import itertools
import random

from . import linalg
from .cosets import enumerate_cosets, filter_cosets
from .field import FieldTower, construct_field
from .repair import build_plan, repair_pipeline
from .rs import encode, erase_zero

# The field/k matrix exercised by the verify command: (p, m, t).
VERIFICATION_FIELDS = (
    (2, 1, 2),   # GF(4)  / GF(2)
    (3, 1, 2),   # GF(9)  / GF(3)
    (2, 2, 2),   # GF(16) / GF(4)
    (2, 1, 3),   # GF(8)  / GF(2)
    (2, 1, 4),   # GF(16) / GF(2)
    (5, 1, 2),   # GF(25) / GF(5)
    (2, 3, 2),   # GF(64) / GF(8)
)

_BRUTE_LIMIT = 1 << 12


def brute_dim(ctx: FieldTower, k: int) -> int:
    """Nullity over B of the dual-membership system, from first principles."""
    n = ctx.order
    if n > _BRUTE_LIMIT:
        raise ValueError(f"field of order {n} too large for brute force")
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must be in [1, {n - 1}], got {k}")
    mod = n - 1
    rows = []
    for j in range(k):
        # condition sum_a (b_a / a) a^j = 0, i.e. coefficients a^(j-1)
        coords = [ctx.base_coords(ctx.exp(e * (j - 1) % mod)) for e in range(mod)]
        for l in range(ctx.t):
            rows.append([coords[e][l] for e in range(mod)])
    return mod - linalg.rank(ctx, rows)


def rank_over_base(ctx: FieldTower, mat) -> int:
    """Rank of a matrix whose entries must all lie in B."""
    for row in mat:
        for x in row:
            if not ctx.in_base_field(x):
                raise ValueError(f"entry {x} is not in the base field")
    return linalg.rank(ctx, mat)


def brute_repair_check(ctx: FieldTower, k: int, r: int, trials: int | None = None,
                       seed: int = 0, exhaustive_limit: int = 20000) -> bool:
    """Encode, erase, repair, compare; over all messages or a random sample.

    With trials=None the message space is swept exhaustively when it has
    at most exhaustive_limit elements, else 1000 seeded random messages.
    """
    n = ctx.order
    cc = enumerate_cosets(ctx.q, ctx.t)
    plan = build_plan(ctx, filter_cosets(cc, k), r)
    if trials is None and n ** k <= exhaustive_limit:
        messages = itertools.product(range(n), repeat=k)
    else:
        rng = random.Random(seed)
        count = trials if trials is not None else 1000
        messages = (tuple(rng.randrange(n) for _ in range(k)) for _ in range(count))
    for msg in messages:
        cw = encode(ctx, msg)
        got, _ = repair_pipeline(ctx, k, r, erase_zero(cw), plan=plan)
        if got != cw.values[0]:
            return False
    return True


def equivalence_report(fields=VERIFICATION_FIELDS, perturb: int = 0) -> list[dict]:
    """Formula vs brute-force dimension for every k of every field.

    perturb shifts the formula value and exists only so the verify
    command's failure path can be exercised.
    """
    rows = []
    for p, m, t in fields:
        ctx = construct_field(p, m, t)
        cc = enumerate_cosets(ctx.q, ctx.t)
        for k in range(1, ctx.order):
            formula = filter_cosets(cc, k).dim + perturb
            oracle = brute_dim(ctx, k)
            rows.append({
                "p": p, "m": m, "t": t, "k": k,
                "formula": formula, "oracle": oracle,
                "ok": formula == oracle,
            })
    return rows
