from __future__ import annotations

from collections import Counter

import pytest

from tracerepair.field import FieldTower, construct_field


def test_basic_parameters(gf4, gf9, gf64_over_gf8) -> None:
    assert (gf4.q, gf4.order, gf4.subfield_stride) == (2, 4, 3)
    assert (gf9.q, gf9.order, gf9.subfield_stride) == (3, 9, 4)
    assert (gf64_over_gf8.q, gf64_over_gf8.order) == (8, 64)
    assert gf64_over_gf8.subfield_stride == 9


def test_construction_rejects_bad_input() -> None:
    with pytest.raises(ValueError):
        construct_field(4, 1, 1)  # not prime
    with pytest.raises(ValueError):
        construct_field(2, 0, 2)
    with pytest.raises(ValueError):
        construct_field(2, 1, 21)  # 2^21 over the table limit


def test_construction_deterministic() -> None:
    a = construct_field(3, 1, 2)
    b = construct_field(3, 1, 2)
    assert a.modulus == b.modulus
    assert a.primitive_element == b.primitive_element
    assert a._antilog == b._antilog


def test_log_antilog_roundtrip(gf9, gf64_over_gf8) -> None:
    for ctx in (gf9, gf64_over_gf8):
        seen = set()
        for e in range(ctx.order - 1):
            x = ctx.exp(e)
            assert ctx.log(x) == e
            seen.add(x)
        assert seen == set(range(1, ctx.order))


def test_primitive_element_order(gf9, gf16_over_gf4, gf25) -> None:
    for ctx in (gf9, gf16_over_gf4, gf25):
        n1 = ctx.order - 1
        assert ctx.pow(ctx.primitive_element, n1) == 1
        for d in range(1, n1):
            if n1 % d == 0 and d < n1:
                assert ctx.pow(ctx.primitive_element, d) != 1 or d == n1


def test_mul_via_exponents(gf9) -> None:
    # omega^3 * omega^6 wraps to omega^1
    assert gf9.mul(gf9.exp(3), gf9.exp(6)) == gf9.exp(1)
    assert gf9.mul(0, gf9.exp(5)) == 0


def test_additive_structure(gf9, gf25) -> None:
    for ctx in (gf9, gf25):
        for x in ctx.elements():
            assert ctx.add(x, ctx.neg(x)) == 0
            assert ctx.add(x, 0) == x
            assert ctx.sub(x, x) == 0
        # commutativity + associativity spot checks on the full square
        for x in ctx.elements():
            for y in ctx.elements():
                assert ctx.add(x, y) == ctx.add(y, x)


def test_distributivity_exhaustive_gf9(gf9) -> None:
    for x in gf9.elements():
        for y in gf9.elements():
            for z in (0, 1, gf9.exp(3)):
                lhs = gf9.mul(x, gf9.add(y, z))
                rhs = gf9.add(gf9.mul(x, y), gf9.mul(x, z))
                assert lhs == rhs


def test_inverse(gf9) -> None:
    assert gf9.inv(gf9.exp(5)) == gf9.exp(3)
    for x in gf9.nonzero_elements():
        assert gf9.mul(x, gf9.inv(x)) == 1
    with pytest.raises(ZeroDivisionError):
        gf9.inv(0)
    with pytest.raises(ZeroDivisionError):
        gf9.pow(0, -1)


def test_pow_edge_cases(gf9) -> None:
    assert gf9.pow(0, 0) == 1
    assert gf9.pow(0, 5) == 0
    assert gf9.pow(gf9.exp(1), 8) == 1


def test_trace_values(gf4, gf9) -> None:
    # trace of 1 is t mod p (as a base-field constant)
    assert gf4.trace(1) == 0          # 2 mod 2
    assert gf9.trace(1) == 2          # 2 mod 3
    assert gf9.trace(0) == 0


def test_trace_lands_in_base_field(gf9, gf8, gf16_over_gf4, gf64_over_gf8) -> None:
    for ctx in (gf9, gf8, gf16_over_gf4, gf64_over_gf8):
        for x in ctx.elements():
            assert ctx.in_base_field(ctx.trace(x))


def test_trace_uniform_fibers(gf9, gf16_over_gf4) -> None:
    # every base-field value is hit exactly q^(t-1) times
    for ctx in (gf9, gf16_over_gf4):
        counts = Counter(ctx.trace(x) for x in ctx.elements())
        expect = ctx.order // ctx.q
        assert set(counts) == set(ctx.base_field_elements())
        assert all(c == expect for c in counts.values())


def test_trace_is_b_linear(gf9) -> None:
    bvals = gf9.base_field_elements()
    for x in gf9.elements():
        for y in gf9.elements():
            assert gf9.trace(gf9.add(x, y)) == gf9.add(gf9.trace(x), gf9.trace(y))
        for b in bvals:
            assert gf9.trace(gf9.mul(b, x)) == gf9.mul(b, gf9.trace(x))


def test_frobenius_fixes_exactly_base_field(gf9, gf16_over_gf4, gf64_over_gf8) -> None:
    for ctx in (gf9, gf16_over_gf4, gf64_over_gf8):
        fixed = {x for x in ctx.elements() if ctx.frobenius(x) == x}
        assert fixed == set(ctx.base_field_elements())
        assert len(fixed) == ctx.q
        # Frobenius is a bijection of F
        assert len({ctx.frobenius(x) for x in ctx.elements()}) == ctx.order


def test_base_field_is_power_subgroup(gf9, gf64_over_gf8) -> None:
    for ctx in (gf9, gf64_over_gf8):
        s = ctx.subfield_stride
        expect = {0} | {ctx.exp(j * s) for j in range(ctx.q - 1)}
        assert set(ctx.base_field_elements()) == expect


def test_trivial_tower_t1() -> None:
    ctx = construct_field(3, 1, 1)
    for x in ctx.elements():
        assert ctx.trace(x) == x
        assert ctx.in_base_field(x)
    assert ctx.dual_basis == (1,)


def test_dual_basis_pairing(gf4, gf9, gf8, gf16_over_gf4, gf64_over_gf8) -> None:
    for ctx in (gf4, gf9, gf8, gf16_over_gf4, gf64_over_gf8):
        t = ctx.t
        for i in range(t):
            for j in range(t):
                got = ctx.trace(ctx.mul(ctx.power_basis[i], ctx.dual_basis[j]))
                assert got == (1 if i == j else 0)


def test_base_coords_roundtrip(gf9, gf64_over_gf8) -> None:
    for ctx in (gf9, gf64_over_gf8):
        for x in ctx.elements():
            coords = ctx.base_coords(x)
            assert len(coords) == ctx.t
            assert all(ctx.in_base_field(c) for c in coords)
            assert ctx.from_base_coords(coords) == x


def test_base_coords_of_base_elements(gf9) -> None:
    # a base-field element is its own first coordinate
    for b in gf9.base_field_elements():
        assert gf9.base_coords(b) == (b, 0)
