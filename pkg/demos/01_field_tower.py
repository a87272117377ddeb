"""
A tower of finite fields: arithmetic, traces, and the dual basis
================================================================

Everything downstream (cosets, repair plans, bandwidth accounting)
rests on one object: a field F = GF(q^t) sitting above its subfield
B = GF(q).  This script pokes at the tower GF(9) over GF(3) until the
moving parts are visible.
"""

from tracerepair import construct_field

# p=3, m=1, t=2: B = GF(3), F = GF(9).
ctx = construct_field(3, 1, 2)
print(f"F = GF({ctx.order}) over B = GF({ctx.q}), characteristic {ctx.p}")
print(f"modulus polynomial encoding: {ctx.modulus}")
print(f"primitive element w = {ctx.primitive_element}")
print()

# Elements are ints: the base-p digits are the polynomial coefficients.
# 5 = 1*3 + 2 stands for x + 2.  Arithmetic never leaves the ints.
a, b = 5, 7
print(f"{a} + {b} = {ctx.add(a, b)}")
print(f"{a} * {b} = {ctx.mul(a, b)}")
print(f"{a}^-1  = {ctx.inv(a)}, check: {ctx.mul(a, ctx.inv(a))}")
print()

# Every nonzero element is a power of w, so multiplication is just
# addition of logs.  The tables make that explicit.
print("e  w^e   log(w^e)")
for e in range(ctx.order - 1):
    x = ctx.exp(e)
    print(f"{e}   {x:3d}   {ctx.log(x)}")
print()

# The trace maps F onto B by summing Frobenius conjugates:
# trace(x) = x + x^q + ... + x^(q^(t-1)).  It is B-linear and every
# fiber has the same size q^(t-1).
print("trace values:")
for x in range(ctx.order):
    tr = ctx.trace(x)
    assert ctx.in_base_field(tr)
    print(f"  trace({x}) = {tr}")
from collections import Counter
fibers = Counter(ctx.trace(x) for x in ctx.elements())
print(f"fiber sizes: {dict(sorted(fibers.items()))}")
print()

# B itself is exactly the set of Frobenius fixed points.
fixed = sorted(x for x in ctx.elements() if ctx.frobenius(x) == x)
print(f"Frobenius fixed points: {fixed}")
print(f"base_field_elements():  {sorted(ctx.base_field_elements())}")
print()

# The power basis (1, w, ..., w^(t-1)) has a dual basis (v_0, ..,
# v_(t-1)) with trace(u_i * v_j) = [i == j].  Coordinates of any x
# over B are then plain traces: c_i = trace(v_i * x).
print(f"power basis: {ctx.power_basis}")
print(f"dual basis:  {ctx.dual_basis}")
for i, u in enumerate(ctx.power_basis):
    row = [ctx.trace(ctx.mul(u, v)) for v in ctx.dual_basis]
    print(f"  trace(u_{i} * v_j) = {row}")

x = 7
coords = ctx.base_coords(x)
print(f"coords of {x} over B: {coords}")
print(f"rebuilt: {ctx.from_base_coords(coords)}")
