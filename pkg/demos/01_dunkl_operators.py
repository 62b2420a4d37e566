"""Dunkl operators on B2 and the Dunkl kernel built from them.

Run with ``python3 demos/01_dunkl_operators.py``.
"""

from fractions import Fraction

import numpy as np

from dunklsb import (
    DunklContext,
    Polynomial,
    build_kernel_blocks,
    build_root_system,
    dunkl_apply,
    eval_dunkl_kernel,
    generate_group,
    make_multiplicity,
    orbit_partition,
)
from dunklsb.harness.oracles import z2_kernel

# %% B2: eight roots, a group of order eight, two orbits (short and long roots)
rs = build_root_system("B", 2)
group = generate_group(rs)
orbits = orbit_partition(rs, group)
print(len(rs), "roots, group order", group.order, ",", len(orbits), "orbits")

mu = make_multiplicity(orbits, [Fraction(1, 2), Fraction(3, 2)])
ctx = DunklContext(rs, mu, group)
print("gamma =", ctx.gamma)

# %% The Dunkl operators commute, exactly, even though each one has
# reflection-difference terms
p = Polynomial(2, {(3, 1): 1, (0, 4): Fraction(-2, 3), (1, 1): 5})
e1, e2 = [1, 0], [0, 1]
lhs = dunkl_apply(ctx, e1, dunkl_apply(ctx, e2, p))
rhs = dunkl_apply(ctx, e2, dunkl_apply(ctx, e1, p))
print("T1 T2 p =", lhs)
print("commutator vanishes:", lhs == rhs)

# %% The kernel, degree by degree; E(z, w) deforms exp(<z, w>)
table = build_kernel_blocks(ctx, 24)
z, w = np.array([0.6, -0.2]), np.array([0.3 + 0.4j, 1.1])
val = eval_dunkl_kernel(table, z, w)
print("E(z, w) =", val.value, " tail estimate", f"{val.tail:.1e}")
print("exp(<z, w>) =", np.exp(z @ w))

# %% In rank one the kernel has an explicit coefficient recursion
rs1 = build_root_system("A1^N", 1)
g1 = generate_group(rs1)
z2 = DunklContext(rs1, make_multiplicity(orbit_partition(rs1, g1), [Fraction(1)]), g1)
t1 = build_kernel_blocks(z2, 24)
for x in (0.5, 1.5, -2.0):
    a = eval_dunkl_kernel(t1, [x], [1.0]).value
    print(f"x = {x:5}: blocks {a.real:.15f}  recursion {z2_kernel(1, x, 1.0).real:.15f}")
