"""Hermite functions and the Segal-Bargmann transforms on B2.

The Version A transform sends the Hermite function h_{t;nu} to the
monomial-like phi_{t;nu}; Version C is an isometry onto its image space.
"""

from fractions import Fraction

import numpy as np

from dunklsb import HermiteFamily, HermiteSpan, build_kernel_blocks, build_orthogonal_basis, transform_A, transform_C
from dunklsb.coxeter import build_root_system, generate_group, make_multiplicity, orbit_partition
from dunklsb.polyring import DunklContext, gaussian_moment
from dunklsb.transforms import cspace_inner, l2_inner

rs = build_root_system("B", 2)
group = generate_group(rs)
ctx = DunklContext(rs, make_multiplicity(orbit_partition(rs, group), [Fraction(1, 2), Fraction(3, 2)]), group)

# %% An orthogonal basis of homogeneous polynomials for the Fischer pairing
basis = build_orthogonal_basis(ctx, 6)
for nu in basis.indices(2):
    print(nu, basis.q(nu), " r =", basis.r(nu))

# %% The ground-state measure is a probability measure, exactly
for t in ("1/2", "1", "2"):
    print("t =", t, " mass", gaussian_moment(ctx, 1, Fraction(t)))

# %% A_t h_nu = phi_nu at a few complex points
t = Fraction(1)
fam = HermiteFamily(basis, t)
table = build_kernel_blocks(ctx, 24)
rng = np.random.default_rng(0)
for nu in [(0, 0), (1, 0), (2, 1)]:
    img = transform_A(ctx, table, HermiteSpan.basis_element(fam, nu), t)
    z = rng.normal(size=2) + 1j * rng.normal(size=2)
    print(nu, abs(img(z) - basis.phi_eval(nu, t, z)))

# %% Version C keeps norms: <C psi, C psi>_C = ||psi||^2
psi = HermiteSpan(fam, {(0, 0): 1, (1, 1): Fraction(1, 2), (3, 0): -2})
c = transform_C(ctx, table, psi, t)
print("||psi||^2 =", float(l2_inner(ctx, psi, psi, t)), " ||C psi||^2 =", cspace_inner(ctx, t, c, c).real)
