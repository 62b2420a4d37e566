import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from dunklsb.coxeter import build_root_system, generate_group, make_multiplicity, orbit_partition
from dunklsb.dunklkernel import (
    build_kernel_blocks,
    eval_dunkl_kernel,
    heat_kernel,
    reproducing_kernel,
    sb_kernel,
    tail_estimate,
)
from dunklsb.errors import InvalidParameterError, PrecisionFailure
from dunklsb.harness.oracles import z2_kernel
from dunklsb.polyring import DunklContext, monomials

from conftest import make_ctx


def cpoint(rng, n, r):
    v = rng.normal(size=2 * n)
    v *= r * rng.uniform() ** (1 / (2 * n)) / np.linalg.norm(v)
    return v[:n] + 1j * v[n:]


def test_first_block_is_one(b2_table):
    assert b2_table.blocks[0][0, 0] == 1


def test_classical_blocks(classical2):
    table = build_kernel_blocks(classical2, 8)
    for n in range(9):
        mons = monomials(2, n)
        for i, a in enumerate(mons):
            for j, b in enumerate(mons):
                # <x,y>^n / n! = sum over a of x^a y^a / a!
                want = Fraction(1, math.factorial(a[0]) * math.factorial(a[1])) if a == b else 0
                assert table.blocks[n][i, j] == want


def test_blocks_symmetric(b2_table):
    for k in b2_table.blocks:
        assert (k == k.T).all()


def test_construction_methods_agree(b2):
    a = build_kernel_blocks(b2, 12, "linear-solve")
    b = build_kernel_blocks(b2, 12, "basis-sum")
    for ka, kb in zip(a.blocks, b.blocks):
        assert (ka == kb).all()


def test_rank_one_oracle_relative(z2):
    table = build_kernel_blocks(z2, 40)
    rng = np.random.default_rng(5)
    for _ in range(50):
        z, w = cpoint(rng, 1, 2.0)[0], cpoint(rng, 1, 2.0)[0]
        got = eval_dunkl_kernel(table, [z], [w]).value
        assert abs(got - z2_kernel(1, z, w)) <= 1e-12 * abs(z2_kernel(1, z, w))


def test_rank_one_value(z2_table):
    assert eval_dunkl_kernel(z2_table, [1], [1]).value == pytest.approx(1.543081, abs=1e-6)


def test_origin(b2_table):
    rng = np.random.default_rng(0)
    for _ in range(5):
        assert eval_dunkl_kernel(b2_table, [0, 0], cpoint(rng, 2, 2)).value == 1


def test_global_bound(b2_table):
    rng = np.random.default_rng(11)
    for _ in range(100):
        z, w = cpoint(rng, 2, 2), cpoint(rng, 2, 2)
        assert abs(eval_dunkl_kernel(b2_table, z, w).value) <= math.exp(np.linalg.norm(z) * np.linalg.norm(w)) * (1 + 1e-12)


def test_group_invariance(b2_table, b2):
    rng = np.random.default_rng(2)
    mats = [np.asarray(g, dtype=float) for g in b2.group.elements]
    for _ in range(50):
        z, w = cpoint(rng, 2, 1.5), cpoint(rng, 2, 1.5)
        e = eval_dunkl_kernel(b2_table, z, w).value
        for g in mats:
            assert abs(eval_dunkl_kernel(b2_table, g @ z, g @ w).value - e) <= 1e-12


def test_scaling(b2_table):
    rng = np.random.default_rng(4)
    for lam in (0.5, 2.0):
        for _ in range(10):
            z, w = cpoint(rng, 2, 1), cpoint(rng, 2, 1)
            a = eval_dunkl_kernel(b2_table, lam * z, w)
            b = eval_dunkl_kernel(b2_table, z, lam * w)
            assert abs(a.value - b.value) <= a.tail + b.tail + 1e-13


def test_tail_refusal(b2_table):
    with pytest.raises(PrecisionFailure) as err:
        eval_dunkl_kernel(b2_table, [4, 0], [4, 0], tol=1e-12)
    assert err.value.error > 1e-12
    assert eval_dunkl_kernel(b2_table, [0.1, 0], [0.2, 0], tol=1e-12).heuristic_tail


def test_tail_majorant_rank_one(z2):
    # the tail estimate is heuristic; check it against the true remainder for the rank-one kernel
    table = build_kernel_blocks(z2, 16)
    for x in (0.5, 1.0, 2.0, 3.0):
        err = abs(eval_dunkl_kernel(table, [x], [x]).value - z2_kernel(1, x, x))
        assert err <= tail_estimate(x * x, 16)


def test_heat_kernel_basics(b2_table, classical1):
    rng = np.random.default_rng(8)
    for t in (0.5, 2.0):
        q = rng.normal(size=2)
        assert heat_kernel(b2_table, t, [0, 0], q) == pytest.approx(math.exp(-q @ q / (2 * t)), rel=1e-14)
        x = rng.normal(size=2)
        assert abs(heat_kernel(b2_table, t, x, q) - heat_kernel(b2_table, t, q, x)) <= 1e-12
    table = build_kernel_blocks(classical1, 30)
    for x, q in rng.normal(size=(10, 2)):
        assert heat_kernel(table, 1, [x], [q]) == pytest.approx(math.exp(-(x - q) ** 2 / 2), abs=1e-12)


def test_version_a_special_values(b2_table, classical2):
    rng = np.random.default_rng(9)
    t = 0.75
    z, q = cpoint(rng, 2, 1), rng.normal(size=2)
    assert abs(sb_kernel(b2_table, "A", t, z, [0, 0]) - cmath.exp(-(z @ z) / (2 * t))) < 1e-14
    assert abs(sb_kernel(b2_table, "A", t, [0, 0], q) - math.exp(-(q @ q) / (4 * t))) < 1e-14
    table = build_kernel_blocks(classical2, 30)
    want = cmath.exp(-(z @ z) / (2 * t) - (q @ q) / (4 * t) + (z @ q) / t)
    assert abs(sb_kernel(table, "A", t, z, q) - want) < 1e-12


def test_version_c_relations(b2_table):
    rng = np.random.default_rng(10)
    for t in (0.5, 1.0, 2.0):
        for _ in range(100):
            z, q = cpoint(rng, 2, 2), rng.uniform(-1, 1, 2) * 2 / math.sqrt(2)
            c = sb_kernel(b2_table, "C", t, z, q)
            assert abs(c - sb_kernel(b2_table, "A", t, [0, 0], q) * sb_kernel(b2_table, "A", t, z, q)) <= 1e-12
            rhs = sb_kernel(b2_table, "A", 2 * t, z, [0, 0]) * sb_kernel(b2_table, "A", t / 2, z / 2, q)
            assert abs(c - rhs) <= 1e-12


def test_version_b_is_ratio(b2_table):
    z, q = np.array([0.3 + 0.1j, -0.2j]), np.array([0.5, -1.0])
    b = sb_kernel(b2_table, "B", 1, z, q)
    assert abs(b - heat_kernel(b2_table, 1, z, q) / math.exp(-(q @ q) / 2)) < 1e-14


def test_unknown_version(b2_table):
    with pytest.raises(InvalidParameterError):
        sb_kernel(b2_table, "D", 1, [0, 0], [0, 0])


def test_reproducing_kernel(b2_table):
    rng = np.random.default_rng(12)
    pts = [cpoint(rng, 2, 2) for _ in range(8)]
    assert reproducing_kernel(b2_table, 1, [0, 0], pts[0]) == 1
    for t in (0.5, 1, 2):
        gram = np.array([[reproducing_kernel(b2_table, t, a, b) for b in pts] for a in pts])
        assert np.abs(gram - gram.conj().T).max() < 1e-12
        assert np.linalg.eigvalsh((gram + gram.conj().T) / 2).min() >= -1e-10


def test_floating_regime_matches_exact(b2_table):
    s = 2 ** -0.5
    roots = [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (s, s), (-s, -s), (s, -s), (-s, s)]
    rs = build_root_system(roots=roots)
    assert not rs.exact
    g = generate_group(rs)
    orbits = orbit_partition(rs, g)
    # orbit order follows root order here: axis roots first (short), diagonals (long)
    ctx = DunklContext(rs, make_multiplicity(orbits, [Fraction(1, 2), Fraction(3, 2)]), g)
    table = build_kernel_blocks(ctx, 24)
    rng = np.random.default_rng(13)
    for _ in range(20):
        z, w = cpoint(rng, 2, 1.5), cpoint(rng, 2, 1.5)
        assert abs(eval_dunkl_kernel(table, z, w).value - eval_dunkl_kernel(b2_table, z, w).value) < 1e-10


def test_dihedral_three_kernel():
    ctx = make_ctx("I2", 2, [1], m=3)
    table = build_kernel_blocks(ctx, 16)
    rng = np.random.default_rng(14)
    mats = [np.asarray(g, dtype=float) for g in ctx.group.elements]
    for _ in range(10):
        z, w = cpoint(rng, 2, 1), cpoint(rng, 2, 1)
        e = eval_dunkl_kernel(table, z, w).value
        assert abs(eval_dunkl_kernel(table, w, z).value - e) < 1e-10
        for g in mats:
            assert abs(eval_dunkl_kernel(table, g @ z, g @ w).value - e) < 1e-10
