import csv
import io
import itertools
import json
import math
from fractions import Fraction

import numpy as np
import pytest

from dunklsb.errors import InvalidParameterError, RangeError
from dunklsb.hermite import (
    HermiteFamily,
    build_orthogonal_basis,
    hermite_function_eval,
    hermite_polynomial,
)
from dunklsb.polyring import Polynomial, dilate, fischer_pair, gaussian_moment
from dunklsb.scalars import SqrtRational
from dunklsb.transforms import HermiteSpan, l2_inner

from conftest import make_ctx


def test_degree_zero(b2_basis):
    assert b2_basis.q((0, 0)) == Polynomial.constant(2, 1)
    assert b2_basis.r((0, 0)) == 1


def test_rank_one_degree_one(z2_basis):
    assert z2_basis.q((1,)) == Polynomial.variable(1, 0)
    assert z2_basis.r((1,)) == 3


@pytest.mark.parametrize("ordering", ["graded-lex", "graded-revlex"])
def test_fischer_orthogonality(b2, ordering):
    basis = build_orthogonal_basis(b2, 5, ordering)
    idx = basis.indices()
    for a, b in itertools.product(idx, idx):
        val = fischer_pair(b2, basis.q(a), basis.q(b))
        assert val == (basis.r(a) if a == b else 0)


def test_triangular_leading_monomial(b2_basis):
    # Gram-Schmidt in graded-lex order: q_nu = x^nu + earlier monomials of the same degree
    for nu in b2_basis.indices():
        q = b2_basis.q(nu)
        assert q.coeffs[nu] == 1
        assert all(sum(k) == sum(nu) and k >= nu for k in q.coeffs)


def test_hermite_zero_is_one(b2_basis):
    for t in (Fraction(1, 2), 1, 3):
        assert hermite_polynomial(b2_basis, t, (0, 0)) == Polynomial.constant(2, 1)


def test_classical_degree_one(classical1_basis):
    X = Polynomial.variable(1, 0)
    assert classical1_basis.phi((1,), 1) == X
    assert hermite_polynomial(classical1_basis, 1, (1,)) == X


def test_classical_hermite_polynomials(classical1_basis):
    # probabilists' Hermite polynomials He_n, normalised by sqrt(n!)
    X = Polynomial.variable(1, 0)
    he = [Polynomial.constant(1, 1), X]
    for n in range(1, 6):
        he.append(X * he[n] - n * he[n - 1])
    for n in range(7):
        scale, hat = hermite_polynomial(classical1_basis, 1, (n,), factored=True)
        assert hat == he[n]
        assert scale == SqrtRational(1, math.factorial(n)).inverse()


def test_dilation_law(b2):
    basis = build_orthogonal_basis(b2, 4)
    for t in (Fraction(4), Fraction(1, 9)):
        lam = 1 / Fraction(math.isqrt(t.numerator), math.isqrt(t.denominator))
        for nu in basis.indices():
            s_t, hat_t = hermite_polynomial(basis, t, nu, factored=True)
            s_1, hat_1 = hermite_polynomial(basis, 1, nu, factored=True)
            assert (s_t / s_1).as_fraction() * hat_t == dilate(lam, hat_1)


def test_moment_orthonormality(b2_basis):
    for t in (Fraction(1, 2), Fraction(2)):
        idx = b2_basis.indices(3)
        for a, b in itertools.combinations_with_replacement(idx, 2):
            sa, ha = hermite_polynomial(b2_basis, t, a, factored=True)
            sb, hb = hermite_polynomial(b2_basis, t, b, factored=True)
            m = gaussian_moment(b2_basis.ctx, ha * hb, t)
            assert sa * sb * m == (1 if a == b else 0)


def test_hermite_functions_orthonormal_exactly(z2_basis):
    fam = HermiteFamily(z2_basis, Fraction(1, 2))
    for a, b in itertools.combinations_with_replacement(z2_basis.indices(4), 2):
        val = l2_inner(z2_basis.ctx, HermiteSpan.basis_element(fam, a), HermiteSpan.basis_element(fam, b), fam.t)
        assert val == (1 if a == b else 0)


def test_function_values(b2_basis, classical1_basis):
    assert hermite_function_eval(b2_basis, Fraction(1, 3), (0, 0), [0.0, 0.0]) == 1.0
    assert hermite_function_eval(classical1_basis, 1, (1,), [1.0]) == pytest.approx(math.exp(-0.25))
    assert math.exp(-0.25) == pytest.approx(0.778801, abs=1e-6)


def test_rank_one_parity(z2_basis):
    rng = np.random.default_rng(3)
    for nu in z2_basis.indices():
        for x in rng.uniform(-2, 2, 5):
            a = hermite_function_eval(z2_basis, 2, nu, [x])
            b = hermite_function_eval(z2_basis, 2, nu, [-x])
            assert b == pytest.approx((-1) ** nu[0] * a, abs=1e-13)


def test_out_of_range(b2_basis):
    with pytest.raises(RangeError):
        b2_basis.q((7, 0))
    with pytest.raises(RangeError):
        b2_basis.q((1, 1, 1))


def test_floating_regime_refused():
    ctx = make_ctx("I2", 2, [1], m=3)
    with pytest.raises(InvalidParameterError):
        build_orthogonal_basis(ctx, 3)


def test_csv_rows(b2_basis):
    rows = list(csv.DictReader(io.StringIO(b2_basis.to_csv())))
    assert len(rows) == len(b2_basis.indices())
    row = rows[4]
    nu = tuple(int(v) for v in row["nu"].split())
    assert Fraction(row["r"]) == b2_basis.r(nu)
    assert Polynomial.from_json(2, json.loads(row["q"])) == b2_basis.q(nu)
