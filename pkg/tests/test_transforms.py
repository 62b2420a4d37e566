import cmath
import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from dunklsb.dunklkernel import build_kernel_blocks, heat_kernel
from dunklsb.errors import InvalidParameterError, TruncationError
from dunklsb.hermite import HermiteFamily
from dunklsb.polyring import Polynomial
from dunklsb.scalars import rational_power
from dunklsb.transforms import (
    GaussianPolynomial,
    HermiteSpan,
    bspace_inner,
    convolve_heat,
    cspace_inner,
    dunkl_fourier,
    g_map,
    ground_state,
    l2_inner,
    reproducing_section,
    transform_A,
    transform_B,
    transform_C,
    transform_C_via_A,
    translate_heat,
)


def cpoint(rng, n, r):
    v = rng.normal(size=2 * n)
    v *= r * rng.uniform() ** (1 / (2 * n)) / np.linalg.norm(v)
    return v[:n] + 1j * v[n:]


@pytest.fixture(scope="module")
def fam(b2_basis):
    return HermiteFamily(b2_basis, Fraction(1, 2))


def span(f, nu, kind="h"):
    return HermiteSpan.basis_element(f, nu, kind)


def test_a_ground_state_to_one(b2, b2_table, fam):
    img = transform_A(b2, b2_table, span(fam, (0, 0)), fam.t)
    for z in ([0, 0], [0.3 + 0.2j, -0.5]):
        assert abs(img(z) - 1) < 1e-12


@pytest.mark.parametrize("nu", [(1, 0), (1, 1), (0, 3), (2, 1)])
def test_a_hermite_to_phi(b2, b2_table, b2_basis, nu):
    # truncation |nu| + 16 at |z| <= 2, on the time where |z|/sqrt(t) stays below sqrt(2)
    t = Fraction(2)
    table = b2_table.truncated(sum(nu) + 16)
    img = transform_A(b2, table, span(HermiteFamily(b2_basis, t), nu), t)
    rng = np.random.default_rng(sum(nu))
    for _ in range(20):
        z = cpoint(rng, 2, 2.0)
        assert abs(img(z) - b2_basis.phi_eval(nu, t, z)) <= 1e-8


def test_a_linear(b2, b2_table, fam):
    a, b = 0.5 - 2j, 1.25
    mixed = transform_A(b2, b2_table, HermiteSpan(fam, {(1, 0): a, (0, 2): b}), fam.t)
    sep = transform_A(b2, b2_table, span(fam, (1, 0)), fam.t).scaled(a) + \
        transform_A(b2, b2_table, span(fam, (0, 2)), fam.t).scaled(b)
    z = [0.4 - 0.1j, 0.2j]
    assert abs(mixed(z) - sep(z)) < 1e-14


def test_truncation_guard(b2, b2_table, fam):
    with pytest.raises(TruncationError) as err:
        transform_A(b2, b2_table.truncated(6), span(fam, (2, 1)), fam.t)
    assert err.value.required == 7


def test_b_paths(b2, b2_table, fam, b2_basis):
    rng = np.random.default_rng(1)
    zs = [cpoint(rng, 2, 0.7) for _ in range(10)]
    for nu in b2_basis.indices(3):
        H = span(fam, nu, "H")
        k = transform_B(b2, b2_table, H, fam.t)
        c = transform_B(b2, b2_table, H, fam.t, path="composition")
        for z in zs:
            assert abs(k(z) - c(z)) <= 1e-10
            assert abs(k(z) - b2_basis.phi_eval(nu, fam.t, z)) <= 1e-8
    one = transform_B(b2, b2_table, GaussianPolynomial.polynomial(Polynomial.constant(2, 1)), 1)
    assert abs(one([0.2, 0.1j]) - 1) < 1e-12


def test_c_paths(b2, b2_table, fam, b2_basis):
    rng = np.random.default_rng(2)
    for nu in b2_basis.indices(3):
        h = span(fam, nu)
        c = transform_C(b2, b2_table, h, fam.t)
        via = transform_C_via_A(b2, b2_table, h, fam.t)
        for _ in range(5):
            z = cpoint(rng, 2, 0.7)
            assert abs(c(z) - via(z)) <= 1e-10
            x = z.real
            assert abs(c(x) - convolve_heat(b2, b2_table, h, fam.t, x)) <= 1e-8


def test_c_classical_gaussian(classical1, classical1_table, classical1_basis):
    t = Fraction(1, 2)
    h0 = span(HermiteFamily(classical1_basis, t), (0,))
    img = transform_C(classical1, classical1_table, h0, t)
    for x in (0.0, 0.4, -1.1):
        # heat flow for time t of exp(-x^2/4t)
        want = math.sqrt(2 / 3) * math.exp(-x * x / (6 * t))
        assert abs(img([x]) - want) < 1e-12
        assert abs(convolve_heat(classical1, classical1_table, h0, t, [x]) - want) < 1e-12


def test_classical_convolution_of_polynomial_span(classical1, classical1_table, classical1_basis):
    from scipy import integrate

    t = Fraction(1)
    psi = HermiteSpan(HermiteFamily(classical1_basis, t), {(2,): 1.0, (3,): -0.5})
    for x in (0.3, -0.8):
        # classical heat convolution against Lebesgue measure, by quadrature
        f = lambda q: math.exp(-(x - q) ** 2 / 2) * psi([q]).real / math.sqrt(2 * math.pi)  # noqa: E731
        want, _ = integrate.quad(f, -np.inf, np.inf, epsabs=1e-13)
        assert abs(convolve_heat(classical1, classical1_table, psi, t, [x]) - want) < 1e-10


def test_c_through_g_is_a_at_half_time(b2, b2_table, fam):
    # G C_t psi = 2^-(gamma/2 + N/4) A_(t/2) psi
    c = 2.0 ** (-float(b2.dimension_exponent) / 2)
    rng = np.random.default_rng(3)
    for nu in [(0, 0), (1, 0), (1, 2)]:
        h = span(fam, nu)
        lhs = g_map(b2, transform_C(b2, b2_table, h, fam.t), fam.t)
        rhs = transform_A(b2, b2_table, h.to_gaussian(), fam.t / 2)
        for _ in range(5):
            z = cpoint(rng, 2, 0.4)
            assert abs(lhs(z) - c * rhs(z)) < 1e-10


def test_ground_state(b2, fam, b2_basis):
    H = span(fam, (1, 1), "H")
    assert ground_state(fam.t, "forward", ground_state(fam.t, "inverse", H)) == H
    g = ground_state(fam.t, "inverse", GaussianPolynomial.polynomial(Polynomial.constant(2, 1)))
    x = np.array([0.3, -0.7])
    assert g(x) == pytest.approx(math.exp(-x @ x / (4 * float(fam.t))))
    rng = np.random.default_rng(4)
    idx = b2_basis.indices(3)
    coeffs = {nu: Fraction(int(v), 7) for nu, v in zip(idx, rng.integers(-9, 9, len(idx)))}
    phi = HermiteSpan(fam, coeffs, "H")
    in_m = l2_inner(b2, phi.to_gaussian(), phi.to_gaussian(), fam.t, measure="m")
    in_omega = l2_inner(b2, ground_state(fam.t, "inverse", phi.to_gaussian()),
                        ground_state(fam.t, "inverse", phi.to_gaussian()), fam.t)
    assert in_m == in_omega == sum(c * c for c in coeffs.values())


def test_fourier_gaussian(b2, b2_table, z2, z2_table):
    for ctx, table in ((b2, b2_table), (z2, z2_table)):
        N = ctx.N
        for t in (Fraction(1, 2), Fraction(2)):
            sigma = GaussianPolynomial.gaussian(t, N)
            for k in np.linspace(-1, 1, 5):
                kk = np.full(N, k / math.sqrt(N))
                want = math.exp(-k * k / (2 * float(t)))
                assert abs(dunkl_fourier(ctx, table, sigma, t, kk) - want) < 1e-8


def test_fourier_classical(classical1, classical1_table):
    t = Fraction(1)
    sigma = GaussianPolynomial.gaussian(t, 1)
    for k in (0.0, 0.5, -1.0):
        assert abs(dunkl_fourier(classical1, classical1_table, sigma, t, [k]) - math.exp(-k * k / 2)) < 1e-10


def test_fourier_hermite_eigenfunctions(z2, z2_table, z2_basis):
    # h_{1;nu} are eigenfunctions with eigenvalue (-i)^|nu| up to the dilation by 2
    t = Fraction(1)
    f = HermiteFamily(z2_basis, t)
    for n in range(4):
        h = span(f, (n,))
        for k in (0.3, -0.6):
            got = dunkl_fourier(z2, z2_table, h, t, [k])
            want = (-1j) ** n * math.sqrt(2) ** (2 * float(z2.dimension_exponent)) * h([2 * k])
            assert abs(got - want) < 1e-8


def test_translate(z2, z2_table, classical1, classical1_table):
    t = Fraction(1, 2)
    for q in (-0.7, 0.0, 0.9):
        assert translate_heat(z2, z2_table, t, [0.0], [q]) == pytest.approx(math.exp(-q * q / (2 * float(t))), abs=1e-8)
        for x in (-0.5, 0.8):
            want = heat_kernel(z2_table, t, [x], [q]).real
            assert abs(translate_heat(z2, z2_table, t, [x], [q]) - want) <= 1e-8
            classical = math.exp(-(q - x) ** 2 / (2 * float(t)))
            assert abs(translate_heat(classical1, classical1_table, t, [x], [q]) - classical) <= 1e-8


def test_bspace_orthonormal_basis(b2, b2_basis):
    t = Fraction(3, 2)
    idx = b2_basis.indices(4)
    for a, b in itertools.product(idx, idx):
        s_a, s_b = b2_basis.phi_scale(a, t), b2_basis.phi_scale(b, t)
        val = bspace_inner(b2, t, b2_basis.q(a), b2_basis.q(b))
        assert s_a * s_b * val == (1 if a == b else 0)


def test_bspace_is_fischer_for_real_polynomials(b2):
    from dunklsb.polyring import fischer_pair

    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    p, q = x**3 + 2 * x * y - 1, Fraction(1, 3) * x**3 - y**2 * x + 4
    assert bspace_inner(b2, 2, p, q) == fischer_pair(b2, p, q, 2)


def test_reproducing_property(b2, b2_table):
    t = Fraction(1)
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    rng = np.random.default_rng(6)
    for p in (x**4 - 3 * x * y, y**3 + x + 2, x**2 * y**2):
        for _ in range(5):
            z = cpoint(rng, 2, 1.0)
            k = reproducing_section(b2_table, t, z)
            assert abs(bspace_inner(b2, t, k, p) - complex(p.to_float()(list(z)))) < 1e-8


def test_bspace_positive(b2):
    rng = np.random.default_rng(7)
    for _ in range(10):
        coeffs = {tuple(e): Fraction(int(c), 3) for e, c in zip(rng.integers(0, 4, (4, 2)), rng.integers(1, 9, 4))}
        p = Polynomial(2, coeffs)
        assert bspace_inner(b2, Fraction(1, 2), p, p) > 0


def test_bspace_refuses_overflow(b2):
    with pytest.raises(TruncationError):
        bspace_inner(b2, 1, Polynomial.monomial((30, 0)), Polynomial.monomial((30, 0)), max_degree=20)


def test_cspace_unitarity(b2, b2_table, fam, b2_basis):
    rng = np.random.default_rng(8)
    for nu in b2_basis.indices(3):
        img = transform_C(b2, b2_table, span(fam, nu), fam.t)
        val = cspace_inner(b2, fam.t, img, img)
        assert val.real >= 0
        assert abs(val - 1) <= 1e-6
    idx = b2_basis.indices(3)
    coeffs = {nu: complex(*rng.normal(size=2)) for nu in idx[:5]}
    psi = HermiteSpan(fam, coeffs)
    img = transform_C(b2, b2_table, psi, fam.t)
    assert abs(cspace_inner(b2, fam.t, img, img) - psi.norm2()) <= 1e-6


def test_scale_relation_exact(b2, fam, b2_basis):
    factor = rational_power(Fraction(2), b2.dimension_exponent)
    for nu in b2_basis.indices(3):
        h = span(fam, nu)
        assert l2_inner(b2, h, h, fam.t / 2) == factor * l2_inner(b2, h, h, fam.t)


def test_span_rejects_unknown_index(fam):
    with pytest.raises(Exception):
        HermiteSpan(fam, {(9, 0): 1})
    with pytest.raises(InvalidParameterError):
        HermiteSpan(fam, {(0, 0): 1}, kind="x")
