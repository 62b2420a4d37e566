"""Segal-Bargmann transforms, Dunkl transform, translation and convolution.

Every integral here has the shape (polynomial) x (Gaussian) against the
weight, so it is evaluated by the exact moment functional with the outer
variable kept symbolic.  Truncation enters only through the kernel table.

Inputs are :class:`GaussianPolynomial` values exp(-inv x^2 / 2) * sum c_j p_j(x)
with rational p_j, or :class:`HermiteSpan` values over a Hermite family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .dunklkernel import KernelTable, monomial_vector
from .errors import InvalidParameterError, TruncationError
from .hermite import HermiteFamily, OrthogonalBasis
from .polyring import (
    DunklContext,
    Polynomial,
    dilate,
    dilate_factored,
    monomial_index,
    monomials,
)
from .scalars import SqrtRational, format_scalar, is_exact, rational_power, to_fraction

MIN_HEADROOM = 4


def _num(c) -> complex:
    return complex(float(c)) if isinstance(c, (SqrtRational, Fraction, int)) else complex(c)


def _frac(t) -> Fraction:
    t = to_fraction(t)
    if not t > 0:
        raise InvalidParameterError("t must be positive")
    return t


# -- inputs -------------------------------------------------------------------


@dataclass
class GaussianPolynomial:
    """exp(-inv * x^2 / 2) * sum_j coef_j * poly_j(x); inv = 0 is a plain polynomial."""

    inv: Fraction
    terms: list

    @classmethod
    def gaussian(cls, scale, N: int, coef=1) -> "GaussianPolynomial":
        """exp(-x^2 / 2 scale) (e.g. sigma_t for scale = t)."""
        return cls(1 / _frac(scale), [(coef, Polynomial.constant(N, 1))])

    @classmethod
    def polynomial(cls, p: Polynomial, coef=1) -> "GaussianPolynomial":
        return cls(Fraction(0), [(coef, p)])

    @property
    def N(self) -> int:
        return self.terms[0][1].nvars

    @property
    def degree(self) -> int:
        return max((p.degree for _, p in self.terms), default=-1)

    def __call__(self, x: Sequence[float]) -> complex:
        x = np.asarray(x, dtype=float)
        env = math.exp(-float(self.inv) * float(x @ x) / 2)
        return env * sum(_num(c) * complex(p.to_float()(list(x))) for c, p in self.terms)

    def __add__(self, other: "GaussianPolynomial") -> "GaussianPolynomial":
        if other.inv != self.inv:
            raise InvalidParameterError("cannot add Gaussian polynomials with different envelopes")
        return GaussianPolynomial(self.inv, self.terms + other.terms)

    def scaled(self, c) -> "GaussianPolynomial":
        return GaussianPolynomial(self.inv, [(_mul(c, a), p) for a, p in self.terms])

    def times_gaussian(self, inv) -> "GaussianPolynomial":
        """Multiply by exp(-inv x^2 / 2); inv may be negative."""
        return GaussianPolynomial(self.inv + to_fraction(inv), list(self.terms))

    def dilate(self, lam) -> "GaussianPolynomial":
        """x -> f(lam x)."""
        if isinstance(lam, SqrtRational) and lam.is_rational:
            lam = lam.as_fraction()
        if is_exact(lam):
            lam = Fraction(lam)
            return GaussianPolynomial(self.inv * lam * lam, [(c, dilate(lam, p)) for c, p in self.terms])
        if isinstance(lam, SqrtRational):
            sq = (lam * lam).as_fraction()
            out = []
            for c, p in self.terms:
                common, q = dilate_factored(lam, p)
                out.append((_mul(c, common), q))
            return GaussianPolynomial(self.inv * sq, out)
        raise InvalidParameterError("dilation factor must be rational or a square root of a rational")


def _mul(a, b):
    if isinstance(a, complex) or isinstance(b, complex):
        return _num(a) * _num(b)
    if isinstance(a, SqrtRational):
        return a * b
    if isinstance(b, SqrtRational):
        return b * a
    return a * b


@dataclass
class HermiteSpan:
    """sum_nu c_nu h_{t;nu} (kind "h", in L^2(omega_t)) or sum c_nu H_{t;nu} (kind "H", in L^2(m_t))."""

    family: HermiteFamily
    coeffs: dict
    kind: str = "h"

    def __post_init__(self):
        if self.kind not in ("h", "H"):
            raise InvalidParameterError("span kind must be 'h' or 'H'")
        for nu in self.coeffs:
            self.family.basis._entry(nu)

    @classmethod
    def basis_element(cls, family: HermiteFamily, nu, kind: str = "h") -> "HermiteSpan":
        return cls(family, {tuple(nu): 1}, kind)

    @property
    def t(self) -> Fraction:
        return self.family.t

    @property
    def max_degree(self) -> int:
        return max((sum(nu) for nu in self.coeffs), default=0)

    def norm2(self) -> float:
        """Squared norm in its own L^2 space (the family is orthonormal)."""
        return float(sum(abs(_num(c)) ** 2 for c in self.coeffs.values()))

    def to_gaussian(self) -> GaussianPolynomial:
        inv = 1 / (2 * self.t) if self.kind == "h" else Fraction(0)
        terms = [(_mul(c, self.family.scale(nu)), self.family.hat(nu)) for nu, c in self.coeffs.items()]
        if not terms:
            terms = [(0, Polynomial(self.family.basis.N))]
        return GaussianPolynomial(inv, terms)

    def __call__(self, x) -> complex:
        return self.to_gaussian()(x)


def _as_gaussian(f) -> GaussianPolynomial:
    if isinstance(f, HermiteSpan):
        return f.to_gaussian()
    if isinstance(f, GaussianPolynomial):
        return f
    if isinstance(f, Polynomial):
        return GaussianPolynomial.polynomial(f)
    raise InvalidParameterError(f"unsupported transform input {type(f).__name__}")


def ground_state(t, direction: str, f):
    """V_t (forward, divide by exp(-x^2/4t)) or its inverse (multiply)."""
    t = _frac(t)
    if direction not in ("forward", "inverse"):
        raise InvalidParameterError("direction must be 'forward' or 'inverse'")
    if isinstance(f, HermiteSpan):
        if f.t != t:
            raise InvalidParameterError("span lives at a different t")
        want = "h" if direction == "forward" else "H"
        if f.kind != want:
            raise InvalidParameterError(f"{direction} ground-state map expects a {want}-span")
        return HermiteSpan(f.family, dict(f.coeffs), "H" if want == "h" else "h")
    g = _as_gaussian(f)
    shift = 1 / (2 * t)
    return g.times_gaussian(-shift if direction == "forward" else shift)


# -- outputs ------------------------------------------------------------------


@dataclass
class HolomorphicImage:
    """z -> exp(-z^2 / 2 envelope) * P(z); envelope None means no Gaussian factor.

    ``blocks[n]`` holds the degree-n coefficients of P in canonical monomial
    order.  Only degrees up to ``truncation_degree`` are meaningful, unless
    ``closed`` is set: then P is known to be exactly the stored polynomial and
    the Taylor series of the whole function is available to any degree.
    """

    N: int
    envelope: Fraction | None
    blocks: list
    truncation_degree: int
    tail: float = 0.0
    best_effort: bool = False
    closed: bool = False

    def polynomial_part(self, z) -> complex:
        z = np.asarray(z, dtype=complex)
        return sum(complex(b @ monomial_vector(z, n)) for n, b in enumerate(self.blocks))

    def __call__(self, z) -> complex:
        z = np.asarray(z, dtype=complex)
        val = self.polynomial_part(z)
        if self.envelope is None:
            return val
        return complex(np.exp(-np.sum(z * z) / (2 * float(self.envelope))) * val)

    def scaled(self, c) -> "HolomorphicImage":
        c = _num(c)
        return HolomorphicImage(self.N, self.envelope, [c * b for b in self.blocks],
                                self.truncation_degree, abs(c) * self.tail, self.best_effort, self.closed)

    def __add__(self, other: "HolomorphicImage") -> "HolomorphicImage":
        if other.envelope != self.envelope or other.N != self.N:
            raise InvalidParameterError("images with different envelopes cannot be added")
        n = max(len(self.blocks), len(other.blocks))
        blocks = [np.zeros(len(monomials(self.N, k)), dtype=complex) for k in range(n)]
        for src in (self.blocks, other.blocks):
            for k, b in enumerate(src):
                blocks[k] = blocks[k] + b
        return HolomorphicImage(self.N, self.envelope, blocks,
                                min(self.truncation_degree, other.truncation_degree),
                                self.tail + other.tail, self.best_effort or other.best_effort,
                                self.closed and other.closed)

    def with_envelope(self, envelope) -> "HolomorphicImage":
        """The same function written as exp(-z^2 / 2 envelope) * Q(z), Q re-expanded up to the truncation degree."""
        # a negative envelope is a growing Gaussian, which G produces
        envelope = None if envelope is None else to_fraction(envelope)
        if envelope == self.envelope:
            return self
        rate = (0 if self.envelope is None else 1 / self.envelope) - (0 if envelope is None else 1 / envelope)
        top = self.truncation_degree
        blocks = HolomorphicImage(self.N, 1 / rate, self.blocks, top).series_blocks() if rate else self.blocks
        return HolomorphicImage(self.N, envelope, blocks, top, _tail(blocks), self.best_effort, self.closed)

    def closed_form(self, degree: int) -> "HolomorphicImage":
        """Declare P a polynomial of the given degree; the dropped blocks' size becomes the tail."""
        kept = self.blocks[: degree + 1]
        dropped = max((float(np.max(np.abs(b))) for b in self.blocks[degree + 1:] if b.size), default=0.0)
        return HolomorphicImage(self.N, self.envelope, kept, self.truncation_degree, dropped, self.best_effort, True)

    def polynomial(self) -> Polynomial:
        coeffs = {}
        for n, b in enumerate(self.blocks):
            for m, c in zip(monomials(self.N, n), b):
                if c != 0:
                    coeffs[m] = complex(c)
        return Polynomial(self.N, coeffs)

    def series_blocks(self, degree: int | None = None) -> list:
        """Taylor blocks of the whole function (envelope expanded) up to ``degree``."""
        top = self.truncation_degree if degree is None else degree
        blocks = [np.asarray(b, dtype=complex) for b in self.blocks[: top + 1]]
        while len(blocks) <= top:
            blocks.append(np.zeros(len(monomials(self.N, len(blocks))), dtype=complex))
        if self.envelope is None:
            return blocks
        env = _envelope_series(self.N, self.envelope, top)
        out = [np.zeros(len(monomials(self.N, n)), dtype=complex) for n in range(top + 1)]
        for n, b in enumerate(blocks):
            if not np.any(b):
                continue
            src = monomials(self.N, n)
            for k in range(0, top - n + 1, 2):
                tgt = monomial_index(self.N, n + k)
                for m, c in zip(src, b):
                    if c == 0:
                        continue
                    for em, ec in env[k]:
                        out[n + k][tgt[tuple(x + y for x, y in zip(m, em))]] += c * ec
        return out

    def to_json(self) -> dict:
        return {
            "envelope_t": format_scalar(self.envelope) if self.envelope is not None else None,
            "poly": self.polynomial().to_json(),
            "truncation_degree": self.truncation_degree,
            "tail": self.tail,
        }


def _envelope_series(N: int, envelope: Fraction, top: int) -> list:
    """Terms of exp(-z^2 / 2 envelope) by degree, as lists of (exponent, float)."""
    sq = Polynomial(N, {tuple(2 * int(i == j) for j in range(N)): 1 for i in range(N)})
    out = [[] for _ in range(top + 1)]
    power = Polynomial.constant(N, 1)
    c = Fraction(-1) / (2 * envelope)
    for k in range(top // 2 + 1):
        coef = c**k / math.factorial(k)
        out[2 * k] = [(e, float(v * coef)) for e, v in power.terms()]
        power = power * sq
    return out


# -- the moment engine ----------------------------------------------------------


def _moment1(ctx: DunklContext, a: tuple):
    n = sum(a)
    return ctx.moment_row(n)[monomial_index(ctx.N, n)[a]]


def _weighted_moments(ctx: DunklContext, poly: Polynomial, inv: Fraction, t: Fraction, degree: int) -> list:
    """Exact w_n[b] = int x^b poly(x) exp(-inv x^2/2) d omega_t(x) / (s/t)^(gamma+N/2), s = 1/inv.

    Returns one rational vector per degree n <= ``degree``.
    """
    if not inv > 0:
        raise InvalidParameterError("integrand is not Gaussian-damped; the moment integral diverges")
    s = 1 / inv
    out = []
    for n in range(degree + 1):
        vec = []
        for b in monomials(ctx.N, n):
            acc = Fraction(0)
            for c, pc in poly.terms():
                k = n + sum(c)
                if k % 2:
                    continue
                m = _moment1(ctx, tuple(x + y for x, y in zip(b, c)))
                if m:
                    acc += pc * m * s ** (k // 2)
            vec.append(acc)
        out.append(vec)
    return out


def _measure_factor(ctx: DunklContext, inv: Fraction, t: Fraction):
    return rational_power(1 / (inv * t), ctx.dimension_exponent)


def _integrate_kernel(ctx, table: KernelTable, g: GaussianPolynomial, t: Fraction, kernel_inv: Fraction,
                      block_factor, transpose: bool, degree: int | None = None) -> list:
    """Blocks c_n = block_factor(n) * K_n w_n summed over the terms of g (complex)."""
    D = table.degree if degree is None else degree
    inv = g.inv + kernel_inv
    meas = _measure_factor(ctx, inv, t)
    blocks = [np.zeros(len(monomials(ctx.N, n)), dtype=complex) for n in range(D + 1)]
    for coef, poly in g.terms:
        if poly.is_zero:
            continue
        if not poly.is_exact:
            raise InvalidParameterError("moment integration needs rational polynomial parts")
        w = _weighted_moments(ctx, poly, inv, t, D)
        scalar = _num(_mul(coef, meas))
        for n in range(D + 1):
            k = table.blocks[n].T if transpose else table.blocks[n]
            v = k.dot(np.asarray(w[n], dtype=object)) * block_factor(n)
            blocks[n] += scalar * np.asarray([float(x) for x in v], dtype=float)
    return blocks


def _headroom(table: KernelTable, g: GaussianPolynomial):
    need = g.degree + MIN_HEADROOM
    if table.degree < need:
        raise TruncationError(
            f"kernel truncation {table.degree} is too low for input degree {g.degree}; use at least {need}",
            required=need,
        )


def _tail(blocks) -> float:
    return float(np.max(np.abs(blocks[-1]))) if len(blocks) and blocks[-1].size else 0.0


FORMS = ("closed", "series")


def _finish(ctx, table, g: GaussianPolynomial, blocks, envelope, a2, kernel_inv, form: str) -> HolomorphicImage:
    """Wrap the image blocks, by default on the envelope where they form an exact polynomial.

    int E(a z, q) exp(-J q^2/2) p(q) d omega is exp(a^2 z^2 / 2J) times a
    polynomial of degree deg p (Dunkl operators move through the invariant
    Gaussian), so an image with outer envelope exp(-z^2/2 envelope) is
    exp(-(1/envelope - a^2/J) z^2/2) times a polynomial.  ``form="series"``
    keeps the raw truncated series on the outer envelope instead.
    """
    img = HolomorphicImage(ctx.N, envelope, blocks, table.degree, _tail(blocks), not ctx.exact)
    if form == "series":
        return img
    if form != "closed":
        raise InvalidParameterError(f"form must be one of {FORMS}")
    rate = 1 / envelope - a2 / (g.inv + kernel_inv)
    return img.with_envelope(1 / rate if rate else None).closed_form(g.degree)


def transform_A(ctx: DunklContext, table: KernelTable, psi, t, form: str = "closed") -> HolomorphicImage:
    """Version A: int A_t(z, q) psi(q) d omega_t(q), with A_t = exp(-z^2/2t - q^2/4t) E(z/sqrt t, q/sqrt t)."""
    t = _frac(t)
    g = _as_gaussian(psi)
    _headroom(table, g)
    kinv = 1 / (2 * t)
    blocks = _integrate_kernel(ctx, table, g, t, kinv, lambda n: t**-n, transpose=False)
    return _finish(ctx, table, g, blocks, t, 1 / t**2, kinv, form)


def transform_B(ctx: DunklContext, table: KernelTable, phi, t, path: str = "kernel",
                form: str = "closed") -> HolomorphicImage:
    """Version B on L^2(m_t).

    ``path="kernel"`` integrates B_t(z, q) = rho(z, q)/rho(0, q) against dm_t;
    ``path="composition"`` computes A_t applied to V_t^{-1} phi.
    """
    t = _frac(t)
    g = _as_gaussian(phi)
    _headroom(table, g)
    if path == "composition":
        return transform_A(ctx, table, ground_state(t, "inverse", g), t, form)
    if path != "kernel":
        raise InvalidParameterError("path must be 'kernel' or 'composition'")
    # dm_t contributes exp(-q^2/2t); B itself carries no q-Gaussian
    blocks = _integrate_kernel(ctx, table, g, t, 1 / t, lambda n: t**-n, transpose=False)
    return _finish(ctx, table, g, blocks, t, 1 / t**2, 1 / t, form)


def transform_C(ctx: DunklContext, table: KernelTable, phi, t, form: str = "closed") -> HolomorphicImage:
    """Version C: int rho_t(z, q) phi(q) d omega_t(q).

    In closed form exp(-x^2/2s) p goes to exp(-z^2/2(s+t)) times a polynomial,
    the heat flow for time t.
    """
    t = _frac(t)
    g = _as_gaussian(phi)
    _headroom(table, g)
    blocks = _integrate_kernel(ctx, table, g, t, 1 / t, lambda n: t**-n, transpose=False)
    return _finish(ctx, table, g, blocks, t, 1 / t**2, 1 / t, form)


def transform_C_via_A(ctx: DunklContext, table: KernelTable, phi, t, form: str = "closed") -> HolomorphicImage:
    """Version C through C(z, q) = A_t(0, q) A_t(z, q): A_t applied to exp(-q^2/4t) phi."""
    t = _frac(t)
    return transform_A(ctx, table, _as_gaussian(phi).times_gaussian(1 / (2 * t)), t, form)


def transform_BSO(ctx: DunklContext, table: KernelTable, phi, form: str = "closed") -> HolomorphicImage:
    """int BSO(z, y) phi(y) d omega~_1(y), the kernel's first E slot being the integration variable."""
    g = _as_gaussian(phi)
    _headroom(table, g)
    one = Fraction(1)
    blocks = _integrate_kernel(ctx, table, g, one, Fraction(2), lambda n: Fraction(2) ** n, transpose=True)
    # d omega~_1 = c d omega_1 and the kernel prefactor 2^(gamma+N/2) c^(-1/2)
    factor = math.sqrt(table.c_mu) * 2.0 ** float(ctx.dimension_exponent)
    blocks = [factor * b for b in blocks]
    # E(sqrt2 y, sqrt2 z) = E(y, 2z)
    return _finish(ctx, table, g, blocks, one, Fraction(4), Fraction(2), form)


def bso_rescaling(ctx: DunklContext, table: KernelTable, phi) -> GaussianPolynomial:
    """R: phi -> c^(1/2) 2^-(gamma+N/2) phi."""
    factor = math.sqrt(table.c_mu) * 2.0 ** -float(ctx.dimension_exponent)
    return _as_gaussian(phi).scaled(factor)


def g_map(ctx: DunklContext, f: HolomorphicImage, t) -> HolomorphicImage:
    """Gf(z) = 2^(gamma/2+N/4) f(2z) / A_{2t}(2z, 0) = 2^(gamma/2+N/4) exp(z^2/t) f(2z)."""
    t = _frac(t)
    if f.envelope is None:
        raise InvalidParameterError("G is applied to images with a Gaussian envelope")
    inv = 4 / f.envelope - 2 / t
    c = 2.0 ** (float(ctx.dimension_exponent) / 2)
    blocks = [c * 2.0**n * b for n, b in enumerate(f.blocks)]
    return HolomorphicImage(f.N, 1 / inv if inv else None, blocks, f.truncation_degree,
                            c * 2.0**f.truncation_degree * f.tail,
                            f.best_effort, f.closed)


def dunkl_fourier(ctx: DunklContext, table: KernelTable, psi, t, k: Sequence[float]) -> complex:
    """int E(-ik/sqrt t, x/sqrt t) psi(x) d omega_t(x) at a real frequency k."""
    t = _frac(t)
    g = _as_gaussian(psi)
    blocks = _integrate_kernel(ctx, table, g, t, Fraction(0), lambda n: t**-n, transpose=False)
    kk = np.asarray(k, dtype=float)
    return complex(sum((-1j) ** n * (monomial_vector(kk, n) @ b) for n, b in enumerate(blocks)))


def convolve_heat(ctx: DunklContext, table: KernelTable, psi, t, x: Sequence[float]) -> float:
    """(sigma_t *_t psi)(x) = int rho_t(q, x) psi(q) d omega_t(q); q sits in the first kernel slot."""
    t = _frac(t)
    g = _as_gaussian(psi)
    blocks = _integrate_kernel(ctx, table, g, t, 1 / t, lambda n: t**-n, transpose=True)
    x = np.asarray(x, dtype=float)
    val = sum(complex(monomial_vector(x, n) @ b) for n, b in enumerate(blocks))
    return complex(math.exp(-float(x @ x) / (2 * float(t))) * val)


def _moment_matrix(ctx: DunklContext, t: Fraction, n1: int, n2: int) -> np.ndarray:
    """float t^((n1+n2)/2) Mom_1(k^(a+b)) for |a| = n1, |b| = n2."""
    rows, cols = monomials(ctx.N, n1), monomials(ctx.N, n2)
    scale = t ** ((n1 + n2) // 2)
    return np.array([[float(scale * _moment1(ctx, tuple(x + y for x, y in zip(a, b)))) for b in cols]
                     for a in rows])


def translate_heat(ctx: DunklContext, table: KernelTable, t, x: Sequence[float], q: Sequence[float]) -> float:
    """Dunkl translate of sigma_t by x, evaluated at q.

    Computed as int E(k/sqrt t, iq/sqrt t) E(-ix/sqrt t, k/sqrt t) exp(-k^2/2t) d omega_t(k)
    with both kernels truncated and the k-integral done by moments.
    """
    t = _frac(t)
    x = np.asarray(x, dtype=float)
    q = np.asarray(q, dtype=float)
    D = table.degree
    u = [(1j) ** n * float(t) ** -n * (table.float_blocks[n] @ monomial_vector(q, n)) for n in range(D + 1)]
    v = [(-1j) ** n * float(t) ** -n * (table.float_blocks[n].T @ monomial_vector(x, n)) for n in range(D + 1)]
    total = 0j
    for n1 in range(D + 1):
        for n2 in range(n1 % 2, D + 1, 2):
            total += u[n1] @ _moment_matrix(ctx, t, n1, n2) @ v[n2]
    return float(total.real)


# -- inner products -----------------------------------------------------------


def l2_inner(ctx: DunklContext, f1, f2, t, measure: str = "omega"):
    """<f1, f2> in L^2(omega_t) (or L^2(m_t) with measure="m"), anti-linear in f1.

    Exact (Fraction or SqrtRational) when all coefficients are exact reals.
    """
    t = _frac(t)
    g1, g2 = _as_gaussian(f1), _as_gaussian(f2)
    inv = g1.inv + g2.inv + (1 / t if measure == "m" else 0)
    if measure not in ("omega", "m"):
        raise InvalidParameterError("measure must be 'omega' or 'm'")
    meas = _measure_factor(ctx, inv, t)
    s = 1 / inv
    total = 0
    exact = True
    for c1, p1 in g1.terms:
        for c2, p2 in g2.terms:
            prod = p1 * p2
            mom = Fraction(0)
            for a, pa in prod.terms():
                if sum(a) % 2 == 0:
                    mom += pa * _moment1(ctx, a) * s ** (sum(a) // 2)
            cc = c1.conjugate() if isinstance(c1, complex) else c1
            term = _mul(_mul(cc, c2), mom)
            exact = exact and not isinstance(term, (float, complex))
            total = _add(total, term)
    val = _mul(total, meas)
    if exact and isinstance(val, SqrtRational) and val.is_rational:
        return val.as_fraction()
    return val


def _add(a, b):
    if isinstance(a, SqrtRational) or isinstance(b, SqrtRational):
        if isinstance(a, SqrtRational) and isinstance(b, SqrtRational) and a.radicand == b.radicand:
            return SqrtRational(a.coef + b.coef, a.radicand)
        if a == 0:
            return b
        if b == 0:
            return a
        return _num(a) + _num(b)
    return a + b


def _blocks_of(f, degree: int) -> tuple[list, int]:
    if isinstance(f, Polynomial):
        blocks = [np.asarray([f.coeffs.get(m, 0) for m in monomials(f.nvars, n)], dtype=object)
                  for n in range(degree + 1)]
        return blocks, max(f.degree, 0)
    if isinstance(f, HolomorphicImage):
        return f.series_blocks(degree), f.truncation_degree
    raise InvalidParameterError(f"unsupported argument {type(f).__name__}")


def _valid_degree(f) -> float:
    """Highest degree whose Taylor block of f is known (inf: known to any degree)."""
    if isinstance(f, Polynomial):
        return max(f.degree, 0)
    if f.closed:
        return len(f.blocks) - 1 if f.envelope is None else math.inf
    return f.truncation_degree


def bspace_inner(ctx, t, f1, f2, max_degree: int = 48):
    """<<f1, f2>>_t: sum_n t^n conj(f1_n)^T G_n f2_n, anti-linear in f1.

    Polynomial arguments are used as they are; images are expanded (envelope
    times polynomial) up to their truncation degree, or up to ``max_degree``
    when they are known in closed form.  Exact for two real rational
    polynomials.
    """
    if isinstance(ctx, OrthogonalBasis):
        ctx = ctx.ctx
    t = _frac(t)
    for f in (f1, f2):
        if isinstance(f, Polynomial) and f.degree > max_degree:
            raise TruncationError(f"pairing needs degree {f.degree} > cap {max_degree}", required=f.degree)
    deg = min(_valid_degree(f1), _valid_degree(f2))
    deg = max_degree if deg == math.inf else int(deg)
    if deg > max_degree:
        raise TruncationError(f"pairing needs degree {deg} > cap {max_degree}", required=deg)
    b1, _ = _blocks_of(f1, deg)
    b2, _ = _blocks_of(f2, deg)
    exact = all(isinstance(f, Polynomial) and f.is_exact for f in (f1, f2))
    total = Fraction(0) if exact else 0j
    for n in range(deg + 1):
        if not (np.any(b1[n] != 0) and np.any(b2[n] != 0)):
            continue
        gram = ctx.fischer_gram(n)
        if exact:
            total += t**n * b1[n].dot(gram.dot(b2[n]))
        else:
            g = np.asarray(gram, dtype=float)
            total += float(t) ** n * (np.conj(np.asarray(b1[n], dtype=complex)) @ g @ np.asarray(b2[n], dtype=complex))
    return total


def cspace_inner(ctx, t, f1: HolomorphicImage, f2: HolomorphicImage, max_degree: int = 48) -> complex:
    """<f1, f2>_C = <G f1, G f2> in the t/2 Segal-Bargmann space."""
    if isinstance(ctx, OrthogonalBasis):
        ctx = ctx.ctx
    t = _frac(t)
    return bspace_inner(ctx, t / 2, g_map(ctx, f1, t), g_map(ctx, f2, t), max_degree)


def reproducing_section(table: KernelTable, t, z: Sequence[complex]) -> HolomorphicImage:
    """w -> K_t(z, w) = E(conj(z)/sqrt t, w/sqrt t) as a truncated polynomial in w."""
    t = _frac(t)
    zc = np.conj(np.asarray(z, dtype=complex))
    blocks = [float(t) ** -n * (table.float_blocks[n].T @ monomial_vector(zc, n)) for n in range(table.degree + 1)]
    return HolomorphicImage(table.N, None, blocks, table.degree, _tail(blocks), not table.exact)

