"""Sparse multivariate polynomials and the Dunkl operator calculus on them.

Coefficients are Fractions (exact kind) or Python floats/complex.  The Dunkl
context caches the action of each coordinate Dunkl operator on monomials and
the induced matrices between spaces of homogeneous polynomials; the Fischer
Gram matrices and the Gaussian moment functional are built from those.
"""

from __future__ import annotations

import functools
import math
import threading
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .coxeter import (
    MultiplicityFunction,
    ReflectionGroup,
    RootSystem,
    generate_group,
    make_multiplicity,
    orbit_partition,
)
from .errors import InternalConsistencyError, InvalidParameterError
from .scalars import SqrtRational, format_scalar, is_exact, to_fraction

FLOAT_REMAINDER_TOL = 1e-9


def _norm_coeff(c):
    if isinstance(c, bool):
        raise TypeError("boolean coefficient")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, SqrtRational):
        return c.exact_or_float()
    if isinstance(c, (np.floating,)):
        return float(c)
    if isinstance(c, np.complexfloating):
        return complex(c)
    return c


class Polynomial:
    """Finitely supported map from exponent tuples to coefficients."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        clean = {}
        if coeffs:
            for k, c in coeffs.items():
                c = _norm_coeff(c)
                if c != 0:
                    clean[tuple(k)] = c
        self.coeffs = clean

    @classmethod
    def constant(cls, nvars: int, c=1) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear_form(cls, xi: Sequence) -> "Polynomial":
        n = len(xi)
        return cls(n, {tuple(int(i == j) for j in range(n)): xi[i] for i in range(n)})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return max((sum(k) for k in self.coeffs), default=-1)

    @property
    def kind(self) -> str:
        return "exact" if all(is_exact(c) for c in self.coeffs.values()) else "float"

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def homogeneous_part(self, n: int) -> "Polynomial":
        return Polynomial(self.nvars, {k: c for k, c in self.coeffs.items() if sum(k) == n})

    def terms(self):
        return self.coeffs.items()

    def copy(self) -> "Polynomial":
        return Polynomial(self.nvars, self.coeffs)

    def _check(self, other: "Polynomial"):
        if other.nvars != self.nvars:
            raise InvalidParameterError("polynomials in different numbers of variables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial) else -_norm_coeff(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            out: dict = {}
            for ka, ca in self.coeffs.items():
                for kb, cb in other.coeffs.items():
                    k = tuple(a + b for a, b in zip(ka, kb))
                    out[k] = out.get(k, 0) + ca * cb
            return Polynomial(self.nvars, out)
        other = _norm_coeff(other)
        return Polynomial(self.nvars, {k: c * other for k, c in self.coeffs.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, scalar):
        scalar = _norm_coeff(scalar)
        return Polynomial(self.nvars, {k: c / scalar for k, c in self.coeffs.items()})

    def __pow__(self, n: int):
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, float, complex)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __call__(self, point: Sequence):
        if len(point) != self.nvars:
            raise InvalidParameterError("evaluation point has the wrong dimension")
        total = 0
        for k, c in self.coeffs.items():
            term = c
            for v, e in zip(point, k):
                if e:
                    term = term * v**e
            total = total + term
        return total

    def max_abs_coeff(self) -> float:
        return max((abs(complex(c)) for c in self.coeffs.values()), default=0.0)

    def map_coefficients(self, f) -> "Polynomial":
        return Polynomial(self.nvars, {k: f(c) for k, c in self.coeffs.items()})

    def conjugate(self) -> "Polynomial":
        return self.map_coefficients(lambda c: c.conjugate() if isinstance(c, complex) else c)

    def to_float(self) -> "Polynomial":
        return self.map_coefficients(lambda c: c if isinstance(c, complex) else float(c))

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        parts = []
        for k in sorted(self.coeffs, key=lambda e: (-sum(e), tuple(-x for x in e))):
            mon = "*".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(k) if e)
            parts.append(f"({self.coeffs[k]})" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)

    def to_json(self) -> list:
        out = []
        for k in sorted(self.coeffs, key=lambda e: (sum(e), tuple(-x for x in e))):
            c = self.coeffs[k]
            coeff = [c.real, c.imag] if isinstance(c, complex) else format_scalar(c)
            out.append({"exponents": list(k), "coeff": coeff})
        return out

    @classmethod
    def from_json(cls, nvars: int, items: Iterable[dict]) -> "Polynomial":
        coeffs = {}
        for item in items:
            c = item["coeff"]
            if isinstance(c, list):
                c = complex(c[0], c[1])
            elif isinstance(c, str) and "/" in c:
                c = Fraction(c)
            else:
                c = float(c)
            coeffs[tuple(item["exponents"])] = c
        return cls(nvars, coeffs)


@functools.lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponents of total degree ``degree``, in descending lexicographic order."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict:
    return {m: i for i, m in enumerate(monomials(nvars, degree))}


def coefficient_vector(p: Polynomial, degree: int) -> list:
    """Coefficients of the degree-``degree`` part of ``p`` in canonical order."""
    return [p.coeffs.get(m, 0) for m in monomials(p.nvars, degree)]


def from_vector(nvars: int, degree: int, vec) -> Polynomial:
    return Polynomial(nvars, dict(zip(monomials(nvars, degree), (_norm_coeff(v) for v in vec))))


def _locked(method):
    @functools.wraps(method)
    def wrapper(self, *args):
        with self._lock:
            return method(self, *args)

    return wrapper


def _is_signed_permutation(mat) -> bool:
    for row in mat:
        nz = [v for v in row if v != 0]
        if len(nz) != 1 or abs(nz[0]) != 1:
            return False
    return True


class DunklContext:
    """Root system, group and multiplicity with cached Dunkl operator data."""

    def __init__(self, rs: RootSystem, mu: MultiplicityFunction, group: ReflectionGroup | None = None):
        if len(mu.root_values) != len(rs):
            raise InvalidParameterError("multiplicity table does not match the root list")
        self.rs = rs
        self.group = group if group is not None else generate_group(rs)
        self.mu = mu
        self.exact = rs.exact
        self.N = rs.dimension
        self._roots = []
        for i, r in enumerate(rs.roots):
            m = mu(i)
            if m == 0:
                continue
            mat = rs.reflection_matrix(i)
            if self.exact:
                d = tuple(Fraction(v) for v in r.direction)
                m = Fraction(m) / 2
                mat = tuple(tuple(Fraction(v) for v in row) for row in mat)
            else:
                d = tuple(float(v) for v in r.direction)
                m = float(m) / 2
                mat = tuple(tuple(float(v) for v in row) for row in np.asarray(mat))
            self._roots.append((d, m, mat, _is_signed_permutation(mat)))
        self._mono_cache: dict = {}
        self._subst_cache: dict = {}
        self._matrix_cache: dict = {}
        self._lap_cache: dict = {}
        self._gram_rows: dict = {0: {(0,) * self.N: [self._one()]}}
        self._gram_cache: dict = {}
        self._moment_rows: dict = {0: [self._one()]}
        # caches below are filled lazily and may be shared between worker threads
        self._lock = threading.RLock()

    @classmethod
    def from_values(cls, rs: RootSystem, values: Sequence) -> "DunklContext":
        group = generate_group(rs)
        mu = make_multiplicity(orbit_partition(rs, group), values)
        return cls(rs, mu, group)

    def _one(self):
        return Fraction(1) if self.exact else 1.0

    def _zero(self):
        return Fraction(0) if self.exact else 0.0

    @property
    def gamma(self) -> Fraction:
        return self.mu.gamma

    @property
    def dimension_exponent(self) -> Fraction:
        """gamma + N/2, the homogeneity exponent of the measure."""
        return self.mu.gamma + Fraction(self.N, 2)

    # -- monomial level ------------------------------------------------------

    def _substitute(self, kappa: tuple, mat) -> dict:
        """Coefficients of the monomial x^kappa evaluated at mat @ x."""
        key = (kappa, mat)
        hit = self._subst_cache.get(key)
        if hit is not None:
            return hit
        n = self.N
        out = {(0,) * n: self._one()}
        for j, e in enumerate(kappa):
            if not e:
                continue
            row = mat[j]
            lin = {tuple(int(k == i) for k in range(n)): row[i] for i in range(n) if row[i] != 0}
            for _ in range(e):
                new: dict = {}
                for ka, ca in out.items():
                    for kb, cb in lin.items():
                        k = tuple(a + b for a, b in zip(ka, kb))
                        new[k] = new.get(k, 0) + ca * cb
                out = new
        out = {k: c for k, c in out.items() if c != 0}
        self._subst_cache[key] = out
        return out

    def _reflect_monomial(self, kappa: tuple, mat, signed_perm: bool) -> dict:
        if signed_perm:
            n = self.N
            exps = [0] * n
            sign = 1
            for j, e in enumerate(kappa):
                if not e:
                    continue
                for i in range(n):
                    v = mat[j][i]
                    if v != 0:
                        exps[i] += e
                        if v < 0 and e % 2:
                            sign = -sign
                        break
            return {tuple(exps): self._one() * sign}
        return self._substitute(kappa, mat)

    def _divide_linear(self, f: dict, d: tuple) -> dict:
        """Exact quotient of f by the linear form <d, x>; remainder must vanish."""
        j = max(i for i in range(self.N) if d[i] != 0)
        dj = d[j]
        rem = dict(f)
        quo: dict = {}
        while rem:
            # eliminate the term with the highest power of x_j first
            k = max(rem, key=lambda e: (e[j], e))
            c = rem[k]
            if k[j] == 0:
                if not self.exact and abs(c) <= FLOAT_REMAINDER_TOL * (1 + max(abs(v) for v in f.values())):
                    del rem[k]
                    continue
                raise InternalConsistencyError(
                    "difference quotient left a remainder; reflection data or multiplicity is broken"
                )
            qk = tuple(e - (i == j) for i, e in enumerate(k))
            qc = c / dj
            quo[qk] = quo.get(qk, 0) + qc
            for i in range(self.N):
                if d[i] == 0:
                    continue
                tk = tuple(e + (l == i) for l, e in enumerate(qk))
                v = rem.get(tk, 0) - qc * d[i]
                if v == 0 or (not self.exact and abs(v) < 1e-300):
                    rem.pop(tk, None)
                else:
                    rem[tk] = v
        return {k: c for k, c in quo.items() if c != 0}

    @_locked
    def dunkl_monomial(self, i: int, kappa: tuple) -> Polynomial:
        """T_{e_i} applied to x^kappa (cached)."""
        key = (i, kappa)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        if kappa[i]:
            k = tuple(e - (l == i) for l, e in enumerate(kappa))
            out[k] = self._one() * kappa[i]
        for d, m, mat, sp in self._roots:
            if d[i] == 0:
                continue
            refl = self._reflect_monomial(kappa, mat, sp)
            diff = {kappa: self._one()}
            for k, c in refl.items():
                diff[k] = diff.get(k, 0) - c
            diff = {k: c for k, c in diff.items() if c != 0}
            if not diff:
                continue
            q = self._divide_linear(diff, d)
            factor = m * d[i]
            for k, c in q.items():
                out[k] = out.get(k, 0) + factor * c
        poly = Polynomial(self.N, out)
        self._mono_cache[key] = poly
        return poly

    # -- matrices between homogeneous spaces ---------------------------------

    @_locked
    def dunkl_matrix(self, i: int, degree: int) -> np.ndarray:
        """Matrix of T_{e_i}: P_degree -> P_(degree-1) in canonical monomial bases."""
        key = (i, degree)
        hit = self._matrix_cache.get(key)
        if hit is not None:
            return hit
        rows = len(monomials(self.N, degree - 1)) if degree > 0 else 0
        cols = monomials(self.N, degree)
        mat = np.full((rows, len(cols)), self._zero(), dtype=object)
        if degree > 0:
            idx = monomial_index(self.N, degree - 1)
            for col, kappa in enumerate(cols):
                for k, c in self.dunkl_monomial(i, kappa).terms():
                    mat[idx[k], col] = c
        self._matrix_cache[key] = mat
        return mat

    @_locked
    def laplacian_matrix(self, degree: int) -> np.ndarray:
        """Matrix of the Dunkl Laplacian: P_degree -> P_(degree-2)."""
        hit = self._lap_cache.get(degree)
        if hit is not None:
            return hit
        size_out = len(monomials(self.N, degree - 2)) if degree >= 2 else 0
        mat = np.full((size_out, len(monomials(self.N, degree))), self._zero(), dtype=object)
        if degree >= 2:
            for i in range(self.N):
                mat = mat + self.dunkl_matrix(i, degree - 1).dot(self.dunkl_matrix(i, degree))
        self._lap_cache[degree] = mat
        return mat

    @_locked
    def _functional_rows(self, degree: int) -> dict:
        """Row vectors p -> (T^a p)(0) on P_degree, for every |a| = degree."""
        for n in range(max(self._gram_rows) + 1, degree + 1):
            prev = self._gram_rows[n - 1]
            rows = {}
            for a in monomials(self.N, n):
                i = next(l for l, e in enumerate(a) if e)
                b = tuple(e - (l == i) for l, e in enumerate(a))
                rows[a] = np.asarray(prev[b], dtype=object).dot(self.dunkl_matrix(i, n))
            self._gram_rows[n] = rows
        return self._gram_rows[degree]

    @_locked
    def fischer_gram(self, degree: int) -> np.ndarray:
        """Gram matrix [x^a, x^b]_{mu,1} for |a| = |b| = degree."""
        hit = self._gram_cache.get(degree)
        if hit is not None:
            return hit
        rows = self._functional_rows(degree)
        gram = np.array([list(rows[a]) for a in monomials(self.N, degree)], dtype=object)
        gram = gram.reshape(len(monomials(self.N, degree)), -1)
        self._gram_cache[degree] = gram
        return gram

    @_locked
    def moment_row(self, degree: int) -> list:
        """Values of the t=1 Gaussian moment functional on degree-``degree`` monomials."""
        if degree % 2:
            return [self._zero()] * len(monomials(self.N, degree))
        top = max(self._moment_rows)
        for n in range(top + 2, degree + 1, 2):
            prev = np.asarray(self._moment_rows[n - 2], dtype=object)
            self._moment_rows[n] = list(prev.dot(self.laplacian_matrix(n)))
        k = degree // 2
        norm = self._one() * (2**k * math.factorial(k))
        return [v / norm for v in self._moment_rows[degree]]

    # -- operators on general polynomials --------------------------------------

    def coordinate_dunkl(self, i: int, p: Polynomial) -> Polynomial:
        out: dict = {}
        for k, c in p.terms():
            for kk, cc in self.dunkl_monomial(i, k).terms():
                out[kk] = out.get(kk, 0) + c * cc
        return Polynomial(self.N, out)


def dunkl_apply(ctx: DunklContext, xi: Sequence, p: Polynomial) -> Polynomial:
    """Dunkl operator T_xi applied to ``p`` (linear in xi)."""
    if len(xi) != ctx.N or p.nvars != ctx.N:
        raise InvalidParameterError("dimension mismatch")
    out = Polynomial(ctx.N)
    for i, x in enumerate(xi):
        if x != 0:
            out = out + ctx.coordinate_dunkl(i, p) * _norm_coeff(x)
    return out


def dunkl_laplacian(ctx: DunklContext, p: Polynomial, frame: Sequence[Sequence] | None = None) -> Polynomial:
    """Sum of squared Dunkl operators over an orthonormal frame (standard by default)."""
    if frame is None:
        out = Polynomial(ctx.N)
        for i in range(ctx.N):
            out = out + ctx.coordinate_dunkl(i, ctx.coordinate_dunkl(i, p))
        return out
    out = Polynomial(ctx.N)
    for xi in frame:
        out = out + dunkl_apply(ctx, xi, dunkl_apply(ctx, xi, p))
    return out


def heat_apply(ctx: DunklContext, tau, p: Polynomial) -> Polynomial:
    """exp(tau * Laplacian / 2) applied to p; a finite sum on polynomials."""
    tau = _norm_coeff(tau)
    out = p
    term = p
    k = 0
    while True:
        k += 1
        term = dunkl_laplacian(ctx, term)
        if term.is_zero:
            break
        out = out + term * (tau**k / (2**k * math.factorial(k)) if is_exact(tau) else
                            float(tau) ** k / (2**k * math.factorial(k)))
    return out


def _lambda_power(lam, n: int):
    if isinstance(lam, SqrtRational):
        return (lam**n).exact_or_float()
    return lam**n


def dilate(lam, p: Polynomial) -> Polynomial:
    """Coefficient of x^kappa scaled by lam^|kappa| (the map p -> p(lam x)).

    ``lam`` may be a Fraction, a float or a SqrtRational; the result is exact
    wherever the individual powers are rational.
    """
    if isinstance(lam, SqrtRational):
        if not float(lam) > 0:
            raise InvalidParameterError("dilation factor must be positive")
    elif not lam > 0:
        raise InvalidParameterError("dilation factor must be positive")
    lam = Fraction(lam) if isinstance(lam, int) else lam
    return Polynomial(p.nvars, {k: c * _lambda_power(lam, sum(k)) for k, c in p.terms()})


def dilate_factored(lam: SqrtRational, p: Polynomial):
    """Dilate a polynomial whose degrees share one parity, keeping it exact.

    Returns ``(common, q)`` with ``dilate(lam, p) == common * q``, ``common`` a
    SqrtRational and ``q`` rational.
    """
    degrees = {sum(k) for k in p.coeffs}
    if len({d % 2 for d in degrees}) > 1:
        raise InvalidParameterError("mixed-parity polynomial cannot be factored")
    if not degrees:
        return SqrtRational(1), p
    low = min(degrees)
    common = lam**low
    sq = (lam * lam).as_fraction()
    q = Polynomial(p.nvars, {k: c * sq ** ((sum(k) - low) // 2) for k, c in p.terms()})
    return common, q


def _check_t(t):
    if isinstance(t, SqrtRational):
        t = float(t)
    if not t > 0:
        raise InvalidParameterError("t must be positive")


def fischer_pair(ctx: DunklContext, p: Polynomial, q: Polynomial, t=1):
    """[p, q]_{mu,t}: substitute Dunkl operators into dilated p, apply to dilated q, read at 0."""
    _check_t(t)
    t = _norm_coeff(t)
    total = 0
    zero = (0,) * ctx.N
    for a, ca in p.terms():
        n = sum(a)
        qn = q.homogeneous_part(n)
        if qn.is_zero:
            continue
        cur = qn
        for i, e in enumerate(a):
            for _ in range(e):
                cur = ctx.coordinate_dunkl(i, cur)
        val = cur.coeffs.get(zero, 0)
        if val:
            # dilation by sqrt(t) contributes t^(|a|/2) from each side
            total = total + ca * val * (t**n if is_exact(t) else float(t) ** n)
    return _norm_coeff(total) if total != 0 else (Fraction(0) if p.is_exact and q.is_exact and is_exact(t) else 0.0)


def gaussian_moment(ctx: DunklContext, p: Polynomial, t=1):
    """Integral of p against the probability measure m_{mu,t}, i.e. (e^{t Lap/2} p)(0)."""
    _check_t(t)
    t = _norm_coeff(t)
    if not isinstance(p, Polynomial):
        p = Polynomial.constant(ctx.N, p)
    val = heat_apply(ctx, t, p).coeffs.get((0,) * ctx.N, 0)
    return _norm_coeff(val) if val != 0 else (Fraction(0) if p.is_exact and is_exact(t) else 0.0)


def gaussian_moment_fast(ctx: DunklContext, p: Polynomial, t=1):
    """Same functional as :func:`gaussian_moment`, read off the cached moment rows."""
    _check_t(t)
    t = _norm_coeff(t)
    total = 0
    for n in range(0, p.degree + 1, 2):
        row = ctx.moment_row(n)
        idx = monomial_index(ctx.N, n)
        part = 0
        for k, c in p.terms():
            if sum(k) == n:
                part = part + c * row[idx[k]]
        if part != 0:
            total = total + part * (t ** (n // 2) if is_exact(t) else float(t) ** (n // 2))
    return _norm_coeff(total) if total != 0 else (Fraction(0) if p.is_exact and is_exact(t) else 0.0)


def multiply_coordinate(xi: Sequence, p: Polynomial) -> Polynomial:
    """The position operator: multiplication by <xi, x>."""
    return Polynomial.linear_form(list(xi)) * p


class DunklMomentum:
    """P_{xi,mu,t} = (t/i) T_{xi,mu}, applied lazily to polynomials."""

    def __init__(self, ctx: DunklContext, xi: Sequence, t):
        _check_t(t)
        self.ctx, self.xi, self.t = ctx, tuple(xi), t

    @property
    def scalar(self) -> complex:
        return complex(0.0, -float(self.t))

    def __call__(self, p: Polynomial) -> Polynomial:
        return dunkl_apply(self.ctx, self.xi, p) * self.scalar


def parse_ratio(value) -> Fraction:
    return to_fraction(value)
