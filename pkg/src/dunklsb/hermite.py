"""Fischer-orthogonal graded basis, generalized Hermite polynomials and functions.

The basis is stored un-normalized: rational homogeneous q_nu with exact
squared norms r_nu = [q_nu, q_nu]_1, so phi_nu = q_nu / sqrt(r_nu) only
becomes irrational at evaluation time.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DegeneracyError, InvalidParameterError, RangeError
from .polyring import (
    DunklContext,
    Polynomial,
    from_vector,
    heat_apply,
    monomial_index,
    monomials,
)
from .scalars import SqrtRational, format_scalar, to_fraction

ORDERINGS = ("graded-lex", "graded-revlex")


def default_degree(N: int) -> int:
    return 12 if N <= 2 else 8


@dataclass
class OrthogonalBasis:
    ctx: DunklContext
    degree: int
    ordering: str
    # per degree: list of (nu, coefficient vector of q_nu, r_nu)
    levels: list = field(repr=False)

    @property
    def N(self) -> int:
        return self.ctx.N

    def indices(self, max_degree: int | None = None):
        top = self.degree if max_degree is None else max_degree
        return [nu for n in range(top + 1) for nu, _, _ in self.levels[n]]

    def _entry(self, nu):
        nu = tuple(nu)
        n = sum(nu)
        if n > self.degree or len(nu) != self.N or min(nu, default=0) < 0:
            raise RangeError(f"multi-index {nu} is outside the built range (degree <= {self.degree})")
        for entry in self.levels[n]:
            if entry[0] == nu:
                return entry
        raise RangeError(f"multi-index {nu} not in basis")

    def q(self, nu) -> Polynomial:
        _, vec, _ = self._entry(nu)
        return from_vector(self.N, sum(nu), vec)

    def r(self, nu) -> Fraction:
        return self._entry(nu)[2]

    def q_vector(self, nu) -> list:
        return list(self._entry(nu)[1])

    def phi_scale(self, nu, t=1) -> SqrtRational:
        """phi_{t;nu} = phi_scale * q_nu as polynomials (phi_{t;nu} is homogeneous)."""
        t = to_fraction(t)
        return SqrtRational(1, self.r(nu) * t ** sum(nu)).inverse()

    def phi(self, nu, t=1) -> Polynomial:
        return self.q(nu) * self.phi_scale(nu, t)

    def phi_eval(self, nu, t, z) -> complex:
        return float(self.phi_scale(nu, t)) * complex(self.q(nu).to_float()(list(z)))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["nu", "degree", "r", "q"])
        for n in range(self.degree + 1):
            for nu, vec, r in self.levels[n]:
                poly = from_vector(self.N, n, vec)
                w.writerow([" ".join(map(str, nu)), n, format_scalar(r), json.dumps(poly.to_json())])
        return buf.getvalue()


def build_orthogonal_basis(ctx: DunklContext, D: int, ordering: str = "graded-lex") -> OrthogonalBasis:
    """Gram-Schmidt on monomials, degree by degree, under the t=1 Fischer pairing."""
    if not ctx.exact:
        raise InvalidParameterError("the orthogonal basis is built in the exact regime only")
    if D < 0:
        raise InvalidParameterError("degree must be non-negative")
    if ordering not in ORDERINGS:
        raise InvalidParameterError(f"ordering must be one of {ORDERINGS}")
    levels = []
    for n in range(D + 1):
        mons = list(monomials(ctx.N, n))
        if ordering == "graded-revlex":
            mons.reverse()
        idx = monomial_index(ctx.N, n)
        gram = ctx.fischer_gram(n)
        done = []  # (nu, vec, G @ vec, r)
        for nu in mons:
            vec = np.array([Fraction(0)] * len(idx), dtype=object)
            vec[idx[nu]] = Fraction(1)
            # x^nu paired with q_kappa is the nu-th entry of G q_kappa
            for _, qv, gq, r in done:
                c = gq[idx[nu]] / r
                if c:
                    vec = vec - c * qv
            gv = gram.dot(vec)
            r = vec.dot(gv)
            if not r > 0:
                raise DegeneracyError(f"non-positive squared norm {r} at {nu}; the pairing is broken")
            done.append((nu, vec, gv, r))
        levels.append([(nu, list(vec), r) for nu, vec, _, r in done])
    return OrthogonalBasis(ctx, D, ordering, levels)


class HermiteFamily:
    """H_{t;nu} for one t, kept as exact un-normalized polynomials plus scales.

    ``hat(nu)`` is heat(-t, q_nu), rational; H_{t;nu} = scale(nu) * hat(nu).
    """

    def __init__(self, basis: OrthogonalBasis, t):
        self.basis = basis
        self.t = to_fraction(t)
        if not self.t > 0:
            raise InvalidParameterError("t must be positive")
        self._hat: dict = {}

    @property
    def ctx(self) -> DunklContext:
        return self.basis.ctx

    def hat(self, nu) -> Polynomial:
        nu = tuple(nu)
        hit = self._hat.get(nu)
        if hit is None:
            hit = heat_apply(self.ctx, -self.t, self.basis.q(nu))
            self._hat[nu] = hit
        return hit

    def scale(self, nu) -> SqrtRational:
        return self.basis.phi_scale(nu, self.t)

    def polynomial(self, nu) -> Polynomial:
        return self.hat(nu) * self.scale(nu)

    def function_eval(self, nu, x) -> float:
        x = np.asarray(x, dtype=float)
        return math.exp(-float(x @ x) / (4 * float(self.t))) * float(self.scale(nu)) * float(
            self.hat(nu).to_float()(list(x))
        )


def hermite_polynomial(basis: OrthogonalBasis, t, nu, factored: bool = False):
    """H_{t;nu} = heat(-t) applied to phi_{t;nu}.

    With ``factored=True`` returns ``(scale, hat)`` with ``hat`` rational and
    ``scale`` a SqrtRational, so nothing irrational enters the coefficients.
    """
    basis._entry(nu)
    fam = HermiteFamily(basis, t)
    if factored:
        return fam.scale(nu), fam.hat(nu)
    return fam.polynomial(nu)


def hermite_function_eval(basis: OrthogonalBasis, t, nu, x: Sequence[float]) -> float:
    """h_{t;nu}(x) = exp(-x^2/4t) H_{t;nu}(x)."""
    basis._entry(nu)
    return HermiteFamily(basis, t).function_eval(nu, x)
