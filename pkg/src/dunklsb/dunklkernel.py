"""The Dunkl kernel E_mu by bidegree blocks, and the kernels built from it.

Block n is a matrix K_n with E_n(x, y) = m_n(x)^T K_n m_n(y), m_n the vector
of degree-n monomials in canonical order.  Two constructions are provided and
act as oracles for each other: solving the eigen-equation degree by degree,
and summing q_nu q_nu^T / r_nu over the orthogonal basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy import special

from .coxeter import mms_constant
from .errors import (
    InternalConsistencyError,
    InvalidParameterError,
    PrecisionFailure,
)
from .polyring import DunklContext, Polynomial, monomial_index, monomials
from .scalars import to_fraction

METHODS = ("linear-solve", "basis-sum")
VERSIONS = ("A", "B", "C", "BSO", "E", "rho")


def default_truncation(N: int) -> int:
    return 24 if N <= 2 else 14


def _exact_solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve the consistent, full-column-rank system a @ X = b exactly."""
    rows, cols = a.shape
    aug = np.concatenate([a, b], axis=1).astype(object)
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if aug[i, c] != 0), None)
        if p is None:
            raise InternalConsistencyError("singular kernel system; the Dunkl operators have a common null vector")
        if p != r:
            aug[[r, p]] = aug[[p, r]]
        aug[r] = aug[r] / aug[r, c]
        for i in range(rows):
            if i != r and aug[i, c] != 0:
                aug[i] = aug[i] - aug[i, c] * aug[r]
        pivots.append(c)
        r += 1
    if any(v != 0 for v in aug[r:, cols:].ravel()):
        raise InternalConsistencyError("inconsistent kernel system; no block solves the eigen-equation")
    return aug[:cols, cols:]


def _shift_matrix(N: int, n: int, i: int) -> np.ndarray:
    """S with (K_{n-1} S)[:, b] = K_{n-1}[:, b - e_i] (zero if b_i = 0)."""
    src = monomial_index(N, n - 1)
    tgt = monomials(N, n)
    s = np.full((len(src), len(tgt)), Fraction(0), dtype=object)
    for col, b in enumerate(tgt):
        if b[i]:
            s[src[tuple(e - (l == i) for l, e in enumerate(b))], col] = Fraction(1)
    return s


@dataclass
class KernelTable:
    ctx: DunklContext
    blocks: list
    method: str

    def __post_init__(self):
        self._float = None
        self._c_mu = None

    @property
    def degree(self) -> int:
        return len(self.blocks) - 1

    @property
    def N(self) -> int:
        return self.ctx.N

    @property
    def exact(self) -> bool:
        return self.ctx.exact

    @property
    def float_blocks(self) -> list:
        if self._float is None:
            self._float = [np.asarray(b, dtype=float) for b in self.blocks]
        return self._float

    @property
    def c_mu(self) -> float:
        if self._c_mu is None:
            self._c_mu = mms_constant(self.ctx.mu, self.ctx.rs)
        return self._c_mu

    def truncated(self, degree: int) -> "KernelTable":
        if degree > self.degree:
            raise InvalidParameterError(f"table only reaches degree {self.degree}")
        out = KernelTable(self.ctx, self.blocks[: degree + 1], self.method)
        out._c_mu = self._c_mu
        return out

    def block_polynomial(self, n: int) -> Polynomial:
        """E_n as a polynomial in 2N variables (x block first, then y block)."""
        mons = monomials(self.N, n)
        coeffs = {}
        k = self.blocks[n]
        for i, a in enumerate(mons):
            for j, b in enumerate(mons):
                if k[i, j] != 0:
                    coeffs[a + b] = k[i, j]
        return Polynomial(2 * self.N, coeffs)


def build_kernel_blocks(ctx: DunklContext, D: int, method: str = "linear-solve", basis=None) -> KernelTable:
    """Exact blocks E_0..E_D.

    ``linear-solve`` solves T^x_i E_n = y_i E_{n-1} for every i.  ``basis-sum``
    uses K_n = sum over |nu| = n of q_nu q_nu^T / r_nu (an orthogonal basis is
    built if none is passed).
    """
    if method not in METHODS:
        raise InvalidParameterError(f"method must be one of {METHODS}")
    if D < 0:
        raise InvalidParameterError("degree must be non-negative")
    N = ctx.N
    one = Fraction(1) if ctx.exact else 1.0
    blocks = [np.array([[one]], dtype=object)]
    if method == "basis-sum":
        from .hermite import build_orthogonal_basis

        if basis is None or basis.degree < D:
            basis = build_orthogonal_basis(ctx, D, basis.ordering if basis is not None else "graded-lex")
        for n in range(1, D + 1):
            size = len(monomials(N, n))
            k = np.full((size, size), Fraction(0), dtype=object)
            for _, vec, r in basis.levels[n]:
                v = np.asarray(vec, dtype=object)
                k = k + np.outer(v, v) / r
            blocks.append(k)
        return KernelTable(ctx, blocks, method)
    for n in range(1, D + 1):
        a = np.concatenate([ctx.dunkl_matrix(i, n) for i in range(N)], axis=0)
        b = np.concatenate([blocks[n - 1].dot(_shift_matrix(N, n, i)) for i in range(N)], axis=0)
        if ctx.exact:
            k = _exact_solve(a, b)
        else:
            af = np.asarray(a, dtype=float)
            bf = np.asarray(b, dtype=float)
            k, *_ = np.linalg.lstsq(af, bf, rcond=None)
            if np.abs(af @ k - bf).max() > 1e-8 * max(1.0, np.abs(bf).max()):
                raise InternalConsistencyError("floating kernel system is inconsistent")
            k = k.astype(object)
        blocks.append(k)
    return KernelTable(ctx, blocks, method)


def monomial_vector(z: Sequence, n: int) -> np.ndarray:
    """Values of the degree-n monomials at z (complex), canonical order."""
    z = np.asarray(z, dtype=complex)
    mons = monomials(len(z), n)
    powers = np.ones((len(z), n + 1), dtype=complex)
    for k in range(1, n + 1):
        powers[:, k] = powers[:, k - 1] * z
    out = np.ones(len(mons), dtype=complex)
    for j, a in enumerate(mons):
        v = 1.0 + 0j
        for i, e in enumerate(a):
            if e:
                v *= powers[i, e]
        out[j] = v
    return out


@dataclass(frozen=True)
class KernelEval:
    value: complex
    degree: int
    tail: float
    heuristic_tail: bool = True


def tail_estimate(x: float, D: int) -> float:
    """sum_{n > D} x^n / n!, the mu = 0 majorant of the neglected blocks."""
    if x <= 0:
        return 0.0
    return float(math.exp(x) * special.gammainc(D + 1, x))


def eval_dunkl_kernel(table: KernelTable, z: Sequence, w: Sequence, tol: float | None = None) -> KernelEval:
    """Truncated E(z, w) with the heuristic tail estimate.

    When ``tol`` is given and the tail estimate exceeds it, PrecisionFailure
    is raised carrying the partial value.
    """
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if z.shape != (table.N,) or w.shape != (table.N,):
        raise InvalidParameterError("kernel arguments must be N-vectors")
    total = 0j
    for n, k in enumerate(table.float_blocks):
        total += monomial_vector(z, n) @ (k @ monomial_vector(w, n))
    tail = tail_estimate(float(np.linalg.norm(z) * np.linalg.norm(w)), table.degree)
    if tol is not None and tail > tol:
        raise PrecisionFailure(
            f"tail estimate {tail:.3g} exceeds tolerance {tol:.3g} at truncation {table.degree}",
            estimate=total,
            error=tail,
        )
    return KernelEval(complex(total), table.degree, tail)


def _sq(z) -> complex:
    z = np.asarray(z, dtype=complex)
    return complex(np.sum(z * z))


def _t(t) -> float:
    t = float(to_fraction(t)) if not isinstance(t, float) else t
    if not t > 0:
        raise InvalidParameterError("t must be positive")
    return t


def heat_kernel(table: KernelTable, t, z: Sequence, q: Sequence, tol: float | None = None) -> complex:
    """rho_t(z, q) = exp(-(z^2 + q^2)/2t) E(z/sqrt t, q/sqrt t)."""
    t = _t(t)
    s = math.sqrt(t)
    e = eval_dunkl_kernel(table, np.asarray(z, dtype=complex) / s, np.asarray(q, dtype=complex) / s, tol)
    return np.exp(-(_sq(z) + _sq(q)) / (2 * t)) * e.value


def one_variable_heat_kernel(t, q: Sequence) -> complex:
    """sigma_t(q) = exp(-q^2/2t)."""
    return np.exp(-_sq(q) / (2 * _t(t)))


def sb_kernel(table: KernelTable, version: str, t, z: Sequence, q: Sequence, tol: float | None = None) -> complex:
    """Segal-Bargmann kernels A, B, C and BSO, each from its own formula.

    BSO ignores ``t`` (it lives at t = 1) and reads its second argument as y.
    """
    z = np.asarray(z, dtype=complex)
    q = np.asarray(q, dtype=complex)
    if version == "A":
        t = _t(t)
        s = math.sqrt(t)
        e = eval_dunkl_kernel(table, z / s, q / s, tol).value
        return np.exp(-_sq(z) / (2 * t) - _sq(q) / (4 * t)) * e
    if version == "B":
        return heat_kernel(table, t, z, q, tol) / heat_kernel(table, t, np.zeros_like(z), q, tol)
    if version == "C":
        return heat_kernel(table, t, z, q, tol)
    if version == "BSO":
        ctx = table.ctx
        a = float(ctx.dimension_exponent)
        r2 = math.sqrt(2.0)
        e = eval_dunkl_kernel(table, r2 * q, r2 * z, tol).value
        return 2.0**a * table.c_mu ** -0.5 * np.exp(-_sq(z) / 2 - _sq(q)) * e
    if version == "E":
        return eval_dunkl_kernel(table, z, q, tol).value
    if version == "rho":
        return heat_kernel(table, t, z, q, tol)
    raise InvalidParameterError(f"unknown kernel version {version!r}; expected one of {VERSIONS}")


def reproducing_kernel(table: KernelTable, t, z: Sequence, w: Sequence, tol: float | None = None) -> complex:
    """K_t(z, w) = E(conj(z)/sqrt t, w/sqrt t)."""
    s = math.sqrt(_t(t))
    z = np.conj(np.asarray(z, dtype=complex))
    return eval_dunkl_kernel(table, z / s, np.asarray(w, dtype=complex) / s, tol).value
