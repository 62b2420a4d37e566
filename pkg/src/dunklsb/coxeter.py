"""Root systems, their reflection groups, multiplicity functions and weights.

Roots are stored as a direction plus a real scale chosen so that the root
has squared norm 2.  In the exact regime the direction is a primitive
integer vector, so reflection matrices (which only see the direction) are
rational even when the root itself is not.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np
from scipy import integrate, special

from .errors import (
    InvalidParameterError,
    InvalidRootError,
    NotARootSystemError,
    PrecisionFailure,
    RunawayClosureError,
    UnsupportedMultiplicityError,
)
from .scalars import is_exact, to_fraction

FLOAT_TOL = 1e-9
DEFAULT_GROUP_CAP = 10**6


def reflect(alpha: Sequence, x: Sequence):
    """Reflect ``x`` in the hyperplane orthogonal to ``alpha``.

    Exact (Fraction) output when both inputs are rational, float otherwise.
    """
    if len(alpha) != len(x):
        raise InvalidParameterError("dimension mismatch between root and vector")
    if all(is_exact(a) for a in alpha) and all(is_exact(v) for v in x):
        alpha = [Fraction(a) for a in alpha]
        norm2 = sum(a * a for a in alpha)
        if norm2 == 0:
            raise InvalidRootError("cannot reflect in a zero vector")
        c = 2 * sum(a * v for a, v in zip(alpha, x)) / norm2
        return tuple(Fraction(v) - c * a for a, v in zip(alpha, x))
    a = np.asarray(alpha, dtype=float)
    v = np.asarray(x, dtype=complex if np.iscomplexobj(x) else float)
    norm2 = float(a @ a)
    if norm2 == 0.0:
        raise InvalidRootError("cannot reflect in a zero vector")
    return v - (2.0 * (a @ v) / norm2) * a


def _primitive(direction: Sequence[Fraction]) -> tuple[int, ...]:
    dens = [Fraction(d).denominator for d in direction]
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), dens, 1)
    ints = [int(Fraction(d) * lcm) for d in direction]
    g = reduce(math.gcd, (abs(i) for i in ints), 0)
    if g == 0:
        raise InvalidRootError("zero vector is not a root")
    return tuple(i // g for i in ints)


@dataclass(frozen=True)
class Root:
    """A root ``direction * scale`` with squared norm 2."""

    direction: tuple
    scale: float

    @property
    def vector(self) -> np.ndarray:
        return np.asarray([float(d) for d in self.direction]) * self.scale

    @property
    def norm2_direction(self):
        return sum(d * d for d in self.direction)

    def __neg__(self):
        return Root(tuple(-d for d in self.direction), self.scale)


@dataclass(frozen=True)
class RootSystem:
    dimension: int
    roots: tuple[Root, ...]
    exact: bool
    family: str | None = None

    def __len__(self):
        return len(self.roots)

    @property
    def regime(self) -> str:
        return "exact-rational" if self.exact else "floating"

    def positive_indices(self) -> list[int]:
        """Indices of a positive system for the lexicographic total order."""
        out = []
        for i, r in enumerate(self.roots):
            lead = next(d for d in r.direction if (d != 0 if self.exact else abs(d) > FLOAT_TOL))
            if lead > 0:
                out.append(i)
        return out

    def positive_roots(self) -> list[Root]:
        return [self.roots[i] for i in self.positive_indices()]

    def reflection_matrix(self, index: int):
        """Matrix of the reflection in root ``index`` (tuple of tuples if exact)."""
        d = self.roots[index].direction
        n = self.dimension
        if self.exact:
            norm2 = Fraction(sum(v * v for v in d))
            return tuple(
                tuple(Fraction(int(i == j)) - 2 * Fraction(d[i] * d[j]) / norm2 for j in range(n))
                for i in range(n)
            )
        v = np.asarray(d, dtype=float)
        return np.eye(n) - 2.0 * np.outer(v, v) / float(v @ v)

    def index_of(self, direction) -> int | None:
        key = self._key(direction)
        return self._lookup().get(key)

    def _key(self, direction):
        if self.exact:
            return _primitive(direction)
        v = np.asarray(direction, dtype=float)
        v = v / np.linalg.norm(v)
        return tuple(np.round(v / FLOAT_TOL).astype(np.int64))

    def _lookup(self) -> dict:
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = {self._key(r.direction): i for i, r in enumerate(self.roots)}
            object.__setattr__(self, "_lookup_cache", cache)
        return cache


def _family_directions(family: str, N: int | None, m: int | None):
    fam = family.upper().replace(" ", "")
    if fam in ("A1^N", "A1N", "A1"):
        if fam == "A1" and N is None:
            N = 1
        dirs = []
        for i in range(N):
            e = [0] * N
            e[i] = 1
            dirs += [tuple(e), tuple(-v for v in e)]
        return N, dirs, True, "A1^N"
    if fam in ("A", "B", "D"):
        if N is None or N < 1:
            raise InvalidParameterError(f"family {family} needs a positive N")
        dirs = []
        if fam == "B":
            for i in range(N):
                e = [0] * N
                e[i] = 1
                dirs += [tuple(e), tuple(-v for v in e)]
        if fam in ("B", "D"):
            if fam == "D" and N < 2:
                raise InvalidParameterError("D_N needs N >= 2")
            for i, j in itertools.combinations(range(N), 2):
                for si, sj in ((1, 1), (1, -1)):
                    e = [0] * N
                    e[i], e[j] = si, sj
                    dirs += [tuple(e), tuple(-v for v in e)]
        if fam == "A":
            if N < 2:
                raise InvalidParameterError("A_{N-1} is realised in N >= 2 coordinates")
            for i, j in itertools.combinations(range(N), 2):
                e = [0] * N
                e[i], e[j] = 1, -1
                dirs += [tuple(e), tuple(-v for v in e)]
        return N, dirs, True, fam
    if fam in ("I2", "I"):
        if m is None or m < 1:
            raise InvalidParameterError("I2(m) needs m >= 1")
        if N not in (None, 2):
            raise InvalidParameterError("I2(m) lives in dimension 2")
        if m == 1:
            return 2, [(1, 0), (-1, 0)], True, "I2(1)"
        if m == 2:
            return 2, [(1, 0), (-1, 0), (0, 1), (0, -1)], True, "I2(2)"
        if m == 4:
            dirs = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)]
            return 2, dirs, True, "I2(4)"
        dirs = []
        for k in range(m):
            th = math.pi * k / m
            v = (math.cos(th), math.sin(th))
            dirs += [v, (-v[0], -v[1])]
        return 2, dirs, False, f"I2({m})"
    raise InvalidParameterError(f"unknown root-system family {family!r}")


def build_root_system(family: str | None = None, N: int | None = None, m: int | None = None,
                      roots: Sequence[Sequence] | None = None) -> RootSystem:
    """Build and validate a root system from a family name or explicit roots.

    Families: ``"A1^N"``, ``"A"`` (A_{N-1} in N coordinates), ``"B"``, ``"D"``
    and ``"I2"`` (dihedral, needs ``m``).  Explicit roots given as rationals
    (ints, Fractions or ``"p/q"`` strings) keep the exact regime; any float
    entry switches to the floating regime.
    """
    if roots is not None:
        if family is not None:
            raise InvalidParameterError("give either a family or explicit roots, not both")
        roots = [list(r) for r in roots]
        if not roots:
            if N is None:
                raise InvalidParameterError("an empty root system needs its dimension N")
            return RootSystem(N, (), True, "empty")
        dim = len(roots[0])
        if any(len(r) != dim for r in roots) or (N is not None and N != dim):
            raise InvalidParameterError("inconsistent root dimensions")
        try:
            dirs = [tuple(to_fraction(v) for v in r) for r in roots]
            exact = True
        except TypeError:
            dirs = [tuple(float(v) for v in r) for r in roots]
            exact = False
        name = None
    else:
        if family is None:
            raise InvalidParameterError("need a family or explicit roots")
        dim, dirs, exact, name = _family_directions(family, N, m)
    return _validated(dim, dirs, exact, name)


def _validated(dim: int, dirs, exact: bool, name) -> RootSystem:
    built = []
    if exact:
        for d in dirs:
            if all(v == 0 for v in d):
                raise InvalidRootError("zero vector is not a root")
            p = _primitive(d)
            built.append(Root(p, math.sqrt(2.0 / sum(v * v for v in p))))
    else:
        for d in dirs:
            v = np.asarray(d, dtype=float)
            nv = float(np.linalg.norm(v))
            if nv < FLOAT_TOL:
                raise InvalidRootError("zero vector is not a root")
            built.append(Root(tuple(float(c) for c in v / nv), math.sqrt(2.0)))
    rs = RootSystem(dim, tuple(built), exact, name)
    lookup = rs._lookup()
    if len(lookup) != len(built):
        # two inputs normalised onto the same root: one was a non-unit multiple of the other
        raise NotARootSystemError("roots that are non-(+/-1) multiples of each other")
    for i, r in enumerate(built):
        if rs.index_of((-r).direction) is None:
            raise NotARootSystemError("root system not closed under negation", witness=(r, -r))
    for i in range(len(built)):
        mat = rs.reflection_matrix(i)
        for b in built:
            img = _apply(mat, b.direction, exact)
            if rs.index_of(img) is None:
                raise NotARootSystemError(
                    f"reflection in root {i} maps a root outside the system",
                    witness=(built[i], img),
                )
    return rs


def _apply(mat, vec, exact):
    if exact:
        return tuple(sum(mij * v for mij, v in zip(row, vec)) for row in mat)
    return tuple(np.asarray(mat) @ np.asarray(vec, dtype=float))


@dataclass(frozen=True)
class ReflectionGroup:
    elements: tuple
    generators: tuple[int, ...]
    exact: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def matrices(self) -> list[np.ndarray]:
        return [np.asarray(g, dtype=float) for g in self.elements]

    def root_permutation(self, rs: RootSystem, g) -> tuple[int, ...]:
        return tuple(rs.index_of(_apply(g, r.direction, self.exact)) for r in rs.roots)


def _matmul_exact(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def generate_group(rs: RootSystem, cap: int = DEFAULT_GROUP_CAP) -> ReflectionGroup:
    """Close the reflections of a positive system under multiplication."""
    n = rs.dimension
    gens_idx = tuple(rs.positive_indices())
    if rs.exact:
        ident = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
        gens = [rs.reflection_matrix(i) for i in gens_idx]
        key = lambda g: g  # noqa: E731
        mul = _matmul_exact
    else:
        ident = np.eye(n)
        gens = [rs.reflection_matrix(i) for i in gens_idx]
        key = lambda g: tuple(np.round(np.asarray(g).ravel() / FLOAT_TOL).astype(np.int64))  # noqa: E731
        mul = lambda a, b: np.asarray(a) @ np.asarray(b)  # noqa: E731
    seen = {key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mul(s, g)
                k = key(h)
                if k not in seen:
                    seen[k] = h
                    nxt.append(h)
                    if len(seen) > cap:
                        raise RunawayClosureError(
                            f"group closure exceeded {cap} elements; invalid floating input?"
                        )
        frontier = nxt
    return ReflectionGroup(tuple(seen.values()), gens_idx, rs.exact)


def orbit_partition(rs: RootSystem, group: ReflectionGroup) -> list[tuple[int, ...]]:
    """Partition root indices into G-orbits, ordered by their smallest index."""
    gens = [rs.reflection_matrix(i) for i in group.generators]
    orbit_of = {}
    orbits = []
    for start in range(len(rs)):
        if start in orbit_of:
            continue
        members = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for s in gens:
                j = rs.index_of(_apply(s, rs.roots[i].direction, rs.exact))
                if j not in members:
                    members.add(j)
                    stack.append(j)
        for i in members:
            orbit_of[i] = len(orbits)
        orbits.append(tuple(sorted(members)))
    return orbits


@dataclass(frozen=True)
class MultiplicityFunction:
    orbits: tuple[tuple[int, ...], ...]
    values: tuple[Fraction, ...]
    root_values: tuple = field(repr=False)

    @property
    def gamma(self) -> Fraction:
        """Half the sum of the multiplicity over all roots."""
        return sum(self.root_values, Fraction(0)) / 2

    def __call__(self, root_index: int):
        return self.root_values[root_index]

    @property
    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.values)


def make_multiplicity(orbits: Sequence[Sequence[int]], values: Sequence) -> MultiplicityFunction:
    """Attach one nonnegative rational value to each root orbit."""
    if len(values) != len(orbits):
        raise InvalidParameterError(f"expected {len(orbits)} multiplicity values, got {len(values)}")
    vals = []
    for v in values:
        if isinstance(v, complex):
            raise UnsupportedMultiplicityError("complex multiplicities are not supported")
        try:
            q = to_fraction(v)
        except (TypeError, ValueError) as exc:
            raise UnsupportedMultiplicityError(f"multiplicity {v!r} is not a rational") from exc
        if q < 0:
            raise UnsupportedMultiplicityError("the multiplicity function must be non-negative")
        vals.append(q)
    size = sum(len(o) for o in orbits)
    per_root = [Fraction(0)] * size
    for orb, q in zip(orbits, vals):
        for i in orb:
            per_root[i] = q
    return MultiplicityFunction(tuple(tuple(o) for o in orbits), tuple(vals), tuple(per_root))


@dataclass(frozen=True)
class WeightSpec:
    c_mu: float
    t: Fraction
    gamma: Fraction
    dimension: int

    def __post_init__(self):
        if not self.c_mu > 0:
            raise InvalidParameterError("the Macdonald-Mehta-Selberg constant must be positive")
        if not self.t > 0:
            raise InvalidParameterError("t must be positive")

    @property
    def exponent(self) -> Fraction:
        return self.gamma + Fraction(self.dimension, 2)


def weight_eval(w: WeightSpec, mu: MultiplicityFunction, rs: RootSystem, x) -> float:
    """The normalised weight ``c^-1 t^-(gamma+N/2) prod |<alpha,x>|^mu(alpha)``."""
    if not w.t > 0:
        raise InvalidParameterError("t must be positive")
    x = np.asarray(x, dtype=float)
    val = 1.0
    for i, r in enumerate(rs.roots):
        m = mu(i)
        if m:
            val *= abs(float(r.vector @ x)) ** float(m)
    return val / (w.c_mu * float(w.t) ** float(w.exponent))


def _is_product_type(rs: RootSystem) -> bool:
    vecs = [r.vector for r in rs.roots]
    for a, b in itertools.combinations(vecs, 2):
        dot = abs(float(a @ b))
        if dot > FLOAT_TOL and abs(dot - 2.0) > FLOAT_TOL:
            return False
    return True


def _one_dim_factor(m: float, rtol: float) -> float:
    # integral over R of |sqrt(2) u|^(2m) exp(-u^2/2)
    f = lambda u: (2.0 * u * u) ** m * math.exp(-u * u / 2)  # noqa: E731
    val, err = integrate.quad(f, 0.0, math.inf, epsabs=0.0, epsrel=rtol / 10, limit=200)
    if not err <= rtol * abs(val):
        raise PrecisionFailure("1-D quadrature missed its error target", estimate=2 * val, error=2 * err)
    return 2.0 * val


def mms_constant(mu: MultiplicityFunction, rs: RootSystem, rtol: float = 1e-8) -> float:
    """Macdonald-Mehta-Selberg constant: integral of the weight against exp(-x^2/2).

    Product-type systems are integrated one orthogonal root pair at a time.
    Otherwise the integral is split into a closed-form radial Gamma factor and
    an adaptive quadrature over the unit sphere.
    """
    N = rs.dimension
    if all(v == 0 for v in mu.values) or len(rs) == 0:
        return (2 * math.pi) ** (N / 2)
    if _is_product_type(rs):
        val = 1.0
        used = 0
        for i in rs.positive_indices():
            val *= _one_dim_factor(float(mu(i)), rtol)
            used += 1
        return val * (2 * math.pi) ** ((N - used) / 2)
    gamma = float(mu.gamma)
    vecs = [(r.vector, float(mu(i))) for i, r in enumerate(rs.roots) if mu(i)]

    def angular(u):
        val = 1.0
        for v, m in vecs:
            val *= abs(float(v @ u)) ** m
        return val

    # radial part: int_0^inf r^(2 gamma + N - 1) exp(-r^2/2) dr
    a = gamma + N / 2
    radial = 2.0 ** (a - 1) * special.gamma(a)
    if N == 2:
        breaks = sorted({math.atan2(-v[0], v[1]) % math.pi for v, _ in vecs})
        pts = sorted({b + k * math.pi for b in breaks for k in (0, 1)})
        f = lambda th: angular(np.array([math.cos(th), math.sin(th)]))  # noqa: E731
        edges = [0.0] + [p for p in pts if 0.0 < p < 2 * math.pi] + [2 * math.pi]
        total, err = 0.0, 0.0
        for lo, hi in zip(edges[:-1], edges[1:]):
            v, e = integrate.quad(f, lo, hi, epsabs=0.0, epsrel=rtol / 10, limit=200)
            total += v
            err += e
    else:
        def integrand(*angles):
            u = _sphere_point(angles, N)
            jac = 1.0
            for k, th in enumerate(angles[:-1]):
                jac *= math.sin(th) ** (N - 2 - k)
            return angular(u) * jac

        ranges = [(0.0, math.pi)] * (N - 2) + [(0.0, 2 * math.pi)]
        total, err = integrate.nquad(integrand, ranges, opts={"epsrel": rtol / 10, "epsabs": 0.0, "limit": 100})
    val = radial * total
    if not err <= rtol * abs(total):
        raise PrecisionFailure("spherical quadrature missed its error target", estimate=val, error=radial * err)
    return val


def _sphere_point(angles, N):
    u = np.empty(N)
    s = 1.0
    for k, th in enumerate(angles[:-1]):
        u[k] = s * math.cos(th)
        s *= math.sin(th)
    u[N - 2] = s * math.cos(angles[-1])
    u[N - 1] = s * math.sin(angles[-1])
    return u


def make_weight(mu: MultiplicityFunction, rs: RootSystem, t, c_mu: float | None = None) -> WeightSpec:
    t = to_fraction(t) if not isinstance(t, float) else t
    if not t > 0:
        raise InvalidParameterError("t must be positive")
    if c_mu is None:
        c_mu = mms_constant(mu, rs)
    return WeightSpec(c_mu, t, mu.gamma, rs.dimension)
