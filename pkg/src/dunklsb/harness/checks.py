"""The fixed check catalog.

Each check maps to one numbered acceptance criterion and reports a single
residual against a single tolerance.  Criteria with two independent parts
(e.g. pointwise values and a Gram matrix) get one check per part.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from ..coxeter import build_root_system, generate_group, make_multiplicity, orbit_partition
from ..dunklkernel import (
    KernelTable,
    _shift_matrix,
    build_kernel_blocks,
    eval_dunkl_kernel,
    heat_kernel,
    reproducing_kernel,
    sb_kernel,
)
from ..hermite import HermiteFamily, build_orthogonal_basis
from ..polyring import (
    DunklContext,
    Polynomial,
    dunkl_laplacian,
    fischer_pair,
    gaussian_moment,
    gaussian_moment_fast,
    monomials,
)
from ..scalars import SqrtRational, rational_power
from ..transforms import (
    HermiteSpan,
    bso_rescaling,
    bspace_inner,
    convolve_heat,
    cspace_inner,
    l2_inner,
    transform_A,
    transform_BSO,
    transform_C,
    transform_C_via_A,
    translate_heat,
)
from .config import SuiteConfig
from .oracles import z2_kernel

EXACT = "0 (exact)"


@dataclass
class CheckResult:
    id: str
    criterion: int
    description: str
    anchor: str
    residual: object
    tolerance: float
    passed: bool | None
    samples: int
    wall_time: float = 0.0
    status: str = "pass"
    reason: str | None = None
    details: dict = field(default_factory=dict)


class Workspace:
    """Objects shared by all checks of one configuration, built lazily."""

    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self.rs = build_root_system(cfg.family, cfg.N, cfg.m, cfg.roots)
        self.group = generate_group(self.rs)
        self.orbits = orbit_partition(self.rs, self.group)
        self.mu = make_multiplicity(self.orbits, cfg.mu_values)
        self.ctx = DunklContext(self.rs, self.mu, self.group)
        self.N = self.rs.dimension
        self._basis = None
        self._tables: dict = {}
        self._families: dict = {}

    @property
    def exact(self) -> bool:
        return self.rs.exact

    @property
    def basis(self):
        if self._basis is None:
            self._basis = build_orthogonal_basis(self.ctx, self.cfg.basis_degree)
        return self._basis

    def table(self, method: str = "linear-solve", degree: int | None = None) -> KernelTable:
        degree = self.cfg.kernel_degree if degree is None else degree
        key = method
        tab = self._tables.get(key)
        if tab is None or tab.degree < degree:
            tab = build_kernel_blocks(self.ctx, degree, method)
            self._tables[key] = tab
        return tab if tab.degree == degree else tab.truncated(degree)

    def family(self, t) -> HermiteFamily:
        fam = self._families.get(t)
        if fam is None:
            fam = HermiteFamily(self.basis, t)
            self._families[t] = fam
        return fam

    def rng(self, check_id: str) -> np.random.Generator:
        digest = hashlib.sha256(f"{self.cfg.seed}:{check_id}".encode()).digest()
        return np.random.default_rng(int.from_bytes(digest[:8], "little"))

    def low_indices(self, degree: int = 3):
        return self.basis.indices(min(degree, self.cfg.basis_degree))


def _ball(rng, n: int, radius: float, complex_: bool = False) -> np.ndarray:
    """Uniform sample from the ball of the given radius in R^n or C^n = R^2n."""
    dim = 2 * n if complex_ else n
    v = rng.normal(size=dim)
    v *= radius * rng.uniform() ** (1 / dim) / np.linalg.norm(v)
    return v[:n] + 1j * v[n:] if complex_ else v


def _battery(N: int, degree: int = 6):
    return [m for n in range(degree + 1) for m in monomials(N, n)]


# -- criterion 1 and 2 -----------------------------------------------------------


def check_commutativity(ws: Workspace) -> CheckResult:
    if ws.N < 2:
        return _skip("c01", 1, "Dunkl operators commute", "T_i T_j = T_j T_i",
                     "a single Dunkl operator commutes with itself")
    worst = 0
    count = 0
    for m in _battery(ws.N):
        p = Polynomial.monomial(m)
        for i, j in itertools.combinations(range(ws.N), 2):
            a = ws.ctx.coordinate_dunkl(i, ws.ctx.coordinate_dunkl(j, p))
            b = ws.ctx.coordinate_dunkl(j, ws.ctx.coordinate_dunkl(i, p))
            worst = max(worst, (a - b).max_abs_coeff())
            count += 1
    return _exact("c01", 1, "Dunkl operators commute on monomials of degree <= 6",
                  "T_i T_j p - T_j T_i p = 0", worst, count)


def check_trivial_reduction(ws: Workspace) -> CheckResult:
    zero = DunklContext(ws.rs, make_multiplicity(ws.orbits, [0] * len(ws.orbits)), ws.group)
    worst = 0
    count = 0
    for m in _battery(ws.N):
        p = Polynomial.monomial(m)
        lap = Polynomial(ws.N)
        for i in range(ws.N):
            d = _partial(p, i)
            diff = zero.coordinate_dunkl(i, p) - d
            worst = max(worst, diff.max_abs_coeff())
            lap = lap + _partial(d, i)
        worst = max(worst, (dunkl_laplacian(zero, p) - lap).max_abs_coeff())
        count += 1
    return _exact("c02", 2, "mu = 0 gives partial derivatives and the classical Laplacian",
                  "T_{xi,0} = d_xi, Delta_0 = sum d_i^2", worst, count)


def _partial(p: Polynomial, i: int) -> Polynomial:
    out = {}
    for k, c in p.terms():
        if k[i]:
            out[tuple(e - (l == i) for l, e in enumerate(k))] = c * k[i]
    return Polynomial(p.nvars, out)


# -- criterion 3 and 4 -----------------------------------------------------------


def check_fischer_orthogonality(ws: Workspace) -> CheckResult:
    basis = ws.basis
    worst = Fraction(0)
    count = 0
    for n in range(basis.degree + 1):
        level = basis.levels[n]
        for (nu, _, r), (ka, _, _) in itertools.product(level, level):
            val = fischer_pair(ws.ctx, basis.q(nu), basis.q(ka), 1)
            want = r if nu == ka else 0
            worst = max(worst, abs(Fraction(val) - want))
            count += 1
        # a cross-degree pair per level, to exercise the degree bookkeeping
        if n:
            val = fischer_pair(ws.ctx, basis.q(level[0][0]), basis.q(basis.levels[n - 1][0][0]), 1)
            worst = max(worst, abs(Fraction(val)))
            count += 1
    return _exact("c03a", 3, f"Fischer Gram of the q_nu is diag(r_nu) up to degree {basis.degree}",
                  "[q_nu, q_kappa]_1 = r_nu delta", worst, count)


def check_hermite_moment_gram(ws: Workspace) -> CheckResult:
    basis = ws.basis
    idx = basis.indices()
    worst = Fraction(0)
    count = 0
    for t in ws.cfg.t_values:
        fam = ws.family(t)
        for a, b in itertools.combinations_with_replacement(idx, 2):
            na, nb = sum(a), sum(b)
            raw = gaussian_moment_fast(ws.ctx, fam.hat(a) * fam.hat(b), t)
            if (na + nb) % 2:
                val = abs(Fraction(raw))
            else:
                # hat = t^(|nu|/2) times the un-normalized Hermite polynomial
                val = abs(Fraction(raw) / t ** ((na + nb) // 2) - (basis.r(a) if a == b else 0))
            worst = max(worst, val)
            count += 1
    return _exact("c03b", 3, "moment Gram of un-normalized Hermite polynomials is diag(r_nu), every t",
                  "int H^_nu H^_kappa dm_t = r_nu delta", worst, count)


def check_normalization(ws: Workspace) -> CheckResult:
    worst = Fraction(0)
    one = Polynomial.constant(ws.N, 1)
    for t in ws.cfg.t_values:
        worst = max(worst, abs(Fraction(gaussian_moment(ws.ctx, one, t)) - 1))
    return _exact("c04", 4, "the ground-state measure has total mass 1, every t",
                  "int exp(-x^2/2t) d omega_t = 1", worst, len(ws.cfg.t_values))


# -- criterion 5 -------------------------------------------------------------------


def check_block_recursion(ws: Workspace) -> CheckResult:
    tab = ws.table()
    worst = Fraction(0)
    count = 0
    for n in range(1, tab.degree + 1):
        for i in range(ws.N):
            lhs = ws.ctx.dunkl_matrix(i, n).dot(tab.blocks[n])
            rhs = tab.blocks[n - 1].dot(_shift_matrix(ws.N, n, i))
            worst = max(worst, max((abs(v) for v in (lhs - rhs).ravel()), default=Fraction(0)))
            count += 1
        sym = tab.blocks[n] - tab.blocks[n].T
        worst = max(worst, max((abs(v) for v in sym.ravel()), default=Fraction(0)))
    return _exact("c05a", 5, f"kernel blocks solve T^x_i E_n = y_i E_(n-1) and are symmetric up to degree {tab.degree}",
                  "T^x_xi E = <xi, y> E", worst, count)


def check_block_methods(ws: Workspace) -> CheckResult:
    a = ws.table("linear-solve")
    b = ws.table("basis-sum")
    worst = Fraction(0)
    for ka, kb in zip(a.blocks, b.blocks):
        worst = max(worst, max((abs(v) for v in (ka - kb).ravel()), default=Fraction(0)))
    return _exact("c05b", 5, f"eigen-equation blocks equal basis-sum blocks up to degree {a.degree}",
                  "sum_nu H_nu(x) phi_nu(y) = exp(-y^2/2) E(x, y)", worst, a.degree + 1)


def check_z2_oracle(ws: Workspace) -> CheckResult:
    desc = "rank-one kernel agrees with the coefficient recursion on |z w| <= 4"
    anchor = "c_n = c_(n-1) / (n + mu (1 - (-1)^n))"
    if ws.N != 1:
        return _skip("c05c", 5, desc, anchor, "recursion oracle exists for the rank-one group only")
    tab = ws.table(degree=max(ws.cfg.oracle_degree, ws.cfg.kernel_degree))
    if tab.degree > ws.cfg.oracle_degree:
        tab = tab.truncated(ws.cfg.oracle_degree)
    rng = ws.rng("c05c")
    mu = ws.mu.values[0]
    worst = 0.0
    n = ws.cfg.sample("kernel_points")
    for k in range(n):
        # half the samples real, half complex; |z w| <= 4
        z = _ball(rng, 1, 2.0, complex_=bool(k % 2))[0]
        w = _ball(rng, 1, 2.0, complex_=bool(k % 2))[0]
        got = eval_dunkl_kernel(tab, [z], [w]).value
        want = z2_kernel(mu, z, w)
        worst = max(worst, abs(got - want) / abs(want))
    return _numeric("c05c", 5, desc, anchor, worst, ws.cfg.tol("oracle"), n)


# -- criterion 6 and 7 -------------------------------------------------------------


def _kernel_points(ws: Workspace, check_id: str):
    rng = ws.rng(check_id)
    r = ws.cfg.sample("kernel_radius")
    return [(_ball(rng, ws.N, r, True), _ball(rng, ws.N, r)) for _ in range(ws.cfg.sample("kernel_points"))]


def check_a_rho(ws: Workspace) -> CheckResult:
    tab = ws.table()
    worst = 0.0
    pts = _kernel_points(ws, "c06")
    zero = np.zeros(ws.N)
    for t in ws.cfg.t_values:
        for z, q in pts:
            a = sb_kernel(tab, "A", t, z, q)
            rho0 = heat_kernel(tab, t, zero, q)
            worst = max(worst, abs(a * math.sqrt(rho0.real) - heat_kernel(tab, t, z, q)))
    return _numeric("c06", 6, "Version A kernel against the heat kernel, |z|, |q| <= 2",
                    "A_t(z,q) rho_t(0,q)^(1/2) = rho_t(z,q)", worst, ws.cfg.tol("kernel"), len(pts) * len(ws.cfg.t_values))


def check_c_a1(ws: Workspace) -> CheckResult:
    tab = ws.table()
    worst = 0.0
    pts = _kernel_points(ws, "c07a")
    zero = np.zeros(ws.N)
    for t in ws.cfg.t_values:
        for z, q in pts:
            rhs = sb_kernel(tab, "A", 2 * t, z, zero) * sb_kernel(tab, "A", t / 2, z / 2, q)
            worst = max(worst, abs(sb_kernel(tab, "C", t, z, q) - rhs))
    return _numeric("c07a", 7, "Version C kernel from two Version A kernels at dilated points",
                    "C_t(z,q) = A_2t(z,0) A_t/2(z/2,q)", worst, ws.cfg.tol("kernel"), len(pts) * len(ws.cfg.t_values))


def check_c_a2(ws: Workspace) -> CheckResult:
    tab = ws.table()
    worst = 0.0
    pts = _kernel_points(ws, "c07b")
    zero = np.zeros(ws.N)
    for t in ws.cfg.t_values:
        for z, q in pts:
            rhs = sb_kernel(tab, "A", t, zero, q) * sb_kernel(tab, "A", t, z, q)
            worst = max(worst, abs(sb_kernel(tab, "C", t, z, q) - rhs))
    return _numeric("c07b", 7, "Version C kernel from two Version A kernels at the same time",
                    "C_t(z,q) = A_t(0,q) A_t(z,q)", worst, ws.cfg.tol("kernel"), len(pts) * len(ws.cfg.t_values))


# -- criterion 8, 9, 10 ------------------------------------------------------------


def _transform_points(ws: Workspace, check_id: str, radius: float | None = None):
    rng = ws.rng(check_id)
    r = ws.cfg.sample("transform_radius") if radius is None else radius
    return [_ball(rng, ws.N, r, True) for _ in range(ws.cfg.sample("transform_points"))]


def a_basis_residual(ws: Workspace, tab: KernelTable) -> tuple[float, int]:
    worst = 0.0
    count = 0
    zs = _transform_points(ws, "c08a")
    for t in ws.cfg.t_values:
        fam = ws.family(t)
        # samples are taken in the dimensionless variable z / sqrt(t)
        scale = math.sqrt(t)
        for nu in ws.low_indices():
            # the raw series, so that check 14 sees the kernel truncation
            img = transform_A(ws.ctx, tab, HermiteSpan.basis_element(fam, nu), t, form="series")
            for u in zs:
                z = scale * u
                worst = max(worst, abs(img(z) - ws.basis.phi_eval(nu, t, z)))
                count += 1
    return worst, count


def check_a_basis(ws: Workspace) -> CheckResult:
    worst, count = a_basis_residual(ws, ws.table())
    return _numeric("c08a", 8, "Version A maps h_{t;nu} to phi_{t;nu}, |nu| <= 3, |z| <= sqrt(t)",
                    "A_t h_{t;nu} = phi_{t;nu}", worst, ws.cfg.tol("transform"), count)


def check_a_gram(ws: Workspace) -> CheckResult:
    tab = ws.table()
    worst = 0.0
    count = 0
    idx = ws.low_indices()
    for t in ws.cfg.t_values:
        fam = ws.family(t)
        imgs = {nu: transform_A(ws.ctx, tab, HermiteSpan.basis_element(fam, nu), t) for nu in idx}
        for a, b in itertools.product(idx, idx):
            val = bspace_inner(ws.ctx, t, imgs[a], imgs[b])
            worst = max(worst, abs(val - (1.0 if a == b else 0.0)))
            count += 1
    return _numeric("c08b", 8, "images of the Hermite functions are orthonormal in the Segal-Bargmann space",
                    "<<A h_nu, A h_kappa>>_t = delta", worst, ws.cfg.tol("gram"), count)


def check_comm_diagram(ws: Workspace) -> CheckResult:
    tab = ws.table()
    s, t = Fraction(1, 2), Fraction(2)
    lam = Fraction(2)  # (t/s)^(1/2)
    fam = ws.family(t)
    zs = _transform_points(ws, "c09", radius=ws.cfg.sample("transform_radius") / 2)
    worst = 0.0
    count = 0
    for nu in ws.low_indices():
        h = HermiteSpan.basis_element(fam, nu)
        down_across = transform_A(ws.ctx, tab, h, t)
        across_down = transform_A(ws.ctx, tab, h.to_gaussian().dilate(lam), s)
        for z in zs:
            worst = max(worst, abs(down_across(float(lam) * z) - across_down(z)))
            count += 1
    return _numeric("c09", 9, "dilation commutes with the Version A transform (s = 1/2, t = 2)",
                    "D_lambda A_t = A_s delta_lambda, lambda = (t/s)^(1/2)", worst, ws.cfg.tol("transform"), count)


def check_bso(ws: Workspace) -> CheckResult:
    tab = ws.table()
    fam = ws.family(Fraction(1, 4))
    zs = _transform_points(ws, "c10")
    worst = 0.0
    count = 0
    for nu in ws.low_indices():
        phi = HermiteSpan.basis_element(fam, nu)
        lhs = transform_BSO(ws.ctx, tab, phi)
        rhs = transform_A(ws.ctx, tab, bso_rescaling(ws.ctx, tab, phi).dilate(Fraction(1, 2)), 1)
        for z in zs:
            worst = max(worst, abs(lhs(z) - rhs(z)))
            count += 1
    return _numeric("c10", 10, "the BSO transform factors through rescaling, dilation and A_1",
                    "BSO = A_1 delta_(1/2) R", worst, ws.cfg.tol("transform"), count)


# -- criterion 11 ------------------------------------------------------------------


def _grid(ws: Workspace):
    r = ws.cfg.sample("grid_radius")
    return np.linspace(-r, r, ws.cfg.sample("grid"))


def translate_residual(ws: Workspace, tab: KernelTable) -> tuple[float, int]:
    worst = 0.0
    count = 0
    g = _grid(ws)
    for t in ws.cfg.t_values:
        for x in g:
            for q in g:
                got = translate_heat(ws.ctx, tab, t, [x], [q])
                want = heat_kernel(tab, t, [x], [q]).real
                worst = max(worst, abs(got - want))
                count += 1
    return worst, count


def check_translate(ws: Workspace) -> CheckResult:
    desc = "Dunkl translate of the Gaussian equals the heat kernel on a 5 x 5 grid"
    anchor = "T_x sigma_t(q) = rho_t(x,q)"
    if ws.N != 1:
        return _skip("c11a", 11, desc, anchor, "grid check is run for the rank-one group")
    worst, count = translate_residual(ws, ws.table())
    return _numeric("c11a", 11, desc, anchor, worst, ws.cfg.tol("transform"), count)


def convolve_residual(ws: Workspace, tab: KernelTable) -> tuple[float, int]:
    worst = 0.0
    count = 0
    rng = ws.rng("c11b")
    xs = [_ball(rng, ws.N, ws.cfg.sample("grid_radius")) for _ in range(ws.cfg.sample("grid"))]
    for t in ws.cfg.t_values:
        fam = ws.family(t)
        for nu in ws.low_indices():
            h = HermiteSpan.basis_element(fam, nu)
            img = transform_C(ws.ctx, tab, h, t)
            for x in xs:
                worst = max(worst, abs(convolve_heat(ws.ctx, tab, h, t, x) - img(x)))
                count += 1
    return worst, count


def check_convolve(ws: Workspace) -> CheckResult:
    worst, count = convolve_residual(ws, ws.table())
    return _numeric("c11b", 11, "heat convolution equals Version C at real points",
                    "C_t psi(x) = (sigma_t * psi)(x)", worst, ws.cfg.tol("transform"), count)


# -- criterion 12 ------------------------------------------------------------------


def check_positive_definite(ws: Workspace) -> CheckResult:
    tab = ws.table()
    rng = ws.rng("c12a")
    n = ws.cfg.sample("gram_points")
    pts = [_ball(rng, ws.N, ws.cfg.sample("kernel_radius"), True) for _ in range(n)]
    low = math.inf
    for t in ws.cfg.t_values:
        gram = np.array([[reproducing_kernel(tab, t, a, b) for b in pts] for a in pts])
        herm = (gram + gram.conj().T) / 2
        low = min(low, float(np.linalg.eigvalsh(herm).min()))
    residual = max(0.0, -low)
    res = _numeric("c12a", 12, "reproducing-kernel Gram matrix at 8 points is positive semidefinite",
                   "sum conj(c_i) c_j K(z_i, z_j) >= 0", residual, ws.cfg.tol("psd"), n * len(ws.cfg.t_values))
    res.details["min_eigenvalue"] = low
    return res


def check_dkk(ws: Workspace) -> CheckResult:
    tab = ws.table()
    pts = _kernel_points(ws, "c12b")
    worst = 0.0
    count = 0
    for t, s in itertools.permutations(ws.cfg.t_values, 2):
        lam = math.sqrt(t / s)
        for z, w in pts[:20]:
            w = w + 0.5j * z.imag[::-1]
            lhs = reproducing_kernel(tab, t, z, lam * w)
            rhs = reproducing_kernel(tab, s, z / lam, w)
            worst = max(worst, abs(lhs - rhs))
            count += 1
    return _numeric("c12b", 12, "dilation of kernel sections", "D_(t/s)^(1/2) K_(z,t) = K_((s/t)^(1/2) z, s)",
                    worst, ws.cfg.tol("kernel"), count)


# -- criterion 13 ------------------------------------------------------------------


def check_c_unitarity(ws: Workspace) -> CheckResult:
    tab = ws.table()
    worst = 0.0
    count = 0
    rng = ws.rng("c13a")
    idx = ws.low_indices()
    for t in ws.cfg.t_values:
        fam = ws.family(t)
        spans = [HermiteSpan.basis_element(fam, nu) for nu in idx]
        # plus a few random three-term spans with complex coefficients
        for _ in range(3):
            pick = rng.choice(len(idx), size=min(3, len(idx)), replace=False)
            coeffs = {idx[i]: complex(*rng.normal(size=2)) for i in pick}
            spans.append(HermiteSpan(fam, coeffs))
        for psi in spans:
            img = transform_C(ws.ctx, tab, psi, t)
            val = cspace_inner(ws.ctx, t, img, img)
            worst = max(worst, abs(val - psi.norm2()))
            count += 1
    return _numeric("c13a", 13, "Version C is isometric into the C-space on Hermite spans",
                    "<C psi, C psi>_C = ||psi||^2_(omega_t)", worst, ws.cfg.tol("gram"), count)


def check_scale_relation(ws: Workspace) -> CheckResult:
    worst = 0
    count = 0
    factor = rational_power(Fraction(2), ws.ctx.dimension_exponent)
    for t in ws.cfg.t_values:
        fam = ws.family(t)
        for nu in ws.low_indices():
            h = HermiteSpan.basis_element(fam, nu)
            half = l2_inner(ws.ctx, h, h, t / 2)
            full = l2_inner(ws.ctx, h, h, t)
            lhs = half if isinstance(half, SqrtRational) else SqrtRational(half)
            rhs = factor * full
            rhs = rhs if isinstance(rhs, SqrtRational) else SqrtRational(rhs)
            if lhs != rhs:
                worst = max(worst, abs(float(lhs) - float(rhs)))
                if worst == 0:
                    worst = math.ulp(1.0)
            count += 1
    return _exact("c13b", 13, "omega_(t/2) norms are 2^(gamma+N/2) times omega_t norms, exactly",
                  "<psi,psi>_(t/2) = 2^(gamma+N/2) <psi,psi>_t", worst, count)


# -- criterion 14 ------------------------------------------------------------------


def check_monotone(ws: Workspace) -> CheckResult:
    levels = [d for d in (16, 20, 24) if d <= ws.cfg.kernel_degree]
    if ws.cfg.kernel_degree not in levels:
        levels.append(ws.cfg.kernel_degree)
    base = ws.table()
    series = {"c08a": [], "c11": []}
    for d in levels:
        tab = base.truncated(d)
        series["c08a"].append(a_basis_residual(ws, tab)[0])
        series["c11"].append(translate_residual(ws, tab)[0] if ws.N == 1 else convolve_residual(ws, tab)[0])
    rise = 0.0
    for vals in series.values():
        for a, b in zip(vals, vals[1:]):
            rise = max(rise, b - a)
    res = _numeric("c14", 14, f"residuals of checks 8 and 11 do not grow as truncation rises {levels}",
                   "truncation convergence", rise, 0.0, len(levels))
    res.details = {"truncations": levels, **{k: v for k, v in series.items()}}
    return res


# -- helpers -------------------------------------------------------------------------


def _exact(cid, crit, desc, anchor, worst, count) -> CheckResult:
    ok = worst == 0
    return CheckResult(cid, crit, desc, anchor, EXACT if ok else worst, 0.0, ok, count,
                       status="pass" if ok else "fail")


def _numeric(cid, crit, desc, anchor, worst, tol, count) -> CheckResult:
    ok = bool(worst <= tol)
    return CheckResult(cid, crit, desc, anchor, float(worst), tol, ok, count, status="pass" if ok else "fail")


def _skip(cid, crit, desc, anchor, reason) -> CheckResult:
    return CheckResult(cid, crit, desc, anchor, None, 0.0, None, 0, status="skipped", reason=reason)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    criterion: int
    needs_exact: bool
    fn: Callable[[Workspace], CheckResult]


CATALOG = [
    CatalogEntry("c01", 1, True, check_commutativity),
    CatalogEntry("c02", 2, True, check_trivial_reduction),
    CatalogEntry("c03a", 3, True, check_fischer_orthogonality),
    CatalogEntry("c03b", 3, True, check_hermite_moment_gram),
    CatalogEntry("c04", 4, True, check_normalization),
    CatalogEntry("c05a", 5, True, check_block_recursion),
    CatalogEntry("c05b", 5, True, check_block_methods),
    CatalogEntry("c05c", 5, True, check_z2_oracle),
    CatalogEntry("c06", 6, False, check_a_rho),
    CatalogEntry("c07a", 7, False, check_c_a1),
    CatalogEntry("c07b", 7, False, check_c_a2),
    CatalogEntry("c08a", 8, True, check_a_basis),
    CatalogEntry("c08b", 8, True, check_a_gram),
    CatalogEntry("c09", 9, True, check_comm_diagram),
    CatalogEntry("c10", 10, True, check_bso),
    CatalogEntry("c11a", 11, True, check_translate),
    CatalogEntry("c11b", 11, True, check_convolve),
    CatalogEntry("c12a", 12, False, check_positive_definite),
    CatalogEntry("c12b", 12, False, check_dkk),
    CatalogEntry("c13a", 13, True, check_c_unitarity),
    CatalogEntry("c13b", 13, True, check_scale_relation),
    CatalogEntry("c14", 14, True, check_monotone),
]
