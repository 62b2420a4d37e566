"""Independent reference values used by the check catalog and the tests."""

from __future__ import annotations

from fractions import Fraction


def z2_kernel_coefficients(mu, degree: int) -> list[Fraction]:
    """Taylor coefficients c_n of the rank-one kernel E(z, w) = sum c_n (z w)^n.

    From the eigen-equation: c_0 = 1 and c_n = c_{n-1} / (n + mu (1 - (-1)^n)).
    """
    mu = Fraction(mu)
    out = [Fraction(1)]
    for n in range(1, degree + 1):
        out.append(out[-1] / (n + mu * (1 - (-1) ** n)))
    return out


def z2_kernel(mu, z: complex, w: complex, degree: int = 80) -> complex:
    x = complex(z) * complex(w)
    total = 0j
    for c in reversed(z2_kernel_coefficients(mu, degree)):
        total = total * x + float(c)
    return total
