"""Suite configuration: root system, multiplicity, times, degrees, tolerances."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from ..errors import InvalidParameterError, UnsupportedMultiplicityError
from ..scalars import to_fraction

DEFAULT_TOLERANCES = {
    "exact": 0.0,
    "kernel": 1e-12,
    "transform": 1e-8,
    "gram": 1e-6,
    "psd": 1e-10,
    "oracle": 1e-12,
}

DEFAULT_SAMPLES = {
    "kernel_points": 100,
    "transform_points": 20,
    "gram_points": 8,
    "grid": 5,
    "kernel_radius": 2.0,
    "transform_radius": 1.0,
    "grid_radius": 1.0,
}


@dataclass
class SuiteConfig:
    family: str | None = None
    N: int | None = None
    m: int | None = None
    roots: list | None = None
    mu: list = field(default_factory=list)
    t: list = field(default_factory=lambda: ["1/2", "1", "2"])
    basis_degree: int = 6
    kernel_degree: int = 24
    oracle_degree: int = 40
    tolerances: dict = field(default_factory=dict)
    samples: dict = field(default_factory=dict)
    seed: int = 0
    out: str | None = None

    def __post_init__(self):
        self.mu = [str(v) for v in self.mu]
        self.t = [str(v) for v in self.t]
        try:
            mus = [to_fraction(v) for v in self.mu]
        except (TypeError, ValueError) as exc:
            raise UnsupportedMultiplicityError(f"multiplicity values must be rationals: {exc}") from exc
        if any(v < 0 for v in mus):
            raise UnsupportedMultiplicityError("the multiplicity function must be non-negative")
        ts = [to_fraction(v) for v in self.t]
        if not ts or any(v <= 0 for v in ts):
            raise InvalidParameterError("t values must be positive rationals")
        if self.basis_degree < 2:
            raise InvalidParameterError("basis degree must be at least 2")
        if self.kernel_degree < self.basis_degree + 4:
            raise InvalidParameterError("kernel truncation must be at least basis degree + 4")
        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise InvalidParameterError(f"unknown tolerance keys {sorted(unknown)}")

    @property
    def t_values(self) -> list[Fraction]:
        return [to_fraction(v) for v in self.t]

    @property
    def mu_values(self) -> list[Fraction]:
        return [to_fraction(v) for v in self.mu]

    def tol(self, key: str) -> float:
        return float(self.tolerances.get(key, DEFAULT_TOLERANCES[key]))

    def sample(self, key: str):
        return self.samples.get(key, DEFAULT_SAMPLES[key])

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteConfig":
        known = set(cls.__dataclass_fields__)
        extra = set(data) - known
        if extra:
            raise InvalidParameterError(f"unknown config keys {sorted(extra)}")
        return cls(**data)


def load_config(path: str | Path) -> SuiteConfig:
    with open(path) as fh:
        return SuiteConfig.from_dict(json.load(fh))


def reference_configs() -> dict[str, SuiteConfig]:
    """The desk-scale reference runs: B2, A1^2 and Z2 at two multiplicities."""
    return {
        "B2": SuiteConfig(family="B", N=2, mu=["1/2", "3/2"], basis_degree=6),
        "A1^2": SuiteConfig(family="A1^N", N=2, mu=["1", "2"], basis_degree=8),
        "Z2(1/2)": SuiteConfig(family="A1^N", N=1, mu=["1/2"], basis_degree=8),
        "Z2(1)": SuiteConfig(family="A1^N", N=1, mu=["1"], basis_degree=8),
    }
