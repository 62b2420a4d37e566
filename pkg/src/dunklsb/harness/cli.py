"""Command line entry point: ``dunklsb verify | kernel | basis``."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from ..coxeter import build_root_system, generate_group, make_multiplicity, orbit_partition
from ..dunklkernel import VERSIONS, build_kernel_blocks, default_truncation, sb_kernel, tail_estimate
from ..errors import DunklError
from ..hermite import ORDERINGS, build_orthogonal_basis
from ..polyring import DunklContext
from ..scalars import to_fraction
from .config import load_config
from .report import FORMATS, emit_report
from .runner import run_verification


def _vector(text: str) -> list[complex]:
    text = text.strip()
    if text.startswith("["):
        return [complex(v) if not isinstance(v, list) else complex(*v) for v in json.loads(text)]
    return [complex(v.replace(" ", "")) for v in text.split(",")]


def _root_args(p: argparse.ArgumentParser):
    p.add_argument("--family", default="B", help="A1^N, A, B, D or I2")
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--m", type=int, help="dihedral order for I2")
    p.add_argument("--roots", help="JSON list of root vectors, instead of a family")
    p.add_argument("--mu", default="1/2,3/2", help="comma separated multiplicity per orbit")


def _context(args) -> DunklContext:
    if args.roots:
        rs = build_root_system(roots=json.loads(args.roots))
    else:
        rs = build_root_system(args.family, args.N, args.m)
    group = generate_group(rs)
    mu = make_multiplicity(orbit_partition(rs, group), [to_fraction(v) for v in args.mu.split(",")])
    return DunklContext(rs, mu, group)


def cmd_verify(args) -> int:
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg.seed = args.seed
    report = run_verification(cfg)
    out = args.out or cfg.out
    text = emit_report(report, args.format, out)
    if out is None:
        sys.stdout.write(text)
    else:
        s = report.results
        bad = [r.id for r in s if r.passed is False]
        print(f"{len(s)} checks, {len(bad)} failing{': ' + ' '.join(bad) if bad else ''}; report written to {out}")
    return 0 if report.passed else 1


def cmd_kernel(args) -> int:
    ctx = _context(args)
    z, q = np.array(_vector(args.z)), np.array(_vector(args.q))
    degree = args.degree or default_truncation(ctx.N)
    table = build_kernel_blocks(ctx, degree)
    t = to_fraction(args.t)
    value = sb_kernel(table, args.version, t, z, q)
    if args.version == "BSO":
        x = 2 * np.linalg.norm(z) * np.linalg.norm(q)
    elif args.version == "E":
        x = np.linalg.norm(z) * np.linalg.norm(q)
    else:
        x = np.linalg.norm(z) * np.linalg.norm(q) / float(t)
    print(f"value {value.real:.17g}{value.imag:+.17g}j")
    print(f"truncation_degree {degree}")
    print(f"tail_estimate {tail_estimate(float(x), degree):.3e}")
    return 0


def cmd_basis(args) -> int:
    ctx = _context(args)
    basis = build_orthogonal_basis(ctx, args.degree, args.ordering)
    sys.stdout.write(basis.to_csv())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dunklsb", description="Dunkl kernels and Segal-Bargmann transforms")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the check catalog for a configuration")
    v.add_argument("--config", required=True)
    v.add_argument("--out")
    v.add_argument("--format", choices=FORMATS, default="json")
    v.add_argument("--seed", type=int)
    v.set_defaults(fn=cmd_verify)

    k = sub.add_parser("kernel", help="evaluate one of the kernels")
    k.add_argument("--version", choices=VERSIONS, required=True)
    k.add_argument("--t", default="1")
    k.add_argument("--z", required=True, help="comma separated coordinates, complex allowed (1+2j)")
    k.add_argument("--q", required=True)
    k.add_argument("--degree", type=int, help="kernel truncation degree")
    _root_args(k)
    k.set_defaults(fn=cmd_kernel)

    b = sub.add_parser("basis", help="emit the orthogonal basis q_nu")
    b.add_argument("--degree", type=int, required=True)
    b.add_argument("--emit", choices=("csv",), default="csv")
    b.add_argument("--ordering", choices=ORDERINGS, default="graded-lex")
    _root_args(b)
    b.set_defaults(fn=cmd_basis)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (DunklError, OSError, ValueError) as exc:
        print(f"dunklsb: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
