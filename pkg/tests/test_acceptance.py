"""The fourteen acceptance criteria over the four reference configurations.

Each criterion prints one PASS/FAIL line naming its worst residual; a
criterion passes when every check it owns passes in every configuration
where it applies.
"""

import pytest

from dunklsb.harness import reference_configs, run_verification

CRITERIA = range(1, 15)


@pytest.fixture(scope="module")
def reports():
    return {name: run_verification(cfg) for name, cfg in reference_configs().items()}


def _worst(results):
    vals = [r.residual for r in results if isinstance(r.residual, (int, float)) and r.passed is not None]
    return max(vals, default=0.0)


@pytest.mark.slow
@pytest.mark.parametrize("criterion", CRITERIA)
def test_criterion(criterion, reports, capsys):
    ran, failed = [], []
    for name, rep in reports.items():
        for r in rep.by_criterion().get(criterion, []):
            if r.passed is None:
                continue
            ran.append(r)
            if not r.passed:
                failed.append(f"{name}:{r.id} residual {r.residual} > {r.tolerance:g} {r.reason or ''}".strip())
    ok = bool(ran) and not failed
    with capsys.disabled():
        print(f"\ncriterion {criterion:2d}: {'PASS' if ok else 'FAIL'}  "
              f"{len(ran)} checks, worst residual {_worst(ran):.3g}" + ("" if ok else "  " + "; ".join(failed)))
    assert ran, "no check ran for this criterion"
    assert not failed, "\n".join(failed)
