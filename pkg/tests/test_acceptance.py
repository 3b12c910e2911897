"""Acceptance criteria 1-8.

Each ``criterion_N`` returns ``(ok, detail)``; the wrapper times it and checks
the stated runtime budget. Under pytest the PASS/FAIL lines appear in the
terminal summary; ``python tests/test_acceptance.py`` prints them directly.
"""
from __future__ import annotations

import os
import sys
import time
from fractions import Fraction as F

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import binomial_dirac_mult  # noqa: E402
from sphere_spectra import closed_form as cf  # noqa: E402
from sphere_spectra.engine import (  # noqa: E402
    FACTORED_ODD_ORDER,
    HIGHER_SPIN,
    SPECTRAL_FUNCTION,
    OperatorSpec,
    loop_products,
    propagate,
)
from sphere_spectra.tables import Request, render_document, table_rows  # noqa: E402
from sphere_spectra.verify import (  # noqa: E402
    closed_form_jobs,
    suite_closed_vs_engine,
    suite_diagrams,
    suite_factored_identity,
    suite_lichnerowicz,
)
from sphere_spectra.weights import FORM, SYMMETRIC, BundleSpec  # noqa: E402

RESULTS: list[str] = []

ODD_N = (3, 5, 7, 9)
ALL_N = range(3, 11)


def _failures(rep: dict) -> str:
    return f"{rep['checks']} checks, {rep['failures']} failures" + (
        f", first {rep['first_failure']}" if rep["failures"] else "")


def criterion_1():
    rep = suite_diagrams(ODD_N, k_max=3, j_max=10, two_rs=(1, 3, 5, 7))
    return rep["passed"], _failures(rep)


def criterion_2():
    rep = suite_closed_vs_engine(ALL_N, k_max=3, l_max=3, j_max=10)
    return rep["passed"], _failures(rep)


def criterion_3():
    rep = suite_lichnerowicz(ALL_N, k_max=3, j_max=10)
    return rep["passed"], _failures(rep)


def criterion_4():
    b = BundleSpec(3, 0, SYMMETRIC)
    table = propagate(b, OperatorSpec(HIGHER_SPIN), j_max=20)
    bad = []
    for e in table.entries:
        j, eps = e.label.j, e.label.eps
        value = eps * (F(3, 2) + j)
        mult = (j + 1) * (j + 2)
        if not (e.eigenvalue == value == cf.higher_spin_eigen(3, 0, j, 0, eps)
                and e.multiplicity == mult == binomial_dirac_mult(3, j)):
            bad.append(str(e.label))
    return not bad, f"{len(table.entries)} summands, mismatches: {bad[:3]}"


def criterion_5():
    z = [cf.spectral_Z(3, 0, j, 3, eps=1) for j in range(2)]
    ok = z == [1, 7]
    b = BundleSpec(3, 0, FORM)
    d3 = propagate(b, OperatorSpec(FACTORED_ODD_ORDER, 3), j_max=20).values()
    zt = propagate(b, OperatorSpec(SPECTRAL_FUNCTION, 3), j_max=20).values()
    ratios = set()
    for lab, value in d3.items():
        ratios.add(value / cf.spectral_Z(3, 0, lab.j, 3, eps=lab.eps))
        ratios.add(cf.D_odd_eigen(3, 1, lab.j, lab.eps) / zt[lab])
    ok = ok and ratios == {F(15, 8)}
    return ok, f"Z(0), Z(1) = {z[0]}, {z[1]}; D_3/Z ratios {sorted(map(str, ratios))}"


def criterion_6():
    rep = suite_factored_identity((5, 7, 9), k_max=3, l_max=3, j_max=10)
    return rep["passed"], _failures(rep) + f", {rep['skipped_c_i_poles']} skipped at c_i poles"


def _criterion_1_2_tables():
    for n in ODD_N:
        for k in range(4):
            yield BundleSpec(n, k, SYMMETRIC), OperatorSpec(HIGHER_SPIN)
            if 2 * k < n:
                for two_r in (1, 3, 5, 7):
                    yield BundleSpec(n, k, FORM), OperatorSpec(SPECTRAL_FUNCTION, two_r)
    yield from closed_form_jobs(ALL_N, 3, 3)


def criterion_7():
    loops, bad = 0, []
    for b, op in _criterion_1_2_tables():
        for cyc, prod in loop_products(b, op, 10):
            loops += 1
            if prod != 1:
                bad.append((str(b), op.order_2r, [str(x) for x in cyc], str(prod)))
    return loops > 0 and not bad, f"{loops} four-cycles, {len(bad)} off by a factor"


def _big_table(workers: int) -> tuple[str, float]:
    req = Request(BundleSpec(9, 3, SYMMETRIC), "higher-spin")
    start = time.perf_counter()
    rows, _ = table_rows(req, 10000, "json", workers=workers)
    doc = render_document(req, rows, "json")
    return doc, time.perf_counter() - start


def criterion_8():
    single, t1 = _big_table(1)
    workers = max(2, os.cpu_count() or 1)
    parallel, tp = _big_table(workers)
    entries = single.count('"eps"')
    ok = single == parallel and t1 < 10 and tp < 3 and entries == 8 * 10001
    return ok, (f"{entries} entries, single {t1:.2f}s (< 10), {workers} workers {tp:.2f}s (< 3), "
                f"identical bytes: {single == parallel}, cpus: {os.cpu_count()}")


CRITERIA = {
    1: ("diagram reproduction", criterion_1, 1.0),
    2: ("closed form vs engine", criterion_2, 5.0),
    3: ("Lichnerowicz identity", criterion_3, 1.0),
    4: ("Dirac ground truth on S^3", criterion_4, 1.0),
    5: ("spectral function spot values", criterion_5, 1.0),
    6: ("factored identity sweep", criterion_6, 5.0),
    7: ("loop consistency", criterion_7, None),
    8: ("performance n=9 k=3 j<=10000", criterion_8, None),
}


def evaluate(number: int) -> tuple[bool, str]:
    name, fn, budget = CRITERIA[number]
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    if budget is not None:
        ok = ok and elapsed < budget
        detail += f"; {elapsed:.2f}s (budget {budget:g}s)"
    else:
        detail += f"; {elapsed:.2f}s total"
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {name}: {detail}"
    RESULTS.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, line = evaluate(number)
    assert ok, line


if __name__ == "__main__":
    outcomes = [evaluate(n)[0] for n in sorted(CRITERIA)]
    sys.exit(0 if all(outcomes) else 1)
