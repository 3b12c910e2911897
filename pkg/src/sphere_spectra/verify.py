"""Cross-checks between the propagation engine, the closed forms and the
representation-theoretic oracle.

Each ``suite_*`` function returns a plain dict report
``{"suite", "passed", "checks", "failures", "first_failure"}`` so that the CLI
can serialize it directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from . import closed_form as cf
from .engine import (
    FACTORED_ODD_ORDER,
    HIGHER_SPIN,
    SPECTRAL_FUNCTION,
    OperatorSpec,
    loop_products,
    propagate,
    transition_quotient,
)
from .errors import ConsistencyError, DomainError, PoleError
from .rep_oracle import bochner, dirac_square, lichnerowicz_check
from .weights import FORM, SYMMETRIC, BundleSpec, IsotypicLabel, label_to_weight

F = Fraction


def closed_form_value(b: BundleSpec, op: OperatorSpec, lab: IsotypicLabel) -> Fraction:
    """Closed-form eigenvalue for ``op`` on the summand ``lab`` of ``b``.

    Spinor bundles (k = 0) are the same in both families. Raises PoleError
    where the spectral function has a pole.
    """
    eps = lab.eps if b.odd else 1
    if op.kind == HIGHER_SPIN:
        if b.family != SYMMETRIC:
            raise DomainError("higher spin operators live on the symmetric family")
        if b.odd:
            value = cf.higher_spin_eigen(b.n, b.k, lab.j, lab.q, eps)
            return value * value if op.squared else value
        return cf.higher_spin_sq_eigen(b.n, b.k, lab.j, lab.q)
    if b.family == SYMMETRIC and b.k > 0:
        raise DomainError(f"no closed form for {op.kind} on symmetric tensors of valence {b.k}")
    if op.kind == SPECTRAL_FUNCTION:
        value = cf.spectral_Z(b.n, b.k, lab.j, op.order_2r, lab.q if b.k else None, lab.eps)
    elif b.k == 0:
        value = cf.D_odd_eigen(b.n, op.l, lab.j, eps)
    else:
        value = cf.D_odd_k_eigen(b.n, b.k, op.l, lab.j, lab.q, eps)
    return value * value if op.squared else value


@dataclass
class Comparison:
    label: IsotypicLabel
    engine: Optional[Fraction]
    closed: Optional[Fraction]
    equal: bool


@dataclass
class VerifyReport:
    bundle: BundleSpec
    operator: OperatorSpec
    mode: str  # "exact" or "ratio"
    rows: list[Comparison] = field(default_factory=list)
    constant: Optional[Fraction] = None
    loops_checked: int = 0
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(r.equal for r in self.rows)

    def first_failure(self) -> Optional[Comparison]:
        return next((r for r in self.rows if not r.equal), None)


def verify_against_closed_form(b: BundleSpec, op: OperatorSpec, j_max: int) -> VerifyReport:
    """Compare the propagated table with the closed form label by label.

    Spectral functions are only defined up to normalization, so they are
    compared up to one global constant; everything else must agree exactly.
    Pole summands agree when both sides report a pole.
    """
    mode = "ratio" if op.kind == SPECTRAL_FUNCTION else "exact"
    report = VerifyReport(b, op, mode)
    try:
        table = propagate(b, op, j_max=j_max)
    except (ConsistencyError, DomainError, PoleError) as exc:
        report.error = f"{type(exc).__name__}: {exc}"
        return report
    report.loops_checked = table.checked_edges
    pairs = []
    for e in table.entries:
        try:
            closed = closed_form_value(b, op, e.label)
        except PoleError:
            closed = None
        pairs.append((e.label, e.eigenvalue, closed))
    constant = F(1)
    if mode == "ratio":
        ref = next(((x, y) for _, x, y in pairs if x and y), None)
        constant = ref[0] / ref[1] if ref else F(1)
        report.constant = constant
    for lab, x, y in pairs:
        if x is None or y is None:
            equal = x is None and y is None
        else:
            equal = x == constant * y
        report.rows.append(Comparison(lab, x, y, equal))
    return report


def _report(suite: str, failures: list[dict], checks: int) -> dict:
    return {
        "suite": suite,
        "passed": not failures,
        "checks": checks,
        "failures": len(failures),
        "first_failure": failures[0] if failures else None,
    }


def _fmt(x) -> Optional[str]:
    return None if x is None else str(x)


def _bundles(n_range: Iterable[int], k_max: int, family: str, k_min: int = 0):
    for n in n_range:
        for k in range(k_min, k_max + 1):
            if family == FORM and 2 * k >= n:
                continue
            yield BundleSpec(n, k, family, None if n % 2 else "+")


def _label(b: BundleSpec, j: int, q: Optional[int], eps: int = 1) -> IsotypicLabel:
    return IsotypicLabel(j, q, eps if b.odd else None)


def _quotient_or_pole(b, src, dst, op):
    try:
        return transition_quotient(b, src, dst, op)
    except PoleError:
        return "pole"


def _expected(num, den):
    return "pole" if den == 0 else F(num) / den


def suite_diagrams(n_range, k_max: int, j_max: int, two_rs=(1, 3, 5, 7)) -> dict:
    """Engine quotients against the displayed transition diagrams."""
    failures, checks = [], 0

    def check(b, src, dst, op, expected, what):
        nonlocal checks
        checks += 1
        got = _quotient_or_pole(b, src, dst, op)
        if got != expected:
            failures.append({"check": what, "bundle": str(b), "src": str(src), "dst": str(dst),
                             "order_2r": str(op.order_2r), "engine": _fmt(got), "expected": _fmt(expected)})

    order1 = OperatorSpec(HIGHER_SPIN)
    for b in _bundles(n_range, k_max, SYMMETRIC):
        n = b.n
        for j in range(j_max + 1):
            J = F(n, 2) + b.k + j
            for q in range(b.k + 1):
                src = _label(b, j, q)
                check(b, src, _label(b, j + 1, q), order1, (J + 1) / J, "j-up")
                if j:
                    check(b, src, _label(b, j - 1, q), order1, (J - 1) / J, "j-down")
                if q < b.k:
                    check(b, src, _label(b, j, q + 1), order1, F(n + 2 * q, n + 2 * q - 2), "q-up")
                if q:
                    check(b, src, _label(b, j, q - 1), order1, F(n + 2 * q - 4, n + 2 * q - 2), "q-down")
                if b.odd and (q == 0 or n > 3):
                    check(b, src, _label(b, j, q, -1), order1, F(-1), "eps-flip")

    for b in _bundles(n_range, k_max, FORM):
        n, k = b.n, b.k
        top_q = 1 if k else None
        for two_r in two_rs:
            op = OperatorSpec(SPECTRAL_FUNCTION, two_r)
            r = F(two_r, 2)
            for j in range(j_max + 1):
                J = F(n, 2) + j + (1 if k else 0)
                src = _label(b, j, top_q)
                check(b, src, _label(b, j + 1, top_q), op, _expected(J + F(1, 2) + r, J + F(1, 2) - r), "j-up")
                if j:
                    check(b, src, _label(b, j - 1, top_q), op,
                          _expected(-J + F(1, 2) + r, -J + F(1, 2) - r), "j-down")
                if k:
                    check(b, src, _label(b, j, 0), op,
                          _expected(n - 2 * k + 1 - two_r, n - 2 * k + 1 + two_r), "q-down")
                if b.odd and not (top_q == 1 and 2 * k == n - 1):
                    check(b, src, _label(b, j, top_q, -1), op, F(-1), "eps-flip")
    return _report("diagrams", failures, checks)


def suite_lichnerowicz(n_range, k_max: int, j_max: int) -> dict:
    """(closed-form eigenvalue on q = k)^2 == Bochner + n(n-1)/4 + k."""
    failures, checks = [], 0
    for b in _bundles(n_range, k_max, SYMMETRIC):
        for j in range(j_max + 1):
            lab = _label(b, j, b.k)
            alpha = label_to_weight(b, lab)
            if b.odd:
                mu_sq = cf.higher_spin_eigen(b.n, b.k, j, b.k, 1) ** 2
            else:
                mu_sq = cf.higher_spin_sq_eigen(b.n, b.k, j, b.k)
            checks += 1
            if not lichnerowicz_check(b, alpha, mu_sq):
                failures.append({"bundle": str(b), "label": str(lab), "closed_sq": str(mu_sq),
                                 "oracle": str(dirac_square(alpha, b))})
    return _report("lichnerowicz", failures, checks)


def closed_form_jobs(n_range, k_max: int, l_max: int):
    """Every (bundle, operator) pair with a closed form on the grid."""
    for b in _bundles(n_range, k_max, SYMMETRIC):
        yield b, OperatorSpec(HIGHER_SPIN, 1, squared=not b.odd)
    for b in _bundles(n_range, k_max, FORM):
        for l in range(l_max + 1):
            yield b, OperatorSpec(SPECTRAL_FUNCTION, 2 * l + 1)
            yield b, OperatorSpec(FACTORED_ODD_ORDER, 2 * l + 1)


def suite_closed_vs_engine(n_range, k_max: int, l_max: int, j_max: int) -> dict:
    failures, checks = [], 0
    for b, op in closed_form_jobs(n_range, k_max, l_max):
        rep = verify_against_closed_form(b, op, j_max)
        checks += len(rep.rows)
        bad = rep.first_failure()
        if rep.error or bad:
            failures.append({"bundle": str(b), "operator": op.kind, "order_2r": str(op.order_2r),
                             "error": rep.error,
                             "label": str(bad.label) if bad else None,
                             "engine": _fmt(bad.engine) if bad else None,
                             "closed": _fmt(bad.closed) if bad else None})
        for cyc, prod in loop_products(b, op, j_max):
            checks += 1
            if prod != 1:
                failures.append({"bundle": str(b), "operator": op.kind, "order_2r": str(op.order_2r),
                                 "loop": [str(x) for x in cyc], "product": str(prod)})
    return _report("closed-vs-engine", failures, checks)


def ttstar_from_laplacian(n: int, k: int, j: int) -> Fraction:
    """T_{k-1} T*_{k-1} on V(j, 0) over T^k through T*T on the same K-type over T^{k-1}:
    (1/k)(nabla^*nabla + (n - k + 3/2)(k - 1) - D^2/(n - 2k + 2)), all read from the oracle."""
    chir = None if n % 2 else "+"
    b = BundleSpec(n, k, FORM, chir)
    lower = BundleSpec(n, k - 1, FORM, chir)
    alpha = label_to_weight(b, _label(b, j, 0))
    lap = bochner(alpha, lower)
    d2 = dirac_square(alpha, lower)
    return (lap + (n - k + F(3, 2)) * (k - 1) - d2 / (n - 2 * k + 2)) / k


def suite_factored_identity(n_range, k_max: int, l_max: int, j_max: int) -> dict:
    failures, checks, skipped = [], 0, 0
    for b in _bundles(n_range, k_max, FORM, k_min=1):
        n, k = b.n, b.k
        for j in range(j_max + 1):
            checks += 1
            closed, oracle = cf.TTstar_eigen(n, k, j, 0), ttstar_from_laplacian(n, k, j)
            if closed != oracle:
                failures.append({"check": "ttstar", "n": n, "k": k, "j": j,
                                 "closed": str(closed), "oracle": str(oracle)})
            for l in range(1, l_max + 1):
                for q in (0, 1):
                    for eps in ((1, -1) if n % 2 else (1,)):
                        try:
                            ok = cf.factored_identity_check(n, k, l, j, q, eps)
                        except PoleError:
                            skipped += 1
                            continue
                        checks += 1
                        if not ok:
                            failures.append({"check": "factored", "n": n, "k": k, "l": l, "j": j, "q": q,
                                             "eps": eps, "factored": str(cf.factored_value(n, k, l, j, q, eps)),
                                             "closed": str(cf.D_odd_k_eigen(n, k, l, j, q, eps))})
    out = _report("factored-identity", failures, checks)
    out["skipped_c_i_poles"] = skipped
    return out


def _constant_ratio(pairs) -> bool:
    ratios = {x / y for x, y in pairs if y}
    zeros_agree = all(x == 0 for x, y in pairs if y == 0)
    return len(ratios) <= 1 and zeros_agree


def suite_proportionality(n_range, k_max: int, l_max: int, j_max: int) -> dict:
    """Z(1/2) against the Dirac/Rarita-Schwinger values and D_{2l+1}(,k) against Z(l + 1/2)."""
    failures, checks = [], 0
    for n in n_range:
        epss = (1, -1) if n % 2 else (None,)
        for j in range(j_max + 1):
            for eps in epss:
                checks += 1
                J = F(n, 2) + j
                if cf.spectral_Z(n, 0, j, 1, eps=eps) * F(n, 2) != (eps or 1) * J:
                    failures.append({"check": "Z(1/2) = eps J 2/n", "n": n, "j": j, "eps": eps})
                if n % 2:
                    for q in (0, 1):
                        checks += 1
                        z = cf.spectral_Z(n, 1, j, 1, q, eps)
                        if z * F(n + 2, 2) != cf.higher_spin_eigen(n, 1, j, q, eps):
                            failures.append({"check": "Z(1/2, q) = 2/(n+2) R^(1)", "n": n, "j": j, "q": q})
        for l in range(l_max + 1):
            pairs = []
            for j in range(j_max + 1):
                for eps in epss:
                    try:
                        pairs.append((cf.D_odd_eigen(n, l, j, eps or 1), cf.spectral_Z(n, 0, j, 2 * l + 1, eps=eps)))
                    except PoleError:
                        pass
            checks += 1
            if not _constant_ratio(pairs):
                failures.append({"check": "D_{2l+1} / Z constant", "n": n, "l": l})
            for k in range(1, k_max + 1):
                if 2 * k >= n:
                    continue
                pairs = []
                for j in range(j_max + 1):
                    for q in (0, 1):
                        for eps in epss:
                            try:
                                pairs.append((cf.D_odd_k_eigen(n, k, l, j, q, eps or 1),
                                              cf.spectral_Z(n, k, j, 2 * l + 1, q, eps)))
                            except PoleError:
                                pass
                checks += 1
                if not _constant_ratio(pairs):
                    failures.append({"check": "D_{2l+1,k} / Z constant", "n": n, "k": k, "l": l})
    return _report("proportionality", failures, checks)


SUITES = ("diagrams", "lichnerowicz", "closed-vs-engine", "factored-identity", "proportionality")


def run_suite(name: str, n_range, k_max: int = 3, l_max: int = 3, j_max: int = 10) -> dict:
    n_range = list(n_range)
    if name == "diagrams":
        return suite_diagrams(n_range, k_max, j_max)
    if name == "lichnerowicz":
        return suite_lichnerowicz(n_range, k_max, j_max)
    if name == "closed-vs-engine":
        return suite_closed_vs_engine(n_range, k_max, l_max, j_max)
    if name == "factored-identity":
        return suite_factored_identity(n_range, k_max, l_max, j_max)
    if name == "proportionality":
        return suite_proportionality(n_range, k_max, l_max, j_max)
    raise DomainError(f"unknown suite {name!r}")
