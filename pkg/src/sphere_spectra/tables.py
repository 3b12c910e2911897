"""Spectrum tables for the command line: evaluation, JSON/CSV rendering,
and j-block parallelism that never changes the output bytes.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import closed_form as cf
from .engine import FACTORED_ODD_ORDER, HIGHER_SPIN, SPECTRAL_FUNCTION, OperatorSpec, propagate
from .errors import DomainError, PoleError
from .rep_oracle import weyl_dim_doubled
from .verify import closed_form_value
from .weights import FORM, SYMMETRIC, BundleSpec, IsotypicLabel, enumerate_labels

SCHEMA_VERSION = 1

OPERATORS = ("higher-spin", "higher-spin-squared", "Z", "D-odd", "P_k", "TTstar")
CSV_HEADER = "eps,j,q,eig_num,eig_den,multiplicity,weight"


@dataclass(frozen=True)
class Request:
    bundle: BundleSpec
    operator: str
    order_2r: Optional[Fraction] = None
    source: str = "closed-form"

    def __post_init__(self):
        b, name = self.bundle, self.operator
        if name not in OPERATORS:
            raise DomainError(f"unknown operator {name!r}")
        if name in ("higher-spin", "higher-spin-squared") and b.family != SYMMETRIC:
            raise DomainError("higher spin operators act on the symmetric family")
        if name == "higher-spin" and not b.odd:
            raise DomainError("for even n the higher spin operator swaps chirality; use higher-spin-squared")
        if name in ("Z", "D-odd"):
            if self.order_2r is None:
                raise DomainError(f"--order-2r is required for {name}")
            if b.family == SYMMETRIC and b.k > 0:
                raise DomainError(f"{name} is available on spinor-forms (and spinors), not symmetric k >= 1")
        if name in ("P_k", "TTstar"):
            if b.family != FORM or b.k < 1:
                raise DomainError(f"{name} needs the form family with k >= 1")
            if self.source == "engine":
                raise DomainError(f"{name} has no engine route")
        self.spec()  # validates order_2r for D-odd

    def spec(self) -> Optional[OperatorSpec]:
        if self.operator == "higher-spin":
            return OperatorSpec(HIGHER_SPIN)
        if self.operator == "higher-spin-squared":
            return OperatorSpec(HIGHER_SPIN, 1, squared=True)
        if self.operator == "Z":
            return OperatorSpec(SPECTRAL_FUNCTION, self.order_2r)
        if self.operator == "D-odd":
            return OperatorSpec(FACTORED_ODD_ORDER, self.order_2r)
        return None

    def operator_doc(self) -> dict:
        spec = self.spec()
        if spec is not None:
            kind, order, squared = spec.kind, spec.order_2r, spec.squared
        elif self.operator == "P_k":
            kind, order, squared = "P_k", Fraction(1), not self.bundle.odd
        else:
            kind, order, squared = "TTstar", Fraction(2), False
        return {"name": self.operator, "kind": kind, "order_2r": [order.numerator, order.denominator],
                "squared": squared}


def evaluator(req: Request) -> Callable[[IsotypicLabel], Fraction]:
    """Closed-form eigenvalue of the requested operator as a function of the label."""
    b = req.bundle
    if req.operator == "P_k":
        if b.odd:
            return lambda lab: cf.P_k_eigen(b.n, b.k, lab.j, lab.q, lab.eps)
        return lambda lab: cf.P_k_sq_eigen(b.n, b.k, lab.j, lab.q)
    if req.operator == "TTstar":
        return lambda lab: cf.TTstar_eigen(b.n, b.k, lab.j, lab.q)
    spec = req.spec()
    return lambda lab: closed_form_value(b, spec, lab)


def doubled_weight(b: BundleSpec, lab: IsotypicLabel) -> list[int]:
    """2 * label_to_weight(b, lab) as integers."""
    w = [1] * b.k_rank
    if b.family == SYMMETRIC:
        w[0] = 1 + 2 * b.k + 2 * lab.j
    else:
        w[0] = (3 if b.k else 1) + 2 * lab.j
        for i in range(1, b.k):
            w[i] = 3
    if b.has_q:
        w[1 if b.family == SYMMETRIC else b.k] = 1 + 2 * lab.q
    if b.odd:
        w[-1] *= lab.eps
    return w


def _pair(x: int) -> str:
    return f"[{x // 2}, 1]" if x % 2 == 0 else f"[{x}, 2]"


def _ratio(x: int) -> str:
    return f"{x // 2}" if x % 2 == 0 else f"{x}/2"


def _opt(x) -> str:
    return "" if x is None else str(x)


def render_row(lab: IsotypicLabel, two_w: list[int], mu: Optional[Fraction], mult: int, fmt: str) -> str:
    if fmt == "csv":
        num, den = ("pole", "") if mu is None else (mu.numerator, mu.denominator)
        weight = ";".join(_ratio(x) for x in two_w)
        return f"{_opt(lab.eps)},{lab.j},{_opt(lab.q)},{num},{den},{mult},{weight}"
    eps = "null" if lab.eps is None else lab.eps
    q = "null" if lab.q is None else lab.q
    eig = "null" if mu is None else f"[{mu.numerator}, {mu.denominator}]"
    weight = ", ".join(_pair(x) for x in two_w)
    return (f'{{"eps": {eps}, "j": {lab.j}, "q": {q}, "weight": [{weight}], '
            f'"eigenvalue": {eig}, "multiplicity": "{mult}"}}')


def _closed_form_block(req: Request, j_lo: int, j_hi: int, fmt: str) -> tuple[list[str], int]:
    b = req.bundle
    value = evaluator(req)
    m = b.n + 1
    rows, poles = [], 0
    for lab in enumerate_labels(b, j_hi, j_lo):
        try:
            mu = value(lab)
        except PoleError:
            mu = None
            poles += 1
        two_w = doubled_weight(b, lab)
        rows.append(render_row(lab, two_w, mu, weyl_dim_doubled(two_w, m), fmt))
    return rows, poles


def _block_task(args):
    return _closed_form_block(*args)


def table_rows(req: Request, j_max: int, fmt: str, workers: int = 1, block: int = 1000) -> tuple[list[str], int]:
    """Rendered rows in (j, q, eps) order and the number of pole entries."""
    if req.source == "engine":
        table = propagate(req.bundle, req.spec(), j_max=j_max)
        rows = [render_row(e.label, doubled_weight(req.bundle, e.label), e.eigenvalue, e.multiplicity, fmt)
                for e in table.entries]
        return rows, sum(e.eigenvalue is None for e in table.entries)
    if workers <= 1 or j_max < block:
        return _closed_form_block(req, 0, j_max, fmt)
    chunks = [(req, lo, min(lo + block - 1, j_max), fmt) for lo in range(0, j_max + 1, block)]
    rows, poles = [], 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part, p in pool.map(_block_task, chunks):
            rows.extend(part)
            poles += p
    return rows, poles


def render_document(req: Request, rows: list[str], fmt: str) -> str:
    if fmt == "csv":
        return "\n".join([CSV_HEADER] + rows) + "\n"
    b = req.bundle
    head = {
        "schema_version": SCHEMA_VERSION,
        "bundle": {"n": b.n, "k": b.k, "family": b.family, "chirality": b.chirality},
        "operator": req.operator_doc(),
        "source": req.source,
    }
    prefix = json.dumps(head, indent=1)[:-2]
    body = ",\n".join("  " + r for r in rows)
    return f'{prefix},\n "entries": [\n{body}\n ]\n}}\n'
