"""Spectrum generating technique on the lattice of isotypic summands.

Multiplication by the conformal factor omega moves a section of the K-type
alpha into types alpha +- e_i (and alpha itself when n is even). Compressing
the intertwining relation of an order-2r intertwinor between alpha and a
neighbour beta gives

    mu_beta * (Delta - 2r) = mu_alpha * (Delta + 2r),   Delta = B(beta) - B(alpha)

with B the Bochner Laplacian eigenvalue. Eigenvalues are propagated from one
normalized summand along a breadth-first spanning tree, and every remaining
lattice edge is checked against the same relation.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Optional

from .errors import ConsistencyError, DomainError, PoleError
from .rep_oracle import bochner, dirac_square, weyl_dim
from .weights import (
    BundleSpec,
    IsotypicLabel,
    Weight,
    check_label,
    enumerate_labels,
    label_to_weight,
)

HIGHER_SPIN = "higher_spin"
SPECTRAL_FUNCTION = "spectral_function"
FACTORED_ODD_ORDER = "factored_odd_order"
KINDS = (HIGHER_SPIN, SPECTRAL_FUNCTION, FACTORED_ODD_ORDER)


@dataclass(frozen=True)
class OperatorSpec:
    """An intertwinor of order ``order_2r``.

    ``squared`` asks for eigenvalues of the square; it is mandatory for the
    higher spin operators in even dimension, which swap chirality.
    """

    kind: str
    order_2r: Fraction = Fraction(1)
    squared: bool = False

    def __post_init__(self):
        object.__setattr__(self, "order_2r", Fraction(self.order_2r))
        if self.kind not in KINDS:
            raise DomainError(f"unknown operator kind {self.kind!r}")
        if self.order_2r <= 0:
            raise DomainError("order 2r must be positive")
        if self.kind == HIGHER_SPIN and self.order_2r != 1:
            raise DomainError("higher spin operators have order 1")
        if self.kind == FACTORED_ODD_ORDER and (
            self.order_2r.denominator != 1 or self.order_2r.numerator % 2 == 0
        ):
            raise DomainError("factored operators have odd integral order 2l+1")

    @property
    def l(self) -> int:
        return (self.order_2r.numerator - 1) // 2


@dataclass(frozen=True)
class Entry:
    label: IsotypicLabel
    weight: Weight
    eigenvalue: Optional[Fraction]  # None marks a summand cut off by a pole
    multiplicity: int


@dataclass
class SpectrumTable:
    bundle: BundleSpec
    operator: OperatorSpec
    entries: list[Entry]
    base: tuple[IsotypicLabel, Fraction] = None
    checked_edges: int = 0
    pole_edges: list[tuple[IsotypicLabel, IsotypicLabel]] = field(default_factory=list)

    def values(self) -> dict[IsotypicLabel, Optional[Fraction]]:
        return {e.label: e.eigenvalue for e in self.entries}

    @property
    def has_poles(self) -> bool:
        return any(e.eigenvalue is None for e in self.entries)


def neighbors(b: BundleSpec, lab: IsotypicLabel) -> list[IsotypicLabel]:
    """Summands reached from ``lab`` by multiplication with omega.

    Order: j+1, j-1, q+1, q-1, eps flip, then (even n) the summand itself.
    Candidates whose weight is not alpha +- e_i are dropped; this removes the
    eps flip at q >= 1 when q sits in the last slot (n = 3, or top-degree forms).
    """
    return list(_neighbors(b, lab))


@lru_cache(maxsize=65536)
def _neighbors(b: BundleSpec, lab: IsotypicLabel) -> tuple[IsotypicLabel, ...]:
    check_label(b, lab)
    candidates = [IsotypicLabel(lab.j + 1, lab.q, lab.eps), IsotypicLabel(lab.j - 1, lab.q, lab.eps)]
    if b.has_q:
        candidates += [IsotypicLabel(lab.j, lab.q + 1, lab.eps), IsotypicLabel(lab.j, lab.q - 1, lab.eps)]
    if b.odd:
        candidates.append(IsotypicLabel(lab.j, lab.q, -lab.eps))
    alpha = label_to_weight(b, lab)
    out = []
    for c in candidates:
        if c.j < 0 or (c.q is not None and not 0 <= c.q <= b.q_max):
            continue
        diff = [abs(x - y) for x, y in zip(label_to_weight(b, c), alpha) if x != y]
        if diff == [1]:
            out.append(c)
    if not b.odd:
        out.append(lab)
    return tuple(out)


def _delta(b: BundleSpec, src: IsotypicLabel, dst: IsotypicLabel) -> Fraction:
    return bochner(label_to_weight(b, dst), b) - bochner(label_to_weight(b, src), b)


def transition_quotient(
    b: BundleSpec, src: IsotypicLabel, dst: IsotypicLabel, op: OperatorSpec
) -> Fraction:
    """mu_dst / mu_src = (Delta + 2r) / (Delta - 2r)."""
    if src == dst:
        raise DomainError("the diagonal omega component does not constrain eigenvalues")
    if dst not in _neighbors(b, src):
        raise DomainError(f"{dst} is not an omega-neighbour of {src}")
    delta = _delta(b, src, dst)
    if delta == op.order_2r:
        raise PoleError(f"Delta = 2r = {delta} on the edge {src} -> {dst}")
    return (delta + op.order_2r) / (delta - op.order_2r)


def _exact_sqrt(x: Fraction) -> Fraction:
    if x < 0:
        raise DomainError(f"negative square {x}")
    p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if p * p != x.numerator or q * q != x.denominator:
        raise ArithmeticError(f"{x} is not a rational square")
    return Fraction(p, q)


def _top_label(b: BundleSpec, j: int) -> IsotypicLabel:
    """The eps=+1 summand on which the operator restricts to gamma^a nabla_a."""
    q = b.q_max if b.has_q else None
    return IsotypicLabel(j, q, 1 if b.odd else None)


def default_base(b: BundleSpec, op: OperatorSpec, j_max: int = 0) -> tuple[IsotypicLabel, Fraction]:
    """Normalized starting summand.

    Spectral functions: value eps (odd n) or 1 (even n) on the j = 0 top summand.
    Higher spin and factored operators: on the top tower the operator is
    D * prod_{p<=l}(D^2 - p^2) with D^2 read off the Lichnerowicz identity, so
    the base is taken at the first j where that is nonzero.
    """
    if op.kind == HIGHER_SPIN and b.family != "symmetric":
        raise DomainError("higher spin operators live on the symmetric family")
    if op.kind == SPECTRAL_FUNCTION:
        return _top_label(b, 0), Fraction(1)
    l = op.l if op.kind == FACTORED_ODD_ORDER else 0
    for j in range(max(j_max, 0) + l + 2):
        lab = _top_label(b, j)
        d2 = dirac_square(label_to_weight(b, lab), b)
        value = _exact_sqrt(d2)
        for p in range(1, l + 1):
            value *= d2 - p * p
        if value:
            return lab, value
    raise DomainError("no summand with nonzero eigenvalue in range")


def propagate(
    b: BundleSpec,
    op: OperatorSpec,
    base: Optional[tuple[IsotypicLabel, Fraction]] = None,
    j_max: int = 10,
) -> SpectrumTable:
    """Eigenvalues on every summand with j <= j_max, propagated from ``base``.

    Summands separated from the base by pole edges get eigenvalue None.
    Raises ConsistencyError if any lattice edge violates the compressed relation.
    """
    if op.kind == HIGHER_SPIN and not b.odd and not op.squared:
        raise DomainError("in even dimension only the square of a higher spin operator has eigenvalues")
    if base is None:
        base = default_base(b, op, j_max)
    base_label, base_value = base[0], Fraction(base[1])
    check_label(b, base_label)
    labels = enumerate_labels(b, max(j_max, base_label.j))
    in_range = set(labels)
    weights = {lab: label_to_weight(b, lab) for lab in labels}
    lap = {lab: bochner(w, b) for lab, w in weights.items()}
    two_r = op.order_2r

    values: dict[IsotypicLabel, Fraction] = {base_label: base_value}
    edges = []
    queue = deque([base_label])
    seen_edges = set()
    for lab in labels:
        for nb in neighbors(b, lab):
            if nb != lab and nb in in_range and (nb, lab) not in seen_edges:
                seen_edges.add((lab, nb))
                edges.append((lab, nb))
    adjacency: dict[IsotypicLabel, list[IsotypicLabel]] = {lab: [] for lab in labels}
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)

    while queue:
        src = queue.popleft()
        for dst in adjacency[src]:
            if dst in values:
                continue
            delta = lap[dst] - lap[src]
            if delta == two_r:
                continue
            values[dst] = values[src] * (delta + two_r) / (delta - two_r)
            queue.append(dst)

    checked = 0
    poles = []
    for u, v in edges:
        if u not in values or v not in values:
            poles.append((u, v))
            continue
        delta = lap[v] - lap[u]
        if values[v] * (delta - two_r) != values[u] * (delta + two_r):
            raise ConsistencyError(
                f"edge {u} -> {v}: {values[v]} * ({delta} - {two_r}) != {values[u]} * ({delta} + {two_r})"
            )
        if delta in (two_r, -two_r):
            poles.append((u, v))
        checked += 1

    entries = []
    for lab in labels:
        if lab.j > j_max:
            continue
        mu = values.get(lab)
        if mu is not None and op.squared:
            mu = mu * mu
        entries.append(Entry(lab, weights[lab], mu, weyl_dim(weights[lab], b.n + 1)))
    return SpectrumTable(b, op, entries, (base_label, base_value), checked, poles)


def loop_products(b: BundleSpec, op: OperatorSpec, j_max: int) -> list[tuple[tuple, Fraction]]:
    """Quotient products around every (j, q) plaquette and every eps-flip square.

    Plaquettes touching a pole edge are skipped.
    """
    out = []
    for lab in enumerate_labels(b, j_max - 1):
        cycles = []
        if b.has_q and lab.q < b.q_max:
            up_j = IsotypicLabel(lab.j + 1, lab.q, lab.eps)
            cycles.append([lab, up_j, IsotypicLabel(lab.j + 1, lab.q + 1, lab.eps),
                           IsotypicLabel(lab.j, lab.q + 1, lab.eps)])
        if b.odd:
            flip = IsotypicLabel(lab.j, lab.q, -lab.eps)
            if flip in neighbors(b, lab):
                cycles.append([lab, IsotypicLabel(lab.j + 1, lab.q, lab.eps),
                               IsotypicLabel(lab.j + 1, lab.q, -lab.eps), flip])
        for cyc in cycles:
            prod = Fraction(1)
            try:
                for u, v in zip(cyc, cyc[1:] + cyc[:1]):
                    prod *= transition_quotient(b, u, v, op)
            except (PoleError, ZeroDivisionError):
                continue
            out.append((tuple(cyc), prod))
    return out
