"""Dominant weights of Spin(m), the Spin(n+1) -> Spin(n) branching rule, and
the (eps, j, q) coordinates of the isotypic summands over the two bundle
families on S^n.

Weights are tuples of ``Fraction`` with denominator 1 or 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DomainError, StructuralError

Weight = Tuple[Fraction, ...]

HALF = Fraction(1, 2)

SYMMETRIC = "symmetric"
FORM = "form"
FAMILIES = (SYMMETRIC, FORM)


def as_weight(entries: Iterable) -> Weight:
    """Coerce ints, Fractions or strings such as ``"3/2"`` to a weight tuple."""
    return tuple(Fraction(e) for e in entries)


def _is_half_integer(x: Fraction) -> bool:
    return x.denominator in (1, 2)


def validate_dominant(w: Sequence[Fraction], m: int) -> bool:
    """True iff ``w`` is a dominant integral weight of Spin(m)."""
    if m < 3:
        raise DomainError(f"Spin({m}) is not handled; need m >= 3")
    rank = m // 2
    if len(w) != rank:
        raise StructuralError(f"Spin({m}) weights have {rank} entries, got {len(w)}")
    w = as_weight(w)
    if not all(_is_half_integer(x) for x in w):
        return False
    if any((x - w[0]).denominator != 1 for x in w):
        return False
    if any(w[i] < w[i + 1] for i in range(rank - 2)):
        return False
    if m % 2:
        return (rank < 2 or w[-2] >= w[-1]) and w[-1] >= 0
    return w[-2] >= abs(w[-1])


def rho(m: int) -> Weight:
    """Half-sum of the positive roots of Spin(m): entries (m - 2i)/2."""
    if m < 3:
        raise DomainError(f"Spin({m}) is not handled; need m >= 3")
    return tuple(Fraction(m - 2 * i, 2) for i in range(1, m // 2 + 1))


def branches(alpha: Sequence[Fraction], lam: Sequence[Fraction], n: int) -> bool:
    """Does the Spin(n) type ``lam`` occur in the restriction of the Spin(n+1) type ``alpha``?

    Interlacing as usually displayed:
      n odd:  a1 >= l1 >= a2 >= ... >= l_l >= |a_{l+1}|
      n even: a1 >= l1 >= a2 >= ... >= l_{l-1} >= a_l >= |l_l|
    """
    return _branches(as_weight(alpha), as_weight(lam), n)


@lru_cache(maxsize=65536)
def _branches(alpha: Weight, lam: Weight, n: int) -> bool:
    if not validate_dominant(alpha, n + 1) or not validate_dominant(lam, n):
        raise DomainError(f"invalid weights {alpha} / {lam} for Spin({n + 1}) / Spin({n})")
    if (alpha[0] - lam[0]).denominator != 1:
        return False
    rank = n // 2
    if n % 2:
        chain = []
        for i in range(rank):
            chain += [alpha[i], lam[i]]
        chain.append(abs(alpha[rank]))
    else:
        chain = []
        for i in range(rank - 1):
            chain += [alpha[i], lam[i]]
        chain += [alpha[rank - 1], abs(lam[rank - 1])]
    return all(chain[i] >= chain[i + 1] for i in range(len(chain) - 1))


@dataclass(frozen=True)
class BundleSpec:
    """The Spin(n) type defining a bundle of Clifford-trace-free spinor-tensors on S^n.

    ``symmetric``: trace-free symmetric k-tensors, type (1/2+k, 1/2, ..., [+-]1/2).
    ``form``: k-forms, type (3/2 x k, 1/2, ..., [+-]1/2), 0 <= k < n/2.
    ``chirality`` is ``"+"``/``"-"`` for even n and ``None`` for odd n.
    """

    n: int
    k: int
    family: str
    chirality: Optional[str] = None

    def __post_init__(self):
        if self.n < 3:
            raise DomainError(f"sphere dimension must be >= 3, got {self.n}")
        if self.k < 0:
            raise DomainError(f"tensor valence must be >= 0, got {self.k}")
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.family == FORM and not 2 * self.k < self.n:
            raise DomainError(f"form bundles need 0 <= k < n/2, got k={self.k}, n={self.n}")
        if self.n % 2:
            if self.chirality is not None:
                raise DomainError("odd n carries no chirality")
        elif self.chirality not in ("+", "-"):
            raise DomainError("even n needs chirality '+' or '-'")

    @property
    def odd(self) -> bool:
        return bool(self.n % 2)

    @property
    def has_q(self) -> bool:
        return not (self.family == FORM and self.k == 0)

    @property
    def q_max(self) -> Optional[int]:
        if not self.has_q:
            return None
        return self.k if self.family == SYMMETRIC else 1

    @property
    def k_rank(self) -> int:
        """Rank of K = Spin(n+1)."""
        return (self.n + 1) // 2

    @property
    def lam(self) -> Weight:
        """Highest weight of the defining Spin(n) type."""
        rank = self.n // 2
        if self.family == SYMMETRIC:
            w = [HALF + self.k] + [HALF] * (rank - 1)
        else:
            w = [Fraction(3, 2)] * self.k + [HALF] * (rank - self.k)
        if self.chirality == "-":
            w[-1] = -w[-1]
        return tuple(w)

    def _q_slot(self) -> int:
        return 1 if self.family == SYMMETRIC else self.k

    def _first(self) -> Fraction:
        if self.family == SYMMETRIC:
            return HALF + self.k
        return Fraction(3, 2) if self.k else HALF


@dataclass(frozen=True)
class IsotypicLabel:
    """Coordinates (eps, j, q) of a Spin(n+1)-isotypic summand.

    ``eps`` is None for even n; ``q`` is None for spinor-valued 0-forms.
    """

    j: int
    q: Optional[int] = None
    eps: Optional[int] = None

    def sort_key(self) -> tuple:
        return (self.j, -1 if self.q is None else self.q, 0 if self.eps is None else -self.eps)

    def __str__(self):
        parts = [f"j={self.j}"]
        if self.q is not None:
            parts.append(f"q={self.q}")
        if self.eps is not None:
            parts.append(f"eps={self.eps:+d}")
        return "(" + ", ".join(parts) + ")"


def check_label(b: BundleSpec, lab: IsotypicLabel) -> None:
    if not isinstance(lab.j, int) or lab.j < 0:
        raise DomainError(f"j must be a non-negative integer, got {lab.j!r}")
    if b.has_q:
        if lab.q is None or not 0 <= lab.q <= b.q_max:
            raise DomainError(f"q must lie in 0..{b.q_max} for {b}, got {lab.q!r}")
    elif lab.q is not None:
        raise DomainError("spinor bundles carry no q index")
    if b.odd:
        if lab.eps not in (1, -1):
            raise DomainError(f"odd n needs eps = +1 or -1, got {lab.eps!r}")
    elif lab.eps is not None:
        raise DomainError("even n labels carry no eps")


def label_to_weight(b: BundleSpec, lab: IsotypicLabel) -> Weight:
    """Explicit Spin(n+1) highest weight of the labelled summand."""
    return _label_weight(b, lab)


@lru_cache(maxsize=65536)
def _label_weight(b: BundleSpec, lab: IsotypicLabel) -> Weight:
    check_label(b, lab)
    rank = b.k_rank
    w = [HALF] * rank
    w[0] = b._first() + lab.j
    if b.family == FORM:
        for i in range(1, b.k):
            w[i] = Fraction(3, 2)
    if b.has_q:
        w[b._q_slot()] = HALF + lab.q
    if b.odd:
        w[-1] = lab.eps * w[-1]
    return tuple(w)


def weight_to_label(b: BundleSpec, alpha: Sequence[Fraction]) -> Optional[IsotypicLabel]:
    """Inverse of :func:`label_to_weight`; None if ``alpha`` is not in the lattice."""
    alpha = as_weight(alpha)
    if len(alpha) != b.k_rank:
        return None
    j = alpha[0] - b._first()
    if j.denominator != 1 or j < 0:
        return None
    q = None
    if b.has_q:
        q = abs(alpha[b._q_slot()]) - HALF
        if q.denominator != 1 or not 0 <= q <= b.q_max:
            return None
        q = int(q)
    eps = None
    if b.odd:
        if alpha[-1] == 0:
            return None
        eps = 1 if alpha[-1] > 0 else -1
    lab = IsotypicLabel(int(j), q, eps)
    return lab if label_to_weight(b, lab) == alpha else None


def enumerate_labels(b: BundleSpec, j_max: int, j_min: int = 0) -> list[IsotypicLabel]:
    """All summands with j_min <= j <= j_max, ordered by (j, q, eps) with eps=+1 first."""
    qs = range(b.q_max + 1) if b.has_q else [None]
    epss = (1, -1) if b.odd else (None,)
    return [IsotypicLabel(j, q, e) for j in range(max(j_min, 0), j_max + 1) for q in qs for e in epss]
