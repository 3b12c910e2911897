"""Casimir values, Bochner Laplacian eigenvalues and Weyl dimensions.

The connection Laplacian on the K-type ``alpha`` inside sections of the
homogeneous bundle ``lam`` over S^n = Spin(n+1)/Spin(n) (unit radius) is the
Casimir difference c_{n+1}(alpha) - c_n(lam), with the Euclidean pairing on
weight coordinates.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .weights import BundleSpec, as_weight, branches, rho, validate_dominant


def casimir(w: Sequence[Fraction], m: int) -> Fraction:
    """<w, w + 2 rho> for the Spin(m) type ``w``."""
    return _casimir(as_weight(w), m)


@lru_cache(maxsize=65536)
def _casimir(w, m: int) -> Fraction:
    if not validate_dominant(w, m):
        raise DomainError(f"{w} is not a dominant Spin({m}) weight")
    return sum((x * (x + 2 * r) for x, r in zip(w, rho(m))), Fraction(0))


def bochner(alpha: Sequence[Fraction], b: BundleSpec) -> Fraction:
    """Eigenvalue of nabla^* nabla on the ``alpha`` summand of sections of ``b``."""
    return _bochner(as_weight(alpha), b)


@lru_cache(maxsize=65536)
def _bochner(alpha, b: BundleSpec) -> Fraction:
    if not branches(alpha, b.lam, b.n):
        raise DomainError(f"{alpha} does not branch to {b.lam}")
    return casimir(alpha, b.n + 1) - casimir(b.lam, b.n)


def dirac_square(alpha: Sequence[Fraction], b: BundleSpec) -> Fraction:
    """nabla^* nabla + n(n-1)/4 + k: the square of gamma^a nabla_a on Clifford-trace-free tensors."""
    return bochner(alpha, b) + Fraction(b.n * (b.n - 1), 4) + b.k


def lichnerowicz_check(b: BundleSpec, alpha: Sequence[Fraction], mu_sq) -> bool:
    return Fraction(mu_sq) == dirac_square(alpha, b)


def positive_roots(m: int) -> list[tuple[int, int, int]]:
    """Positive roots of Spin(m) as (i, j, sign) meaning e_i + sign*e_j; j = -1 encodes e_i alone."""
    rank = m // 2
    roots = []
    for i in range(rank):
        for j in range(i + 1, rank):
            roots.append((i, j, -1))
            roots.append((i, j, 1))
        if m % 2:
            roots.append((i, -1, 0))
    return roots


@lru_cache(maxsize=None)
def _dimension_data(m: int):
    roots = positive_roots(m)
    two_rho = [m - 2 * i for i in range(1, m // 2 + 1)]
    den = 1
    for i, j, s in roots:
        den *= two_rho[i] + s * two_rho[j] if j >= 0 else two_rho[i]
    return roots, two_rho, den


def weyl_dim_doubled(two_w: Sequence[int], m: int) -> int:
    """Weyl dimension from the doubled weight 2w (integer entries); no dominance check."""
    roots, two_rho, den = _dimension_data(m)
    v = [a + r for a, r in zip(two_w, two_rho)]
    num = 1
    for i, j, s in roots:
        num *= v[i] + s * v[j] if j >= 0 else v[i]
    d, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"non-integral Weyl dimension for {two_w}/2 in Spin({m})")
    return d


def weyl_dim(w: Sequence[Fraction], m: int) -> int:
    """Dimension of the irreducible Spin(m) module with highest weight ``w``."""
    w = as_weight(w)
    if not validate_dominant(w, m):
        raise DomainError(f"{w} is not a dominant Spin({m}) weight")
    return weyl_dim_doubled([int(2 * x) for x in w], m)
