"""Closed-form eigenvalues of the higher spin operators, the spectral functions
of intertwinors on Clifford-trace-free spinor-forms, and the factored
odd-order conformally invariant operators built from P_k and T_{k-1}T*_{k-1}.

All evaluators are exact over ``Fraction``. For even n the odd-order
operators swap chirality and have no eigenvalues themselves; the values
returned are those of E*D, E the chirality-exchanging involution (eps = +1).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .errors import DomainError, PoleError

F = Fraction


def _check_j(j: int) -> None:
    if j < 0:
        raise DomainError(f"j must be >= 0, got {j}")


def _check_eps(eps: int) -> None:
    if eps not in (1, -1):
        raise DomainError(f"eps must be +1 or -1, got {eps}")


def _check_q01(q: int) -> None:
    if q not in (0, 1):
        raise DomainError(f"q must be 0 or 1 on spinor-forms, got {q}")


def higher_spin_eigen(n: int, k: int, j: int, q: int, eps: int) -> Fraction:
    """Eigenvalue of the higher spin operator R^(k) on V_eps(j, q), n odd."""
    if n % 2 == 0:
        raise DomainError("R^(k) swaps chirality for even n; use higher_spin_sq_eigen")
    if not 0 <= q <= k:
        raise DomainError(f"q must lie in 0..{k}")
    _check_j(j)
    _check_eps(eps)
    return eps * F(n + 2 * q - 2, n + 2 * k - 2) * (F(n, 2) + k + j)


def higher_spin_sq_eigen(n: int, k: int, j: int, q: int) -> Fraction:
    """Eigenvalue of (R^(k))^2 on V(j, q), n even."""
    if n % 2:
        raise DomainError("use higher_spin_eigen for odd n")
    if not 0 <= q <= k:
        raise DomainError(f"q must lie in 0..{k}")
    _check_j(j)
    return (F(n + 2 * q - 2, n + 2 * k - 2) * (F(n, 2) + k + j)) ** 2


def gamma_ratio(x, m: int) -> Fraction:
    """Gamma(x + m) / Gamma(x) as the rising factorial x (x+1) ... (x+m-1)."""
    if m < 0:
        raise DomainError("m must be >= 0")
    x = F(x)
    out = F(1)
    for i in range(m):
        if x + i == 0:
            raise PoleError(f"Gamma pole at {x + i}")
        out *= x + i
    return out


def _J(n: int, k: int, j: int) -> Fraction:
    return F(n, 2) + j + (1 if k >= 1 else 0)


def spectral_Z(n: int, k: int, j: int, two_r, q: Optional[int] = None, eps: Optional[int] = None) -> Fraction:
    """Spectral function of the order-2r intertwinor on Clifford-trace-free spinor k-forms.

    k = 0:  eps * G(J+1/2+r) G(n/2+1/2-r) / (G(J+1/2-r) G(n/2+1/2+r)),  J = n/2 + j
    k >= 1: eps * (n-2k+1+2(2q-1)r)/(n-2k+1+2r) * G(J+1/2+r) G(n/2+3/2-r) / (G(J+1/2-r) G(n/2+3/2+r)),
            J = n/2 + 1 + j
    The prefactor eps is present only for odd n. Normalized to eps (or 1) at j = 0 on the top summand.
    """
    two_r = F(two_r)
    if two_r <= 0:
        raise DomainError("2r must be positive")
    _check_j(j)
    if n % 2:
        _check_eps(eps)
        sign = eps
    else:
        if eps not in (None, 1):
            raise DomainError("even n carries no eps")
        sign = 1
    r = two_r / 2
    x0 = F(n + 1, 2) + (1 if k >= 1 else 0)
    # Gamma arguments differ by integers, so both ratios are rising factorials
    num = gamma_ratio(x0 + r, j)
    try:
        den = gamma_ratio(x0 - r, j)
    except PoleError:
        raise PoleError(f"spectral function has a pole at j={j} (2r={two_r}, n={n})") from None
    value = sign * num / den
    if k >= 1:
        if q is None:
            raise DomainError("q is required for k >= 1")
        _check_q01(q)
        value *= F(n - 2 * k + 1 + 2 * (2 * q - 1) * r) / (n - 2 * k + 1 + 2 * r)
    return value


def spectral_Z_float(n: int, k: int, j: int, two_r: float, q: Optional[int] = None, eps: Optional[int] = None) -> float:
    """Floating evaluation of :func:`spectral_Z` via log-Gamma, for arbitrary real 2r > 0.

    Relative accuracy is about 1e-12 away from Gamma poles.
    """
    if two_r <= 0:
        raise DomainError("2r must be positive")
    r = two_r / 2
    J = n / 2 + j + (1 if k >= 1 else 0)
    x0 = (n + 1) / 2 + (1 if k >= 1 else 0)

    def lg(x: float) -> tuple[float, int]:
        if x <= 0 and x == math.floor(x):
            raise PoleError(f"Gamma pole at {x}")
        sign = -1 if x < 0 and math.floor(x) % 2 else 1
        return math.lgamma(x), sign

    terms = [lg(J + 0.5 + r), lg(x0 - r)]
    den_terms = [lg(J + 0.5 - r), lg(x0 + r)]
    log_mag = sum(t[0] for t in terms) - sum(t[0] for t in den_terms)
    sign = 1
    for _, s in terms + den_terms:
        sign *= s
    value = sign * math.exp(log_mag)
    if n % 2:
        _check_eps(eps)
        value *= eps
    if k >= 1:
        _check_q01(q)
        value *= (n - 2 * k + 1 + 2 * (2 * q - 1) * r) / (n - 2 * k + 1 + 2 * r)
    return value


def P_k_eigen(n: int, k: int, j: int, q: int, eps: int) -> Fraction:
    """Eigenvalue eps (n - 2k + 2q) J of P_k on V_eps(j, q), n odd, J = n/2 + 1 + j."""
    if n % 2 == 0:
        raise DomainError("P_k swaps chirality for even n; use P_k_sq_eigen")
    if k < 1:
        raise DomainError("P_k is defined here for k >= 1")
    _check_q01(q)
    _check_j(j)
    _check_eps(eps)
    return eps * (n - 2 * k + 2 * q) * _J(n, k, j)


def P_k_sq_eigen(n: int, k: int, j: int, q: int) -> Fraction:
    """Eigenvalue (n - 2k + 2q)^2 J^2 of P_k^2 on V(j, q), n even."""
    if n % 2:
        raise DomainError("use P_k_eigen for odd n")
    if k < 1:
        raise DomainError("P_k is defined here for k >= 1")
    _check_q01(q)
    _check_j(j)
    return (n - 2 * k + 2 * q) ** 2 * _J(n, k, j) ** 2


def TTstar_eigen(n: int, k: int, j: int, q: int) -> Fraction:
    """Eigenvalue of T_{k-1} T*_{k-1} on V(j, q) over T^k: 0 on q = 1,
    (n-2k+1)(J^2 - (n/2-k+1)^2) / (k (n-2k+2)) on q = 0 with J = n/2 + 1 + j."""
    if k < 1:
        raise DomainError("T_{k-1} needs k >= 1")
    _check_q01(q)
    _check_j(j)
    if q == 1:
        return F(0)
    J = _J(n, k, j)
    return (n - 2 * k + 1) * (J * J - (F(n, 2) - k + 1) ** 2) / (k * (n - 2 * k + 2))


def c_i_const(n: int, k: int, i: int) -> Fraction:
    """c_i = 16 k i^2 / ((n-2k+2)(n-2k+2-2i)(n-2k+2+2i))."""
    if k < 1:
        raise DomainError("c_i needs k >= 1")
    den = (n - 2 * k + 2) * (n - 2 * k + 2 - 2 * i) * (n - 2 * k + 2 + 2 * i)
    if den == 0:
        raise PoleError(f"c_{i} has a pole for n={n}, k={k}")
    return F(16 * k * i * i, den)


def D_odd_eigen(n: int, l: int, j: int, eps: int = 1) -> Fraction:
    """eps J prod_{p=1}^{l} (J^2 - p^2) with J = n/2 + j: the operator D prod(D^2 - p^2) on spinors."""
    if l < 0:
        raise DomainError("l must be >= 0")
    _check_j(j)
    _check_eps(eps)
    J = F(n, 2) + j
    value = eps * J
    for p in range(1, l + 1):
        value *= J * J - p * p
    return value


def D_odd_k_eigen(n: int, k: int, l: int, j: int, q: int, eps: int = 1) -> Fraction:
    """Eigenvalue of the order-(2l+1) operator D_{2l+1,k} on V_eps(j, q), J = n/2 + 1 + j."""
    if k < 1:
        raise DomainError("use D_odd_eigen for k = 0")
    if l < 0:
        raise DomainError("l must be >= 0")
    _check_q01(q)
    _check_j(j)
    _check_eps(eps)
    J = _J(n, k, j)
    value = eps * J
    for i in range(1, l + 1):
        value *= J * J - i * i
    if q == 0:
        value *= F(n - 2 * k - 2 * l, n - 2 * k + 2 + 2 * l)
    return value


def factored_value(n: int, k: int, l: int, j: int, q: int, eps: int = 1) -> Fraction:
    """D_{2l+1,k} assembled from its factors: (P/(n-2k+2)) prod_i (P^2/(n-2k+2)^2 - i^2 - c_i TT*).

    For even n the square of that expression is returned, built from P_k^2.
    """
    w = n - 2 * k + 2
    tt = TTstar_eigen(n, k, j, q)
    if n % 2:
        p = P_k_eigen(n, k, j, q, eps)
        p2 = p * p
        value = p / w
    else:
        p2 = P_k_sq_eigen(n, k, j, q)
        value = None
    prod = F(1)
    for i in range(1, l + 1):
        prod *= p2 / (w * w) - i * i - c_i_const(n, k, i) * tt
    if value is None:
        return p2 / (w * w) * prod * prod
    return value * prod


def factored_identity_check(n: int, k: int, l: int, j: int, q: int, eps: int = 1) -> bool:
    """Does the factored product reproduce D_odd_k_eigen (squared for even n)?"""
    d = D_odd_k_eigen(n, k, l, j, q, eps)
    return factored_value(n, k, l, j, q, eps) == (d if n % 2 else d * d)


def s3_ratio(n: int) -> Fraction:
    """S_3 / D_{3,1} on the round sphere."""
    if n < 3:
        raise DomainError("n must be >= 3")
    return F(n * (n + 2), 4)
