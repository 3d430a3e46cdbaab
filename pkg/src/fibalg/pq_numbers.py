"""Closed forms for the linear case built on Gauss p,q-numbers.

With (p, q) the two roots of lambda^2 - r*lambda - s = 0, the level
sequence has the Binet form

    alpha[n] = alpha0 * [n+1] + beta0 * [n],   [n] = (p^n - q^n) / (p - q),

and H, J3 and the ladder commutator all become functions of the number
operator.  [n] satisfies the same recurrence [n+1] = r*[n] + s*[n-1] as
the levels; running it backwards once gives [-1] = -1/(p*q) = 1/s, which
is what the J3 form needs at the vacuum.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import LinearParams, VacuumState
from .linear_dynamics import eigenvalues

__all__ = [
    "PQBasis",
    "gauss_number",
    "binet_alpha",
    "fock_H_diag",
    "fock_J3_diag",
    "commutator_diag",
    "casimir2_diag",
]

_DEGENERATE_REL_TOL = 1e-10


@dataclass(frozen=True)
class PQBasis:
    """Root pair (p, q) = (lambda_plus, lambda_minus), possibly complex."""

    p: complex
    q: complex

    def __init__(self, p: complex, q: complex, tol: float = 1e-9):
        p, q = complex(p), complex(q)
        scale = max(1.0, abs(p), abs(q))
        if abs((p + q).imag) > tol * scale or abs((p * q).imag) > tol * scale * scale:
            raise ValueError("p + q and p*q must be real: roots must be a real "
                             "pair or complex conjugates")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def from_params(cls, params: LinearParams) -> "PQBasis":
        pair = eigenvalues(params)
        return cls(pair.lambda_plus, pair.lambda_minus)

    @property
    def r(self) -> float:
        return (self.p + self.q).real

    @property
    def s(self) -> float:
        return (-self.p * self.q).real

    @property
    def is_complex(self) -> bool:
        return abs(self.p.imag) > 0.0

    @property
    def is_degenerate(self) -> bool:
        return (not self.is_complex
                and abs(self.p - self.q) < _DEGENERATE_REL_TOL * max(1.0, abs(self.p)))


def _gauss(n: int, basis: PQBasis) -> float:
    """[n] for n >= -1; the n = -1 value comes from the backward recurrence."""
    if n == -1:
        pq = (basis.p * basis.q).real
        if pq == 0.0:
            raise ValueError("[-1] needs s != 0; with s = 0 the two-step "
                             "structure degenerates to one step")
        return -1.0 / pq
    if n == 0:
        return 0.0
    if n == 1:
        return 1.0
    if basis.is_complex:
        rho, theta = cmath.polar(basis.p)
        return rho ** (n - 1) * math.sin(n * theta) / math.sin(theta)
    p, q = basis.p.real, basis.q.real
    if abs(p - q) < _DEGENERATE_REL_TOL * max(1.0, abs(p)):
        return n * p ** (n - 1)
    return (p ** n - q ** n) / (p - q)


def gauss_number(n: int, basis: PQBasis) -> float:
    """The two-parameter deformation [n] of the integer n.

    The degenerate root p = q takes the limit n * p**(n-1); a conjugate
    pair evaluates through the real trigonometric form
    rho**(n-1) * sin(n*theta) / sin(theta).
    """
    if n < 0:
        raise ValueError("gauss_number needs n >= 0")
    return _gauss(n, basis)


def binet_alpha(n: int, vacuum: VacuumState, basis: PQBasis) -> float:
    """Closed form of the level sequence: alpha0 * [n+1] + beta0 * [n]."""
    if n < 0:
        raise ValueError("binet_alpha needs n >= 0")
    return vacuum.alpha0 * _gauss(n + 1, basis) + vacuum.beta0 * _gauss(n, basis)


def fock_H_diag(n: int, vacuum: VacuumState, basis: PQBasis) -> float:
    """Diagonal of H as a function of the number operator; equals alpha[n]."""
    return binet_alpha(n, vacuum, basis)


def fock_J3_diag(n: int, vacuum: VacuumState, basis: PQBasis,
                 s: float | None = None) -> float:
    """Diagonal of J3: s * (alpha0 * [n] + beta0 * [n-1]).

    Reproduces beta0 at n = 0 through [-1] = 1/s and s * alpha[n-1]
    above, so it needs s != 0 at the vacuum level.
    """
    if n < 0:
        raise ValueError("fock_J3_diag needs n >= 0")
    if s is None:
        s = basis.s
    if n >= 1 and s == 0.0:
        return 0.0
    return s * (vacuum.alpha0 * _gauss(n, basis)
                + vacuum.beta0 * _gauss(n - 1, basis))


def commutator_diag(n: int, vacuum: VacuumState, basis: PQBasis) -> float:
    """Diagonal of [a, a+] in Fock space:
    alpha0 * ([n+2] - [n+1]) + beta0 * ([n+1] - [n])."""
    if n < 0:
        raise ValueError("commutator_diag needs n >= 0")
    return (vacuum.alpha0 * (_gauss(n + 2, basis) - _gauss(n + 1, basis))
            + vacuum.beta0 * (_gauss(n + 1, basis) - _gauss(n, basis)))


def casimir2_diag(n: int, vacuum: VacuumState, basis: PQBasis) -> float:
    """Diagonal of the second Casimir
    a a+ - alpha0 * ([N+2] - 1) - beta0 * ([N+1] - 1).

    The a a+ part is taken from the recurrence-iterated ladder norms, so
    the returned value cross-checks the closed forms against the
    recursion; it equals the constant beta0 on every level.
    """
    if n < 0:
        raise ValueError("casimir2_diag needs n >= 0")
    # a a+ |n> = N_n^2 |n> with N_n^2 = alpha[n+1] - alpha[0], iterated.
    r, s = basis.r, basis.s
    alpha_prev, alpha_cur = None, vacuum.alpha0
    beta_cur = vacuum.beta0
    for _ in range(n + 1):
        alpha_prev, alpha_cur = alpha_cur, r * alpha_cur + beta_cur
        beta_cur = s * alpha_prev
    aad = alpha_cur - vacuum.alpha0
    return (aad
            - vacuum.alpha0 * (_gauss(n + 2, basis) - 1.0)
            - vacuum.beta0 * (_gauss(n + 1, basis) - 1.0))
