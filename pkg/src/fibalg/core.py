"""Shared value types for two-step ladder algebras.

The algebra is generated by a Hamiltonian H, an auxiliary diagonal
generator J3 and ladder operators a, a+ whose action is driven by two
real polynomials f and g.  Level eigenvalues obey the two-step
recurrence

    alpha[n+1] = f(alpha[n]) + beta[n],      beta[n+1] = g(alpha[n])

so a sequence of H eigenvalues depends on the two previous levels
(generalized Fibonacci behaviour).

Every type in this module is an immutable value object: construction
validates, instances never mutate, and they are safe to share between
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "TruncationError",
    "NonPhysicalSequenceError",
    "NoAdmissibleVacuumError",
    "InadmissibleVacuumError",
    "eval_poly",
    "CharacteristicFunctions",
    "VacuumState",
    "LadderSequence",
    "TruncatedRep",
    "LinearParams",
    "EigenPair",
    "matrix_to_rows",
    "rows_to_matrix",
]


class TruncationError(ValueError):
    """An iteration produced a non-finite value; ``index`` names the first bad step."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class NonPhysicalSequenceError(ValueError):
    """A ladder sequence with a negative squared norm was used where a
    physical one is required; ``index`` names the offending level."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class NoAdmissibleVacuumError(ValueError):
    """No choice of beta0 makes the requested vacuum admissible."""


class InadmissibleVacuumError(ValueError):
    """The supplied vacuum violates the lowest-level requirement alpha[n] >= alpha[0]."""

    def __init__(self, message: str, first_violation: int | None = None,
                 bound: float | None = None):
        super().__init__(message)
        self.first_violation = first_violation
        self.bound = bound


def eval_poly(coeffs: Sequence[float], x: float) -> float:
    """Evaluate a polynomial at ``x``, coefficients with the constant term first.

    Horner form, so sum(coeffs[k] * x**k) without explicit powers.
    """
    if len(coeffs) == 0:
        raise ValueError("coefficient list must be nonempty")
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class CharacteristicFunctions:
    """The pair of real polynomials (f, g) that define a two-step algebra.

    Coefficient lists are stored constant term first, matching their JSON
    encoding.
    """

    f_coeffs: tuple[float, ...]
    g_coeffs: tuple[float, ...]

    def __init__(self, f_coeffs: Sequence[float], g_coeffs: Sequence[float]):
        f = tuple(float(c) for c in f_coeffs)
        g = tuple(float(c) for c in g_coeffs)
        if not f or not g:
            raise ValueError("f and g need at least one coefficient each")
        _require_finite("f coefficient", *f)
        _require_finite("g coefficient", *g)
        object.__setattr__(self, "f_coeffs", f)
        object.__setattr__(self, "g_coeffs", g)

    @classmethod
    def linear(cls, r: float, s: float) -> "CharacteristicFunctions":
        """f(x) = r*x, g(x) = s*x."""
        return cls((0.0, float(r)), (0.0, float(s)))

    def f(self, x: float) -> float:
        return eval_poly(self.f_coeffs, x)

    def g(self, x: float) -> float:
        return eval_poly(self.g_coeffs, x)

    def to_dict(self) -> dict:
        return {"f_coeffs": list(self.f_coeffs), "g_coeffs": list(self.g_coeffs)}

    @classmethod
    def from_dict(cls, data: dict) -> "CharacteristicFunctions":
        return cls(data["f_coeffs"], data["g_coeffs"])


@dataclass(frozen=True)
class VacuumState:
    """Ground-state eigenvalue pair (alpha0 for H, beta0 for J3)."""

    alpha0: float
    beta0: float

    def __post_init__(self):
        object.__setattr__(self, "alpha0", float(self.alpha0))
        object.__setattr__(self, "beta0", float(self.beta0))
        _require_finite("vacuum eigenvalue", self.alpha0, self.beta0)


@dataclass(frozen=True)
class LadderSequence:
    """Iterated level data: alphas, betas and the ladder norms squared.

    ``alphas`` and ``betas`` hold one more entry than ``norms_sq``; the
    telescoped identity norms_sq[n] = alphas[n+1] - alphas[0] holds for
    every stored index.
    """

    vacuum: VacuumState
    alphas: tuple[float, ...]
    betas: tuple[float, ...]
    norms_sq: tuple[float, ...]

    def __init__(self, vacuum: VacuumState, alphas: Sequence[float],
                 betas: Sequence[float], norms_sq: Sequence[float]):
        a = tuple(float(x) for x in alphas)
        b = tuple(float(x) for x in betas)
        n2 = tuple(float(x) for x in norms_sq)
        if len(a) < 1 or len(b) != len(a) or len(n2) != len(a) - 1:
            raise ValueError("need len(alphas) = len(betas) = len(norms_sq) + 1")
        if a[0] != vacuum.alpha0 or b[0] != vacuum.beta0:
            raise ValueError("sequence must start at the vacuum eigenvalues")
        object.__setattr__(self, "vacuum", vacuum)
        object.__setattr__(self, "alphas", a)
        object.__setattr__(self, "betas", b)
        object.__setattr__(self, "norms_sq", n2)

    @property
    def levels(self) -> int:
        return len(self.norms_sq)

    def to_dict(self) -> dict:
        return {
            "alpha0": self.vacuum.alpha0,
            "beta0": self.vacuum.beta0,
            "alphas": list(self.alphas),
            "betas": list(self.betas),
            "norms_sq": list(self.norms_sq),
        }


def _readonly(mat: np.ndarray) -> np.ndarray:
    out = np.array(mat, dtype=float, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class TruncatedRep:
    """Dense d x d matrices for H, J3, a+ and a on a truncated Fock space.

    H and J3 are diagonal, a+ carries the ladder norms on its first
    subdiagonal and a is exactly its transpose.
    """

    dim: int
    H: np.ndarray
    J3: np.ndarray
    a_dag: np.ndarray
    a: np.ndarray

    def __init__(self, dim: int, H, J3, a_dag, a):
        dim = int(dim)
        if dim < 1:
            raise ValueError("dim must be positive")
        H, J3, a_dag, a = (_readonly(m) for m in (H, J3, a_dag, a))
        for name, m in (("H", H), ("J3", J3), ("a_dag", a_dag), ("a", a)):
            if m.shape != (dim, dim):
                raise ValueError(f"{name} must be {dim}x{dim}, got {m.shape}")
        if not np.array_equal(a, a_dag.T):
            raise ValueError("a must equal the transpose of a_dag")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "J3", J3)
        object.__setattr__(self, "a_dag", a_dag)
        object.__setattr__(self, "a", a)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "H": matrix_to_rows(self.H),
            "J3": matrix_to_rows(self.J3),
            "a_dag": matrix_to_rows(self.a_dag),
            "a": matrix_to_rows(self.a),
        }


@dataclass(frozen=True)
class LinearParams:
    """Slopes (r, s) of the linear case f(x) = r*x, g(x) = s*x."""

    r: float
    s: float

    def __post_init__(self):
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "s", float(self.s))
        _require_finite("linear parameter", self.r, self.s)

    def functions(self) -> CharacteristicFunctions:
        return CharacteristicFunctions.linear(self.r, self.s)


@dataclass(frozen=True)
class EigenPair:
    """Roots of lambda^2 - r*lambda - s = 0 with the branch convention
    lambda_plus >= lambda_minus when real, Im(lambda_plus) > 0 when complex."""

    lambda_plus: complex
    lambda_minus: complex
    discriminant: float

    @property
    def is_real(self) -> bool:
        return self.discriminant >= 0.0

    @property
    def moduli(self) -> tuple[float, float]:
        return (abs(self.lambda_plus), abs(self.lambda_minus))


def matrix_to_rows(mat: np.ndarray) -> list[list[float]]:
    """Row-major nested lists, the JSON encoding used throughout."""
    return [[float(x) for x in row] for row in np.asarray(mat)]


def rows_to_matrix(rows: Sequence[Sequence[float]]) -> np.ndarray:
    mat = np.array(rows, dtype=float)
    if mat.ndim != 2:
        raise ValueError("matrix rows must form a 2-D array")
    return mat
