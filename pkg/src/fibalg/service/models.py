"""Request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

DEFAULT_TOL = 1e-9
DEFAULT_DIM = 32
DEFAULT_NMAX = 200


class ComplexValue(BaseModel):
    re: float
    im: float

    @classmethod
    def of(cls, z: complex) -> "ComplexValue":
        return cls(re=z.real, im=z.imag)


class ClassifyRequest(BaseModel):
    r: float
    s: float
    tol: float = Field(default=1e-10, gt=0)
    probe_depth: int = Field(default=64, ge=8)


class ClassifyResponse(BaseModel):
    r: float
    s: float
    stability: str
    region: str
    spectrum: str
    spectrum_period: Optional[int] = None
    fixed_points: str
    lambda_plus: ComplexValue
    lambda_minus: ComplexValue
    discriminant: float


class SpectrumRequest(BaseModel):
    r: float
    s: float
    alpha0: float
    beta0: float
    levels: int = Field(default=16, ge=1)
    tol: float = Field(default=DEFAULT_TOL, gt=0)
    n_max: int = Field(default=DEFAULT_NMAX, ge=16)


class LevelRow(BaseModel):
    n: int
    alpha: float
    beta: float
    gap: Optional[float] = None


class SpectrumResponse(BaseModel):
    r: float
    s: float
    alpha0: float
    beta0: float
    levels: list[LevelRow]
    gap_monotonicity: str
    limit: Optional[float] = None
    admissibility_status: str


class RepRequest(BaseModel):
    f_coeffs: list[float] = Field(min_length=1)
    g_coeffs: list[float] = Field(min_length=1)
    alpha0: float
    beta0: float
    dim: int = Field(default=DEFAULT_DIM, ge=3)
    tol: float = Field(default=DEFAULT_TOL, gt=0)
    include_matrices: bool = False


class CasimirInfo(BaseModel):
    forms_interior_diff: float
    commutator_residuals: dict[str, float]
    diag_expected: float
    diag_interior_max_dev: float
    constant_on_interior: bool


class RepResponse(BaseModel):
    dim: int
    interior_dim: int
    tol: float
    residuals: dict[str, float]
    passed: bool
    first_zero_norm: Optional[int] = None
    casimir: CasimirInfo
    matrices: Optional[dict[str, list[list[float]]]] = None


class AdmissibleRequest(BaseModel):
    r: float
    s: float
    alpha0: float
    beta0: Optional[float] = None
    n_max: int = Field(default=DEFAULT_NMAX, ge=16)
    tol: float = Field(default=DEFAULT_TOL, gt=0)


class NumericInfo(BaseModel):
    status: str
    first_violation: Optional[int] = None
    certificate: str
    n_checked: int


class AdmissibleResponse(BaseModel):
    r: float
    s: float
    alpha0: float
    beta0: Optional[float] = None
    region: Optional[str] = None
    beta0_lower_bound: Union[float, str, None] = None
    admissible: Optional[bool] = None
    status: str
    source: str
    numeric: Optional[NumericInfo] = None


class ChainRequest(BaseModel):
    rule: str = "A:AB,B:A"
    seed: str = "A"
    steps: int = Field(default=8, ge=0)
    word_cap: int = Field(default=10 ** 6, ge=1)


class ChainResponse(BaseModel):
    rule_matrix: list[list[int]]
    words: list[str]
    counts: list[list[int]]
    words_truncated_after: Optional[int] = None


class RegionsRequest(BaseModel):
    plane: Literal["rs", "lambda"] = "rs"
    grid_min: float = -3.0
    grid_max: float = 3.0
    grid_n: int = Field(default=41, ge=2)
    tol: float = Field(default=1e-10, gt=0)


class RegionsResponse(BaseModel):
    plane: str
    header: list[str]
    rows: list[list[Union[float, str]]]
