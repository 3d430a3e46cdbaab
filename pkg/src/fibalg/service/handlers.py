"""Handlers mapping request models onto the library; used both by the
FastAPI routes and by the CLI running in process."""

from __future__ import annotations

import numpy as np

from .. import admissibility, chain, linear_dynamics, rep_builder, spectrum
from ..core import (
    CharacteristicFunctions,
    LinearParams,
    VacuumState,
    matrix_to_rows,
)
from .models import (
    AdmissibleRequest,
    AdmissibleResponse,
    CasimirInfo,
    ChainRequest,
    ChainResponse,
    ClassifyRequest,
    ClassifyResponse,
    ComplexValue,
    LevelRow,
    NumericInfo,
    RegionsRequest,
    RegionsResponse,
    RepRequest,
    RepResponse,
    SpectrumRequest,
    SpectrumResponse,
)

__all__ = [
    "handle_classify",
    "handle_spectrum",
    "handle_rep",
    "handle_admissible",
    "handle_chain",
    "handle_regions",
]


def handle_classify(req: ClassifyRequest) -> ClassifyResponse:
    params = LinearParams(req.r, req.s)
    pair = linear_dynamics.eigenvalues(params)
    stab = linear_dynamics.classify_stability(params, tol=req.tol)
    spec = linear_dynamics.classify_spectrum(params, probe_depth=req.probe_depth)
    return ClassifyResponse(
        r=params.r,
        s=params.s,
        stability=stab.kind,
        region=linear_dynamics.triangle_region(params, tol=req.tol),
        spectrum=spec.kind,
        spectrum_period=spec.period,
        fixed_points=stab.fixed_points.describe(),
        lambda_plus=ComplexValue.of(pair.lambda_plus),
        lambda_minus=ComplexValue.of(pair.lambda_minus),
        discriminant=pair.discriminant,
    )


def handle_spectrum(req: SpectrumRequest) -> SpectrumResponse:
    params = LinearParams(req.r, req.s)
    vacuum = VacuumState(req.alpha0, req.beta0)
    data = spectrum.levels(params, vacuum, req.levels, tol=req.tol,
                           n_max=req.n_max)
    rows = [
        LevelRow(n=n, alpha=data.alphas[n], beta=data.betas[n],
                 gap=data.gaps[n] if n < len(data.gaps) else None)
        for n in range(len(data.alphas))
    ]
    return SpectrumResponse(
        r=params.r, s=params.s, alpha0=vacuum.alpha0, beta0=vacuum.beta0,
        levels=rows,
        gap_monotonicity=data.gap_monotonicity,
        limit=data.limit,
        admissibility_status=data.admissibility_status,
    )


def handle_rep(req: RepRequest) -> RepResponse:
    funcs = CharacteristicFunctions(req.f_coeffs, req.g_coeffs)
    vacuum = VacuumState(req.alpha0, req.beta0)
    seq = rep_builder.iterate_eigenvalues(funcs, vacuum, req.dim - 1)
    physical = rep_builder.check_physical(seq)
    rep = rep_builder.build_matrices(seq)  # raises if not physical
    report = rep_builder.verify_relations(rep, funcs, tol=req.tol)
    _, casimir = rep_builder.casimir1(rep, funcs, tol=req.tol)
    matrices = None
    if req.include_matrices:
        matrices = {
            "H": matrix_to_rows(rep.H),
            "J3": matrix_to_rows(rep.J3),
            "a_dag": matrix_to_rows(rep.a_dag),
            "a": matrix_to_rows(rep.a),
        }
    return RepResponse(
        dim=report.dim,
        interior_dim=report.interior_dim,
        tol=report.tol,
        residuals=report.residuals,
        passed=report.passed and casimir.constant_on_interior,
        first_zero_norm=physical.first_zero_norm,
        casimir=CasimirInfo(
            forms_interior_diff=casimir.forms_interior_diff,
            commutator_residuals=casimir.commutator_residuals,
            diag_expected=casimir.diag_expected,
            diag_interior_max_dev=casimir.diag_interior_max_dev,
            constant_on_interior=casimir.constant_on_interior,
        ),
        matrices=matrices,
    )


def handle_admissible(req: AdmissibleRequest) -> AdmissibleResponse:
    params = LinearParams(req.r, req.s)
    verdict = admissibility.decide(params, req.alpha0, req.beta0,
                                   n_max=req.n_max, tol=req.tol)
    numeric = None
    if verdict.numeric is not None:
        numeric = NumericInfo(**verdict.numeric.to_dict())
    return AdmissibleResponse(
        r=params.r, s=params.s, alpha0=req.alpha0, beta0=req.beta0,
        region=verdict.region,
        beta0_lower_bound=verdict.beta0_lower_bound,
        admissible=verdict.admissible,
        status=verdict.status,
        source=verdict.source,
        numeric=numeric,
    )


def handle_chain(req: ChainRequest) -> ChainResponse:
    rule = chain.parse_rule(req.rule)
    trace = chain.inflate(rule, req.seed, req.steps, word_cap=req.word_cap)
    return ChainResponse(
        rule_matrix=chain.rule_matrix(rule),
        words=list(trace.words),
        counts=[list(c) for c in trace.counts],
        words_truncated_after=trace.words_truncated_after,
    )


def handle_regions(req: RegionsRequest) -> RegionsResponse:
    grid = np.linspace(req.grid_min, req.grid_max, req.grid_n)
    if req.plane == "rs":
        header = ["r", "s", "stability", "spectrum", "abs_lambda_plus",
                  "abs_lambda_minus"]
        rows = [list(row) for row in
                linear_dynamics.region_map_rows(grid, grid, tol=req.tol)]
    else:
        header = ["lambda_minus", "lambda_plus", "region",
                  "beta0_bound_alpha0_pos", "beta0_bound_alpha0_neg"]
        rows = [list(row) for row in admissibility.region_map_rows(grid, grid)]
    return RegionsResponse(plane=req.plane, header=header, rows=rows)
