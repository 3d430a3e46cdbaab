"""Command-line client for the two-step algebra toolkit.

Each subcommand builds the same request model the HTTP service accepts
and runs the handler in process; pass --url to send the request to a
running service instead.  All numeric output is printed with 12
significant digits and identical flags produce byte-identical output.

Exit codes: 0 success, 1 inadmissible vacuum / failed verification,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.request

from pydantic import ValidationError

from .core import (
    InadmissibleVacuumError,
    NoAdmissibleVacuumError,
    NonPhysicalSequenceError,
    TruncationError,
)
from .service import handlers
from .service.models import (
    AdmissibleRequest,
    AdmissibleResponse,
    ChainRequest,
    ChainResponse,
    ClassifyRequest,
    ClassifyResponse,
    RegionsRequest,
    RegionsResponse,
    RepRequest,
    RepResponse,
    SpectrumRequest,
    SpectrumResponse,
)

USAGE_ERROR = 2
VERIFICATION_ERROR = 1


class _UsageError(Exception):
    pass


_ROUTES = {
    "classify": (ClassifyRequest, ClassifyResponse, handlers.handle_classify),
    "spectrum": (SpectrumRequest, SpectrumResponse, handlers.handle_spectrum),
    "rep": (RepRequest, RepResponse, handlers.handle_rep),
    "admissible": (AdmissibleRequest, AdmissibleResponse,
                   handlers.handle_admissible),
    "chain": (ChainRequest, ChainResponse, handlers.handle_chain),
    "regions": (RegionsRequest, RegionsResponse, handlers.handle_regions),
}


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _round_floats(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(fmt(obj))
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_round_floats(v) for v in obj]
    return obj


def _print_json(model) -> None:
    print(json.dumps(_round_floats(model.model_dump()), indent=2))


def _parse_coeffs(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise _UsageError(f"cannot parse coefficient list {text!r}") from None


def _dispatch(command: str, payload: dict, url: str | None):
    req_model, resp_model, handler = _ROUTES[command]
    request = req_model(**payload)
    if url is None:
        return handler(request)
    data = json.dumps(request.model_dump()).encode()
    http_req = urllib.request.Request(
        url.rstrip("/") + "/" + command, data=data,
        headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(http_req) as resp:
            return resp_model.model_validate(json.loads(resp.read()))
    except urllib.error.HTTPError as exc:
        body = exc.read().decode(errors="replace")
        raise RuntimeError(f"service error {exc.code}: {body}") from exc


def _render_spectrum(resp: SpectrumResponse, out_format: str) -> None:
    if out_format == "json":
        _print_json(resp)
        return
    print("n,alpha,beta,gap")
    for row in resp.levels:
        gap = "" if row.gap is None else fmt(row.gap)
        print(f"{row.n},{fmt(row.alpha)},{fmt(row.beta)},{gap}")


def _run_figure4(args) -> None:
    from .spectrum import FIGURE4_PRESETS

    responses = []
    for name, params, vacuum in FIGURE4_PRESETS:
        resp = _dispatch("spectrum", {
            "r": params.r, "s": params.s, "alpha0": vacuum.alpha0,
            "beta0": vacuum.beta0, "levels": args.levels, "tol": args.tol,
            "n_max": args.nmax}, args.url)
        responses.append((name, resp))
    if args.format == "json":
        payload = [{"preset": name, **_round_floats(resp.model_dump())}
                   for name, resp in responses]
        print(json.dumps(payload, indent=2))
        return
    print("preset,r,s,n,alpha,beta,gap")
    for name, resp in responses:
        for row in resp.levels:
            gap = "" if row.gap is None else fmt(row.gap)
            print(f"{name},{fmt(resp.r)},{fmt(resp.s)},{row.n},"
                  f"{fmt(row.alpha)},{fmt(row.beta)},{gap}")


def _render_chain(resp: ChainResponse, out_format: str) -> None:
    if out_format == "json":
        _print_json(resp)
        return
    if out_format == "counts":
        print("step,nA,nB")
        for step, (n_a, n_b) in enumerate(resp.counts):
            print(f"{step},{n_a},{n_b}")
        return
    for word in resp.words:
        print(word)
    if resp.words_truncated_after is not None:
        print(f"# words truncated after step {resp.words_truncated_after}; "
              "counts continue exactly", file=sys.stderr)


def _render_regions(resp: RegionsResponse) -> None:
    print(",".join(resp.header))
    for row in resp.rows:
        print(",".join(fmt(v) if isinstance(v, float) else str(v) for v in row))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibalg",
        description="Two-step ladder algebras: representations, spectra, "
                    "stability, admissibility and substitution chains.")
    parser.add_argument("--url", default=None,
                        help="base URL of a running fibalg service; default "
                             "runs in process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="stability and spectrum type of (r, s)")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--probe-depth", type=int, default=64)

    p = sub.add_parser("spectrum", help="energy levels for an admissible vacuum")
    p.add_argument("--r", type=float)
    p.add_argument("--s", type=float)
    p.add_argument("--alpha0", type=float)
    p.add_argument("--beta0", type=float)
    p.add_argument("--levels", type=int, default=16)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--nmax", type=int, default=200)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--figure4", action="store_true",
                   help="emit the five canonical level-pattern presets "
                        "instead of a single parameter set")

    p = sub.add_parser("rep", help="build a truncated representation and "
                                   "verify the defining relations")
    p.add_argument("--f", required=True, metavar="C0,C1,..",
                   help="f coefficients, constant term first")
    p.add_argument("--g", required=True, metavar="C0,C1,..",
                   help="g coefficients, constant term first")
    p.add_argument("--alpha0", type=float, required=True)
    p.add_argument("--beta0", type=float, required=True)
    p.add_argument("--dim", type=int, default=32)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--matrices", action="store_true",
                   help="include the four matrices in the output")

    p = sub.add_parser("admissible", help="vacuum admissibility verdict or "
                                          "beta0 lower bound")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--alpha0", type=float, required=True)
    p.add_argument("--beta0", type=float, default=None)
    p.add_argument("--nmax", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("chain", help="inflate a substitution rule")
    p.add_argument("--rule", default="A:AB,B:A", metavar="A:AB,B:A")
    p.add_argument("--seed", default="A")
    p.add_argument("--steps", type=int, default=8)
    p.add_argument("--cap", type=int, default=10 ** 6,
                   help="longest word kept explicitly")
    p.add_argument("--format", choices=("words", "counts", "json"),
                   default="words")

    p = sub.add_parser("regions", help="CSV map of the parameter plane")
    p.add_argument("--plane", choices=("rs", "lambda"), default="rs")
    p.add_argument("--grid-min", type=float, default=-3.0)
    p.add_argument("--grid-max", type=float, default=3.0)
    p.add_argument("--grid-n", type=int, default=41)
    p.add_argument("--tol", type=float, default=1e-10)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "classify":
            resp = _dispatch("classify", {
                "r": args.r, "s": args.s, "tol": args.tol,
                "probe_depth": args.probe_depth}, args.url)
            _print_json(resp)
        elif args.command == "spectrum":
            if args.figure4:
                _run_figure4(args)
            else:
                missing = [name for name in ("r", "s", "alpha0", "beta0")
                           if getattr(args, name) is None]
                if missing:
                    raise _UsageError(f"spectrum needs --{missing[0]} "
                                      "(or pass --figure4)")
                resp = _dispatch("spectrum", {
                    "r": args.r, "s": args.s, "alpha0": args.alpha0,
                    "beta0": args.beta0, "levels": args.levels,
                    "tol": args.tol, "n_max": args.nmax}, args.url)
                _render_spectrum(resp, args.format)
        elif args.command == "rep":
            resp = _dispatch("rep", {
                "f_coeffs": _parse_coeffs(args.f),
                "g_coeffs": _parse_coeffs(args.g),
                "alpha0": args.alpha0, "beta0": args.beta0, "dim": args.dim,
                "tol": args.tol, "include_matrices": args.matrices}, args.url)
            _print_json(resp)
            if not resp.passed:
                return VERIFICATION_ERROR
        elif args.command == "admissible":
            resp = _dispatch("admissible", {
                "r": args.r, "s": args.s, "alpha0": args.alpha0,
                "beta0": args.beta0, "n_max": args.nmax, "tol": args.tol},
                args.url)
            _print_json(resp)
            if resp.status == "inadmissible":
                return VERIFICATION_ERROR
        elif args.command == "chain":
            resp = _dispatch("chain", {
                "rule": args.rule, "seed": args.seed, "steps": args.steps,
                "word_cap": args.cap}, args.url)
            _render_chain(resp, args.format)
        elif args.command == "regions":
            resp = _dispatch("regions", {
                "plane": args.plane, "grid_min": args.grid_min,
                "grid_max": args.grid_max, "grid_n": args.grid_n,
                "tol": args.tol}, args.url)
            _render_regions(resp)
    except (InadmissibleVacuumError, NonPhysicalSequenceError,
            NoAdmissibleVacuumError) as exc:
        print(f"fibalg: {exc}", file=sys.stderr)
        return VERIFICATION_ERROR
    except (_UsageError, ValidationError, TruncationError, ValueError) as exc:
        print(f"fibalg: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except RuntimeError as exc:
        print(f"fibalg: {exc}", file=sys.stderr)
        return VERIFICATION_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
