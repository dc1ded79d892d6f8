"""
Command line entry point.

    ffdistlab audit-variety --q 3 --d 2 --variety sphere:1
    ffdistlab energy --q 3 --d 2 --k 2 --points "0,0;1,0"
    ffdistlab scan --q 7 --d 4 --k 3 --theorem sphere-even-k3 --format csv
    ffdistlab verify

Exit codes: 0 success, 1 identity violation or numerical failure, 2 usage,
validation, contract or hypothesis error, 3 resource budget exceeded.
Reports go to stdout (or ``--out``), logs to stderr.
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, ValidationError

from ffdistlab.analysis import (
    distance_set_diff,
    dot_product_set,
    energy_bruteforce,
    energy_k,
    energy_via_spectrum,
    k_distance_set,
)
from ffdistlab.errors import ContractViolation, FFDistLabError, IdentityViolation
from ffdistlab.geometry import PointSet
from ffdistlab.settings import settings
from ffdistlab.types import Rational

from .audits import LEMMAS, audit_lemma, audit_variety
from .config import ExperimentConfig
from .identities import DEFAULT_GRID, IdentityConfig, verify_identities
from .reports import write_report
from .scans import scan_thresholds
from .theorems import THEOREMS, TheoremParams, threshold_exponent

logger = logging.getLogger(__name__)

EnergyMethod = Literal["convolution", "spectral", "bruteforce"]


class EnergyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    q: int
    d: int
    k: int
    method: EnergyMethod
    size: int
    energy: int


class DistanceSetReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    q: int
    d: int
    kind: Literal["sum", "diff", "dot"]
    k: int | None
    size: int
    count: int
    values: list[int]


class ThresholdReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    theorem: str
    summary: str
    exponent: Rational
    exponent_value: float
    params: TheoremParams


# =============================================================================
# Argument parsing
# =============================================================================


def _int_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from exc


def _points(text: str) -> list[tuple[int, ...]]:
    return [_int_tuple(chunk) for chunk in text.split(";") if chunk.strip()]


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="field order, an odd prime power")
    common.add_argument("--ext-modulus", type=_int_tuple, help="modulus of F_q over F_p, lowest coefficient first")
    common.add_argument("--d", type=int, help="ambient dimension")
    common.add_argument("--variety", default="sphere:1", help="sphere:<j>, poly:<file> or hyperplane")
    common.add_argument("--declared-dim", type=int, help="dimension of a poly: variety")
    common.add_argument("--declared-deg", type=int, help="degree of a poly: variety")
    common.add_argument("--k", type=int, default=3, help="number of summands")
    common.add_argument("--sizes", default="geom:2:max", help="size list or geom:<start>:<stop|max>[:<ratio>]")
    common.add_argument("--samples", type=int, default=20, help="samples per size")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--ggq-fraction", type=Fraction, default=Fraction(1, 4))
    common.add_argument("--c", type=Fraction, default=Fraction(1))
    common.add_argument("--beta", type=Fraction)
    common.add_argument("--size-constant", type=Fraction, default=Fraction(1))
    common.add_argument("--dim-cap", type=int, default=2, help="largest flat dimension searched for t_V")
    common.add_argument("--format", choices=["csv", "json"], default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="ffdistlab", description="Distance sets and energies over finite fields")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("audit-variety", parents=[common], help="regularity, size profile and t_V of a variety")

    energy = sub.add_parser("energy", parents=[common], help="additive energy E_k of a point set")
    energy.add_argument("--points", type=_points, help='points "x1,x2;y1,y2"; defaults to the whole variety')
    energy.add_argument("--method", choices=["convolution", "spectral", "bruteforce"], default="convolution")

    distset = sub.add_parser("distset", parents=[common], help="Delta_k, difference distances or dot products")
    distset.add_argument("--points", type=_points, help="defaults to the whole variety")
    distset.add_argument("--kind", choices=["sum", "diff", "dot"], default="sum")

    scan = sub.add_parser("scan", parents=[common], help="sample |Delta_k(A)| across sizes")
    scan.add_argument("--theorem", choices=sorted(THEOREMS))

    lemma = sub.add_parser("audit-lemma", parents=[common], help="empirical constant of a lemma")
    lemma.add_argument("--lemma", choices=sorted(LEMMAS), required=True)

    sub.add_parser("verify", parents=[common], help="exact identity suite")

    threshold = sub.add_parser("threshold", parents=[common], help="size threshold exponent of a theorem")
    threshold.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
    threshold.add_argument("--n", type=int, help="dimension of the variety")
    threshold.add_argument("--alpha", type=Fraction, default=Fraction(0), help="t_V = q^alpha")
    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level: int | str = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = settings.log_level.upper()
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


# =============================================================================
# Commands
# =============================================================================


def experiment_config(args: argparse.Namespace) -> ExperimentConfig:
    if args.q is None or args.d is None:
        raise ContractViolation(f"'{args.command}' needs --q and --d.")
    values: dict[str, Any] = {
        "q": args.q,
        "ext_modulus": args.ext_modulus,
        "d": args.d,
        "variety": args.variety,
        "declared_dim": args.declared_dim,
        "declared_deg": args.declared_deg,
        "k": args.k,
        "sample_count": args.samples,
        "sizes": args.sizes,
        "seed": args.seed,
        "ggq_fraction": args.ggq_fraction,
        "c": args.c,
        "beta": args.beta,
        "size_constant": args.size_constant,
        "dim_cap": args.dim_cap,
    }
    return ExperimentConfig(**values)


def _point_set(args: argparse.Namespace, config: ExperimentConfig) -> PointSet:
    if args.points is None:
        return config.build_variety().points
    return PointSet.from_points(config.ambient, args.points)


def _energy(args: argparse.Namespace) -> BaseModel:
    config = experiment_config(args)
    A = _point_set(args, config)
    if args.method == "spectral":
        value = energy_via_spectrum(A, config.k)
    elif args.method == "bruteforce":
        value = energy_bruteforce(A, config.k).value
    else:
        value = energy_k(A, config.k).value
    return EnergyReport(q=config.q, d=config.d, k=config.k, method=args.method, size=len(A), energy=value)


def _distset(args: argparse.Namespace) -> BaseModel:
    config = experiment_config(args)
    A = _point_set(args, config)
    if args.kind == "sum":
        values = k_distance_set(A, config.k)
    elif args.kind == "diff":
        values = distance_set_diff(A)
    else:
        values = dot_product_set(A)
    return DistanceSetReport(
        q=config.q,
        d=config.d,
        kind=args.kind,
        k=config.k if args.kind == "sum" else None,
        size=len(A),
        count=len(values),
        values=list(values),
    )


def _verify(args: argparse.Namespace) -> BaseModel:
    if (args.q is None) != (args.d is None):
        raise ContractViolation("give both --q and --d, or neither for the default grid.")
    grid = DEFAULT_GRID if args.q is None else ((args.q, args.d),)
    return verify_identities(IdentityConfig(grid=grid, seed=args.seed))


def _threshold(args: argparse.Namespace) -> BaseModel:
    if args.d is None:
        raise ContractViolation("'threshold' needs --d.")
    params = TheoremParams(d=args.d, n=args.n, k=args.k, alpha=args.alpha, c=args.c, beta=args.beta, q=args.q)
    exponent = threshold_exponent(args.theorem, params)
    return ThresholdReport(
        theorem=args.theorem,
        summary=THEOREMS[args.theorem].summary,
        exponent=exponent,
        exponent_value=float(exponent),
        params=params,
    )


def run(args: argparse.Namespace) -> BaseModel:
    """Execute one parsed command and return its report."""
    command = args.command
    if command == "audit-variety":
        return audit_variety(experiment_config(args))
    if command == "energy":
        return _energy(args)
    if command == "distset":
        return _distset(args)
    if command == "scan":
        return scan_thresholds(experiment_config(args), args.theorem)
    if command == "audit-lemma":
        return audit_lemma(args.lemma, experiment_config(args))
    if command == "verify":
        return _verify(args)
    return _threshold(args)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _configure_logging(args.verbose)

    try:
        report = run(args)
        write_report(report, args.format, args.out)
    except IdentityViolation as exc:
        logger.error("Identity '%s' violated", exc.identity)
        sys.stderr.write(json.dumps({"identity": exc.identity, "witness": exc.witness}, default=str) + "\n")
        return exc.exit_code
    except FFDistLabError as exc:
        logger.error("%s", exc)
        return exc.exit_code
    except ValidationError as exc:
        logger.error("Invalid arguments:\n%s", exc)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
