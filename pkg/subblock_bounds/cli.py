"""
Command-line surface.

Payloads go to stdout as JSON, CSV or plain text; diagnostics go to stderr.
Exit codes: 0 ok, 1 internal failure, 2 usage or invalid parameters,
3 domain violation, 4 certificate failure, 5 oracle mismatch.
"""

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from typing import Any, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from . import __version__
from .asymptotics import CSCC_COLUMNS, SECC_COLUMNS, rate_table
from .bounds.cscc import CsccBoundHandler
from .bounds.secc import SeccBoundHandler
from .config import BoundsConfig
from .logging import BoundsLogger
from .metrics import BoundsFunctionName, BoundsMetrics, get_elapsed_ms, start_timer
from .oracle.compare import compare_with_oracle
from .schemas import (
    BoundMethod,
    BoundPayload,
    CertificatePayload,
    CodeFamily,
    ExactValue,
    OraclePayload,
    OutputEnvelope,
    OutputFormat,
    RateTablePayload,
)
from .types.errors import (
    DomainError,
    ExitCode,
    InvalidParameterError,
    SubblockBoundsError,
)
from .types.instances import CsccInstance, SeccInstance
from .utils import parse_delta_range, parse_int_list


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="more diagnostics on stderr (repeat for debug)",
    )
    common.add_argument(
        "--no-rich", action="store_true", help="plain diagnostics without Rich"
    )
    common.add_argument(
        "--precision",
        type=int,
        default=None,
        help="decimal places in decimal renderings (default 3)",
    )
    return common


def _instance_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-m", type=int, required=True, help="number of subblocks")
    parser.add_argument("-L", type=int, required=True, help="subblock length")
    parser.add_argument("-w", type=int, required=True, help="subblock weight")
    parser.add_argument("-d", type=int, required=True, help="minimum distance")


def _format_option(parser: argparse.ArgumentParser, default: OutputFormat) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=default.value,
        help=f"output format (default {default.value})",
    )


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="subblock-bounds",
        description="Exact sphere-packing bounds for subblock-constrained codes",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    for name, family in (("cscc-bound", "CSCC"), ("secc-bound", "SECC")):
        sub = commands.add_parser(
            name, parents=[common], help=f"upper bound on the size of a {family}"
        )
        _instance_options(sub)
        sub.add_argument(
            "--method",
            choices=[m.value for m in BoundMethod],
            default=BoundMethod.LP.value,
            help="reduced LP, closed form, both (with agreement check) or the "
            "shifted-space bound",
        )
        _format_option(sub, OutputFormat.PLAIN)

    certify = commands.add_parser(
        "certify", parents=[common], help="build and verify a tabulated certificate"
    )
    certify.add_argument("--table", type=int, choices=[1, 2], required=True)
    certify.add_argument("-m", type=int, default=1, help="subblocks (table 1)")
    certify.add_argument("-L", type=int, required=True, help="subblock length")
    certify.add_argument("-w", type=int, default=None, help="weight (table 2)")
    _format_option(certify, OutputFormat.PLAIN)

    oracle = commands.add_parser(
        "oracle-compare",
        parents=[common],
        help="check the reduced LP against brute force",
    )
    oracle.add_argument("family", choices=[f.value for f in CodeFamily])
    oracle.add_argument("m", type=int)
    oracle.add_argument("L", type=int)
    oracle.add_argument("w", type=int)
    oracle.add_argument("d", type=int)
    _format_option(oracle, OutputFormat.PLAIN)

    rates = commands.add_parser(
        "rate-table", parents=[common], help="asymptotic rate bounds over a delta grid"
    )
    rates.add_argument("family", choices=[f.value for f in CodeFamily])
    rates.add_argument("-L", type=int, required=True, help="subblock length")
    rates.add_argument(
        "-w", type=parse_int_list, required=True, help="weights, e.g. 10,14"
    )
    rates.add_argument(
        "--delta", required=True, help="grid start:stop:step, e.g. 0.11:0.29:0.005"
    )
    _format_option(rates, OutputFormat.CSV)
    return parser


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if cell is None else cell for cell in row])
    return buffer.getvalue()


def render(envelope: OutputEnvelope, fmt: OutputFormat) -> str:
    """Serialize an envelope; the JSON form re-parses and re-dumps byte-identically."""
    if fmt is OutputFormat.JSON:
        return json.dumps(envelope.model_dump(mode="json"), indent=2) + "\n"

    payload = envelope.payload
    if isinstance(payload, RateTablePayload):
        if fmt is OutputFormat.CSV:
            return _csv(
                payload.columns,
                [[row.get(c) for c in payload.columns] for row in payload.rows],
            )
        lines = ["  ".join(payload.columns)]
        for row in payload.rows:
            lines.append(
                "  ".join("-" if row.get(c) is None else str(row[c]) for c in payload.columns)
            )
        return "\n".join(lines) + "\n"

    if isinstance(payload, BoundPayload):
        if fmt is OutputFormat.CSV:
            return _csv(
                ["method", "exact", "decimal", "agreement"],
                [
                    [r.method.value, r.value.exact, r.value.decimal, payload.agreement]
                    for r in payload.results
                ],
            )
        lines = [f"{r.method.value}: {r.value}" for r in payload.results]
        if payload.agreement is not None:
            lines.append(f"agreement: {'yes' if payload.agreement else 'no'}")
        return "\n".join(lines) + "\n"

    fields = payload.model_dump(mode="json")
    if fmt is OutputFormat.CSV:
        header = list(fields)
        cells = [
            value["exact"] if isinstance(value, dict) else value
            for value in fields.values()
        ]
        return _csv(header, [cells])
    lines = []
    for key, value in fields.items():
        if isinstance(value, dict):
            value = str(ExactValue(**value))
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _bound_command(args, config, logger, metrics) -> tuple[Any, ExitCode]:
    method = BoundMethod(args.method)
    if args.command == "cscc-bound":
        inst = CsccInstance(args.m, args.L, args.w, args.d)
        handler = CsccBoundHandler(config, logger, metrics)
    else:
        inst = SeccInstance(args.m, args.L, args.w, args.d)
        handler = SeccBoundHandler(config, logger, metrics)
    return handler.compute(inst, method), ExitCode.OK


def _certify_command(args, config, logger, metrics) -> tuple[Any, ExitCode]:
    handler = SeccBoundHandler(config, logger, metrics)
    try:
        payload: CertificatePayload = handler.certify(args.table, args.m, args.L, args.w)
    except DomainError as e:
        raise InvalidParameterError(str(e)) from e
    code = ExitCode.OK if payload.verdict == "valid" else ExitCode.CERTIFICATE_FAILURE
    return payload, code


def _oracle_command(args, config, logger, metrics) -> tuple[Any, ExitCode]:
    result = compare_with_oracle(
        args.family, args.m, args.L, args.w, args.d, config, logger, metrics
    )
    places = config.decimal_places
    payload = OraclePayload(
        family=result.family,
        t=result.t,
        reduced_value=ExactValue.from_fraction(result.reduced_value, places),
        full_value=ExactValue.from_fraction(result.full_value, places),
        code_size=result.code_size,
        reduction_equal=result.reduction_equal,
        bound_valid=result.bound_valid,
    )
    ok = result.reduction_equal and result.bound_valid
    return payload, ExitCode.OK if ok else ExitCode.ORACLE_MISMATCH


def _rate_command(args, config, logger, metrics) -> tuple[Any, ExitCode]:
    start = start_timer()
    family = CodeFamily(args.family)
    deltas = parse_delta_range(args.delta)
    rows = rate_table(family, args.L, args.w, deltas)
    value_columns = CSCC_COLUMNS if family is CodeFamily.CSCC else SECC_COLUMNS
    metrics.update(BoundsFunctionName.RATE_TABLE, get_elapsed_ms(start))
    logger.info(
        f"Rate table with {len(rows)} rows",
        category="rates",
        auxiliary={"family": family.value, "L": args.L},
    )
    payload = RateTablePayload(
        family=family,
        columns=["w", "delta", *value_columns],
        rows=[{"w": row.w, "delta": row.delta, **row.values} for row in rows],
    )
    return payload, ExitCode.OK


_COMMANDS = {
    "cscc-bound": _bound_command,
    "secc-bound": _bound_command,
    "certify": _certify_command,
    "oracle-compare": _oracle_command,
    "rate-table": _rate_command,
}


def _parameters(args: argparse.Namespace) -> dict[str, Any]:
    skip = {"command", "verbose", "no_rich", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)

    logger = BoundsLogger(verbose=min(args.verbose, 2), use_rich=not args.no_rich)
    metrics = BoundsMetrics()
    try:
        overrides: dict[str, Any] = {
            "verbose": min(args.verbose, 2),
            "use_rich_logging": not args.no_rich,
        }
        if args.precision is not None:
            overrides["decimal_places"] = args.precision
        config = BoundsConfig.from_env(**overrides)
        payload, code = _COMMANDS[args.command](args, config, logger, metrics)
    except (InvalidParameterError, ValidationError) as e:
        logger.error(str(e), category="cli")
        return int(ExitCode.USAGE)
    except DomainError as e:
        logger.error(str(e), category="cli")
        return int(ExitCode.DOMAIN)
    except SubblockBoundsError as e:
        logger.error(f"{type(e).__name__}: {e}", category="cli")
        return int(ExitCode.INTERNAL)

    envelope = OutputEnvelope(
        command=args.command,
        version=__version__,
        parameters=_parameters(args),
        payload=payload,
    )
    sys.stdout.write(render(envelope, OutputFormat(args.format)))
    logger.debug("Run metrics", category="metrics", auxiliary=metrics.summary())
    return int(code)


if __name__ == "__main__":
    sys.exit(main())
