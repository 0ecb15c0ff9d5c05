from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Mapping, Sequence

from dbetto import utils

from . import _version, verify
from .multfunc import JacobiMap, apply_map, jacobi
from .render import RenderFormat, render
from .seqmatrix import DihedralElement, apply, require_even, sequential
from .utils import merge_configs
from .zolotarev import check_zolotarev, cycles, mult_perm, signature

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def seqmatsym_cli(argv: list[str] | None = None) -> int:
    args, config = _parse_cli_args(argv)

    logging.basicConfig()
    if args.verbose:
        logging.getLogger("seqmatsym").setLevel(logging.DEBUG)
    if args.debug:
        logging.root.setLevel(logging.DEBUG)

    try:
        return args.func(args, config)
    except (ValueError, ArithmeticError) as e:
        log.error("%s", e)
        return EXIT_USAGE


def _write(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def cmd_gen(args: argparse.Namespace, _config: dict) -> int:
    _write(render(sequential(args.n), args.format))
    return EXIT_OK


def cmd_sym(args: argparse.Namespace, _config: dict) -> int:
    sigma = DihedralElement.from_name(args.sigma)
    q = sequential(args.n)
    if args.map == "jacobi":
        require_even(args.n)
        matrix = apply(sigma, apply_map(JacobiMap(q.modulus), q))
    else:
        matrix = apply(sigma, q)

    log.debug("rendering %s applied to Q_%d (map: %s)", sigma.value, args.n, args.map)
    _write(render(matrix, args.format))
    return EXIT_OK


def cmd_jacobi(args: argparse.Namespace, _config: dict) -> int:
    _write(f"{jacobi(args.a, args.m)}\n")
    return EXIT_OK


def cmd_zolotarev(args: argparse.Namespace, _config: dict) -> int:
    agree = check_zolotarev(args.a, args.m)
    f = mult_perm(args.a, args.m)

    decomposition = cycles(f)
    lengths = ", ".join(f"{length} (x{count})" for length, count in decomposition.counts().items())
    log.debug("x -> %dx mod %d has %d cycle(s)", args.a, args.m, len(decomposition))

    report = (
        f"symbol:        {jacobi(args.a, args.m)}\n"
        f"cycle lengths: {lengths}\n"
        f"signature:     {signature(f)}\n"
        f"agree:         {'yes' if agree else 'no'}\n"
    )
    if args.show_cycles:
        report += f"cycles:        {decomposition}\n"
    _write(report)
    return EXIT_OK if agree else EXIT_FAILED


def cmd_verify(args: argparse.Namespace, config: dict) -> int:
    if args.range is not None:
        start, stop = verify.parse_range(args.range)
    else:
        verify.get_check(args.check)
        start, stop = _config_range(config, args.check)

    _config_or_cli_arg(args, config, "workers", 1)
    report = verify.run_check(
        args.check,
        start,
        stop,
        workers=args.workers,
        chunk_size=config.get("chunk_size", 16),
        max_failures=config.get("max_failures", 10),
    )

    _write(report.to_json() if args.json_report else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAILED


def _config_range(config: dict, check: str) -> tuple[int, int]:
    checks = config.get("checks")
    entry = checks.get(check) if isinstance(checks, Mapping) else None
    bounds = entry.get("range") if isinstance(entry, Mapping) else None
    if (
        not isinstance(bounds, Sequence)
        or isinstance(bounds, str)
        or len(bounds) != 2
        or not all(isinstance(b, int) and not isinstance(b, bool) for b in bounds)
    ):
        msg = f"config has no valid range for check {check!r} (expected checks.{check}.range: [start, stop])"
        raise ValueError(msg)
    return bounds[0], bounds[1]


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        msg = f"expected a positive integer, got {text}"
        raise argparse.ArgumentTypeError(msg)
    return value


def _parse_cli_args(argv: list[str] | None = None) -> tuple[argparse.Namespace, dict]:
    parser = argparse.ArgumentParser(
        prog="seqmatsym",
        description="%(prog)s command line interface",
    )

    # global options
    parser.add_argument(
        "--version",
        action="version",
        help="""Print %(prog)s version and exit""",
        version=_version.__version__,
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="""Increase the program verbosity""",
    )
    parser.add_argument(
        "--debug",
        "-d",
        action="store_true",
        help="""Increase the program verbosity to maximum""",
    )
    parser.add_argument(
        "--config",
        action="store",
        help="""Select a config file to read verification defaults from.""",
    )

    subparsers = parser.add_subparsers(dest="command", required=True)
    formats = [f.value for f in RenderFormat]

    gen = subparsers.add_parser("gen", help="""Print the sequential matrix Q_n""")
    gen.add_argument("n", type=_positive_int, help="""Side length""")
    gen.add_argument("--format", "-f", choices=formats, default="text", help="""Output format""")
    gen.set_defaults(func=cmd_gen)

    sym = subparsers.add_parser("sym", help="""Print sigma(Q_n) or sigma((Q_n/m))""")
    sym.add_argument("n", type=_positive_int, help="""Side length""")
    sym.add_argument(
        "sigma",
        choices=[e.value for e in DihedralElement],
        help="""Element of the dihedral group""",
    )
    sym.add_argument(
        "--map",
        choices=("jacobi", "none"),
        default="none",
        help="""Apply the Jacobi symbol modulo n^2 + 1 entrywise first (needs even n)""",
    )
    sym.add_argument("--format", "-f", choices=formats, default="text", help="""Output format""")
    sym.set_defaults(func=cmd_sym)

    jac = subparsers.add_parser("jacobi", help="""Print the Jacobi symbol (a/m)""")
    jac.add_argument("a", type=int)
    jac.add_argument("m", type=int, help="""Odd modulus >= 3""")
    jac.set_defaults(func=cmd_jacobi)

    zol = subparsers.add_parser(
        "zolotarev", help="""Compare (a/m) with the signature of x -> ax on Z/mZ"""
    )
    zol.add_argument("a", type=int)
    zol.add_argument("m", type=int, help="""Odd modulus >= 3, coprime to a""")
    zol.add_argument(
        "--show-cycles",
        action="store_true",
        help="""Also print the full cycle decomposition""",
    )
    zol.set_defaults(func=cmd_zolotarev)

    ver = subparsers.add_parser("verify", help="""Verify an identity over a parameter range""")
    ver.add_argument("check", choices=list(verify.CHECKS), help="""Identity to verify""")
    ver.add_argument(
        "range",
        nargs="?",
        default=None,
        help="""Inclusive parameter range a..b (default: from the config)""",
    )
    # the default comes from the config file, see _config_or_cli_arg.
    ver.add_argument(
        "--workers",
        "-j",
        type=_positive_int,
        default=None,
        help="""Number of worker processes""",
    )
    ver.add_argument(
        "--json-report",
        action="store_true",
        help="""Print the report as JSON""",
    )
    ver.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)

    user_config = None
    if args.config is not None:
        user_config = utils.load_dict(args.config)
    config = merge_configs(verify.default_config(), user_config)

    return args, config


def _config_or_cli_arg(args: argparse.Namespace, config: dict, name: str, default) -> None:
    """Fallback of cli args, to config file, and to default value (in this order)."""
    val_cfg = config.get(name)
    val_attrs = getattr(args, name, None)
    val = val_cfg if val_attrs is None else val_attrs
    val = default if val is None else val
    setattr(args, name, val)

