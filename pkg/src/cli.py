"""
Command-line front end: eval, series and verify

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Logs go to stderr; stdout (or --output) carries only the requested output.
"""

import sys
import json
import math
import logging
import argparse
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from config import Config
from .analogue import FUNCTION_NAMES, MIN_BUILD_ORDER, ModulusParams, build, evaluate, parse_rational, phi_oracle
from .errors import ConfigError, DomainError, HyperjacError
from .verify import VerificationReport, Tolerances, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FORMATS = ('json', 'csv', 'text')
CSV_LINE_END = "\r\n"
REPORT_COLUMNS = ['id', 'a', 'kappa', 'mode', 'max_residual', 'tolerance', 'pass']


def format_number(value: Optional[float]) -> str:
    """17 significant digits; '-' for a missing value"""
    if value is None:
        return '-'
    return f"{value:.17g}"


def format_complex(u: complex) -> str:
    if u.imag == 0:
        return format_number(u.real)
    return f"{u.real:.17g}{u.imag:+.17g}j"


def _split(text: str) -> List[str]:
    return [part.strip() for part in text.split(',') if part.strip()]


@dataclass(frozen=True)
class CliConfig:
    """Parsed and validated command line; nothing is computed before this exists"""

    subcommand: str
    a: Tuple[Fraction, ...]
    kappa: Tuple[float, ...]
    order: int
    tol: float
    pointwise_tol: float
    u: complex
    function: str
    format: str
    output: Optional[str]
    n_jobs: int

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'CliConfig':
        try:
            a_values = tuple(parse_rational(text) for text in _split(args.a))
        except DomainError as e:
            raise ConfigError(str(e)) from e
        try:
            kappas = tuple(float(text) for text in _split(args.kappa))
        except ValueError as e:
            raise ConfigError(f"kappa must be a real number, got {args.kappa!r}") from e
        try:
            u = complex(args.u.replace(' ', ''))
        except ValueError as e:
            raise ConfigError(f"u must be a complex number, got {args.u!r}") from e

        if not a_values or not kappas:
            raise ConfigError("at least one value of a and of kappa is required")
        for a in a_values:
            if not 0 <= a <= 1:
                raise ConfigError(f"a must lie in [0, 1], got {a}")
        for kappa in kappas:
            if not (0.0 < kappa < 1.0 and math.isfinite(kappa)):
                raise ConfigError(f"kappa must lie in (0,1), got {kappa}")
        if args.order < MIN_BUILD_ORDER:
            raise ConfigError(f"order must be at least {MIN_BUILD_ORDER}, got {args.order}")
        for tolerance in (args.tol, args.pointwise_tol):
            if not (math.isfinite(tolerance) and tolerance >= 0):
                raise ConfigError(f"tolerances must be finite and non-negative, got {tolerance}")
        if args.n_jobs == 0:
            raise ConfigError("n-jobs must be a positive worker count or negative (joblib style), got 0")
        if not (math.isfinite(u.real) and math.isfinite(u.imag)):
            raise ConfigError(f"u must be finite, got {args.u!r}")
        if args.command != 'verify' and (len(a_values) != 1 or len(kappas) != 1):
            raise ConfigError(f"{args.command} takes a single a and a single kappa")

        return cls(
            subcommand=args.command,
            a=a_values,
            kappa=kappas,
            order=args.order,
            tol=args.tol,
            pointwise_tol=args.pointwise_tol,
            u=u,
            function=args.fn,
            format=args.format,
            output=args.output,
            n_jobs=args.n_jobs,
        )

    @property
    def params(self) -> ModulusParams:
        return ModulusParams(self.a[0], self.kappa[0])

    @property
    def tolerances(self) -> Tolerances:
        return Tolerances(series=self.tol, pointwise=self.pointwise_tol)


# ==================== RENDERING ====================

def _frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator=CSV_LINE_END, float_format="%.17g")


def render_record(record: Dict[str, Any], fmt: str) -> str:
    if fmt == 'json':
        return json.dumps(record, indent=2) + "\n"
    if fmt == 'csv':
        return _frame_to_csv(pd.DataFrame([record]))
    width = max(len(key) for key in record)
    return "".join(f"{key.ljust(width)}  {_text_value(value)}\n" for key, value in record.items())


def render_rows(header: Dict[str, Any], rows: List[Dict[str, Any]], fmt: str) -> str:
    if fmt == 'json':
        return json.dumps({**header, 'rows': rows}, indent=2) + "\n"
    frame = pd.DataFrame(rows, columns=['k', 're', 'im'])
    if fmt == 'csv':
        return _frame_to_csv(frame)
    lines = [f"# {key}: {_text_value(value)}" for key, value in header.items()]
    lines += [f"{row['k']:>4}  {row['re']: .17e}  {row['im']: .17e}" for row in rows]
    return "\n".join(lines) + "\n"


def _text_value(value: Any) -> str:
    if isinstance(value, float):
        return format_number(value)
    if value is None:
        return '-'
    return str(value)


def render_report(report: VerificationReport, fmt: str) -> str:
    """Serialize a report as json, csv or a fixed-width text table"""
    if fmt == 'json':
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == 'csv':
        return _frame_to_csv(report.to_frame())

    table = [[c.id, _text_value(None if c.a is None else str(c.a)), _text_value(c.kappa), c.mode,
              format_number(c.max_residual), format_number(c.tolerance), 'PASS' if c.passed else 'FAIL']
             for c in report.checks]
    widths = [max(len(row[i]) for row in table + [REPORT_COLUMNS]) for i in range(len(REPORT_COLUMNS))]

    def line(cells):
        return "  ".join(cell.ljust(width) for cell, width in zip(cells, widths)).rstrip()

    failed = len(report.failures())
    out = [
        f"version: {report.version}",
        f"timestamp: {report.timestamp}",
        f"grid: a={','.join(report.grid['a'])} kappa={','.join(format_number(k) for k in report.grid['kappa'])} "
        f"order={report.grid['order']}",
        "",
        line(REPORT_COLUMNS),
    ]
    out += [line(row) for row in table]
    out += ["", "notes:"] + [f"  - {note}" for note in report.notes]
    out += ["", f"{len(report.checks)} checks, {failed} failed"]
    return "\n".join(out) + "\n"


def parse_text_report(text: str) -> List[Dict[str, Any]]:
    """Check rows of a text rendering, typed like the JSON records"""
    lines = text.splitlines()
    start = next(i for i, raw in enumerate(lines) if raw.split()[:1] == ['id']) + 1
    records = []
    for raw in lines[start:]:
        if not raw.strip():
            break
        check_id, a, kappa, mode, residual, tolerance, verdict = raw.split()
        records.append({
            'id': check_id,
            'a': None if a == '-' else a,
            'kappa': None if kappa == '-' else float(kappa),
            'mode': mode,
            'max_residual': None if residual == '-' else float(residual),
            'tolerance': float(tolerance),
            'pass': verdict == 'PASS',
        })
    return records


def _emit(text: str, output: Optional[str]):
    if output:
        with open(output, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
        logger.info(f"Wrote {len(text)} characters to {output}")
    else:
        sys.stdout.write(text)


# ==================== COMMANDS ====================

def cmd_eval(config: CliConfig) -> int:
    params = config.params
    analogues = build(params, config.order)
    value = evaluate(analogues, config.function, config.u)
    record = {
        'function': config.function,
        'a': str(params.a),
        'kappa': params.kappa,
        'u': format_complex(config.u),
        'value_re': value.real,
        'value_im': value.imag,
    }
    if config.function == 'phi' and config.u.imag == 0:
        oracle = phi_oracle(params, config.u.real)
        record['oracle_value'] = oracle
        record['abs_diff'] = abs(value - oracle)
    _emit(render_record(record, config.format), config.output)
    return EXIT_OK


def cmd_series(config: CliConfig) -> int:
    params = config.params
    series = build(params, config.order).series(config.function)
    rows = [{'k': k, 're': float(c.real), 'im': float(c.imag)} for k, c in enumerate(series.coeffs)]
    header = {'function': config.function, 'a': str(params.a), 'kappa': params.kappa, 'order': series.order}
    _emit(render_rows(header, rows, config.format), config.output)
    return EXIT_OK


def cmd_verify(config: CliConfig) -> int:
    report = run_suite(config.a, config.kappa, order=config.order, tol=config.tolerances,
                       n_jobs=config.n_jobs)
    _emit(render_report(report, config.format), config.output)
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    'eval': cmd_eval,
    'series': cmd_series,
    'verify': cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='hyperjac',
        description="Jacobi analogues from incomplete hypergeometric integrals",
    )
    parser.add_argument('--log-level', default=Config.LOG_LEVEL,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])
    sub = parser.add_subparsers(dest='command', required=True)

    def common(p: argparse.ArgumentParser, a_default: str, kappa_default: str):
        p.add_argument('--a', default=a_default, help="rational p/q (comma list for verify)")
        p.add_argument('--kappa', default=kappa_default, help="modulus in (0,1) (comma list for verify)")
        p.add_argument('--order', type=int, default=Config.SERIES_ORDER)
        p.add_argument('--tol', type=float, default=Config.SERIES_TOL)
        p.add_argument('--pointwise-tol', type=float, default=Config.POINTWISE_TOL)
        p.add_argument('--u', default='0')
        p.add_argument('--fn', default='phi', choices=FUNCTION_NAMES)
        p.add_argument('--format', default='json', choices=FORMATS)
        p.add_argument('--output', default=None)
        p.add_argument('--n-jobs', type=int, default=Config.N_JOBS)

    common(sub.add_parser('eval', help="value of one analogue function at u"), '1/4', '0.8')
    common(sub.add_parser('series', help="Taylor coefficients of one analogue function"), '1/4', '0.8')
    common(sub.add_parser('verify', help="run the theorem suite"),
           ','.join(Config.DEFAULT_A_GRID), ','.join(str(k) for k in Config.DEFAULT_KAPPA_GRID))
    return parser


def configure_logging(level: str):
    numeric = getattr(logging, level.upper(), logging.INFO)
    logging.basicConfig(level=numeric, format=Config.LOG_FORMAT, stream=sys.stderr)
    # basicConfig is a no-op once app.py has installed a handler
    logging.getLogger().setLevel(numeric)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    configure_logging(args.log_level)

    try:
        config = CliConfig.from_args(args)
        return COMMANDS[config.subcommand](config)
    except (ConfigError, DomainError) as e:
        logger.debug(f"{args.command} rejected: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except HyperjacError as e:
        logger.error(f"{args.command} failed: {str(e)}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
