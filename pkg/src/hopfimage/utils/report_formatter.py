"""
Rendering of reports as json, csv or an aligned text table.

Every report is first reduced to a JSON document, a pandas table and a few
footer lines; ``ReportFormatter.render`` then picks ``render_<format>``.
Floats carry 12 significant digits, rationals are written ``p/q``.
"""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import click
import pandas as pd

from hopfimage.core.exceptions import ConfigurationError, ProcessingError
from hopfimage.core.profile import OUTPUT_FORMATS

FLOAT_FORMAT = '.12g'

Rendered = Tuple[Dict[str, Any], pd.DataFrame, List[str]]


def format_float(x: float) -> str:
    return format(float(x), FLOAT_FORMAT)


def format_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return format_float(z.real)
    sign = '-' if z.imag < 0 else '+'
    return f"{format_float(z.real)}{sign}{format_float(abs(z.imag))}j"


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def json_float(x: float) -> float:
    return float(format_float(x))


def json_rational(q: Fraction):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else str(q)


class ReportFormatter:
    def __init__(self, output_format: str = 'text'):
        if output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(f"Unsupported output format '{output_format}'")
        self.output_format = output_format

    def render(self, rendered: Rendered) -> str:
        handler_method = getattr(self, f"render_{self.output_format}", None)
        if not handler_method:
            raise ConfigurationError(f"Unsupported output format '{self.output_format}'")
        document, table, footer = rendered
        return handler_method(document=document, table=table, footer=footer)

    def render_json(self, document: Dict[str, Any], table: pd.DataFrame, footer: List[str]) -> str:
        return json.dumps(document, indent=2, ensure_ascii=False) + '\n'

    def render_csv(self, document: Dict[str, Any], table: pd.DataFrame, footer: List[str]) -> str:
        return table.to_csv(index=False, lineterminator='\n')

    def render_text(self, document: Dict[str, Any], table: pd.DataFrame, footer: List[str]) -> str:
        body = table.to_string(index=False) if not table.empty else '(no rows)'
        return '\n'.join([body] + footer) + '\n'

    # -- report reductions -------------------------------------------------

    @staticmethod
    def certificate(report) -> Rendered:
        verdict = report.verdict.label if report.verdict is not None else 'incomplete'
        document = {
            'verdict': {
                'status': report.verdict.status if report.verdict is not None else None,
                'level': report.verdict.level if report.verdict is not None else None,
                'label': verdict,
            },
            'levels': [
                {
                    'k': r.k,
                    'm_k': r.m_k,
                    'c_k': json_rational(r.c_k),
                    'marginal': r.marginal,
                    'norm_estimate': json_float(r.norm_estimate) if r.norm_estimate is not None else None,
                    'fixed_defect': json_float(r.fixed_defect) if r.fixed_defect is not None else None,
                }
                for r in report.levels
            ],
            'k_max': report.k_max,
            'method': report.method,
            'tolerance': report.tolerance,
            'model_sha256': report.model_digest,
            'oracle_sha256': report.oracle_digest,
            'oracle_kind': report.oracle_kind,
            'warnings': list(report.warnings),
            'caveat': report.caveat,
        }
        table = pd.DataFrame(
            [[r.k, r.m_k, format_rational(r.c_k), r.marginal, verdict] for r in report.levels],
            columns=['k', 'm_k', 'c_k', 'marginal', 'verdict'],
        )
        footer = [
            f"verdict: {verdict}",
            f"model sha256: {report.model_digest}",
            f"oracle sha256: {report.oracle_digest} ({report.oracle_kind})",
            f"tolerance: {format_float(report.tolerance)}",
        ]
        footer += [f"warning: {w}" for w in report.warnings]
        footer.append(report.caveat)
        return document, table, footer

    @staticmethod
    def idempotent(rows: Sequence, oracle_kind: str) -> Rendered:
        document = {
            'oracle_kind': oracle_kind,
            'rows': [
                {
                    'word': str(r.word),
                    'idempotent': [json_float(r.idempotent.real), json_float(r.idempotent.imag)],
                    'haar': json_rational(r.haar),
                    'difference': json_float(r.difference),
                }
                for r in rows
            ],
        }
        table = pd.DataFrame(
            [[str(r.word), format_complex(r.idempotent), format_rational(r.haar), format_float(r.difference)]
             for r in rows],
            columns=['word', 'idempotent', 'haar', 'difference'],
        )
        worst = max((r.difference for r in rows), default=0.0)
        return document, table, [f"max difference: {format_float(worst)}"]

    @staticmethod
    def moments(values: Sequence[Tuple[int, Fraction]], oracle_kind: str) -> Rendered:
        document = {
            'oracle_kind': oracle_kind,
            'moments': [{'k': k, 'c_k': json_rational(c)} for k, c in values],
        }
        table = pd.DataFrame([[k, format_rational(c)] for k, c in values], columns=['k', 'c_k'])
        return document, table, []

    @staticmethod
    def validation(violations: Sequence[str], source: str) -> Rendered:
        document = {'source': source, 'valid': not violations, 'violations': list(violations)}
        table = pd.DataFrame([[v] for v in violations], columns=['violation'])
        footer = [f"{source}: {'valid' if not violations else f'{len(violations)} violation(s)'}"]
        return document, table, footer


class ReportWriter:
    """Writes rendered text to a file, or to standard output when no path is set."""

    def __init__(self, output_file: Optional[str] = None):
        self.output_file = output_file

    def write(self, text: str) -> None:
        if self.output_file is None:
            click.echo(text, nl=False)
            return
        path = Path(self.output_file)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline='') as file:
                file.write(text)
        except OSError as e:
            logging.error(f"Failed to write {path}: {e}")
            raise ProcessingError(f"{path}: cannot write output: {e}") from e
        logging.info(f"Report written to {path.resolve()}")
