# hopfimage.py
import json
import logging
from fractions import Fraction
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, validator

from hopfimage.certify import certify, compare_idempotent_to_haar
from hopfimage.core.exceptions import (
    CertificationError,
    ConfigurationError,
    ProcessingError,
)
from hopfimage.core.file_handler_factory import load_document
from hopfimage.core.profile import Profile
from hopfimage.core.user_interaction import UserInteraction
from hopfimage.linalg import Tolerance
from hopfimage.models import MagicUnitaryModel, build_model, model_from_dict, model_to_dict, validate_magic_unitary
from hopfimage.moments import ClassicalPermutationGroup, MomentOracle, oracle_from_dict
from hopfimage.transfer import Word, all_words
from hopfimage.utils.report_formatter import ReportFormatter, ReportWriter

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_REFUTED = 2


class RunConfig(BaseModel):
    """One CLI invocation: the command, its input paths and the resolved profile."""
    command: Literal['validate', 'build-model', 'certify', 'idempotent', 'moments']
    profile: Profile = Profile()
    model_path: Optional[str] = None
    oracle_path: Optional[str] = None
    generator_path: Optional[str] = None
    words: List[str] = []
    max_length: Optional[int] = None
    hopf_image: bool = False
    progress: bool = False

    @validator('max_length')
    def validate_max_length(cls, v):
        if v is not None and v < 1:
            raise ValueError('max_length must be at least 1')
        return v

    @property
    def tolerance(self) -> Tolerance:
        return Tolerance(eps=self.profile.tolerance)

    def guards(self) -> dict:
        return {
            'size_guard': self.profile.group_size_guard,
            'nc_guard': self.profile.nc_guard,
            'weingarten_guard': self.profile.weingarten_guard,
            'table_guard': self.profile.dual_table_guard,
        }


def load_model(path: str, tol: Tolerance) -> MagicUnitaryModel:
    """Reads a model document, or a generator document which is built on the fly."""
    document = load_document(path)
    if isinstance(document, dict) and 'P' in document:
        return model_from_dict(document, source=path)
    try:
        return build_model(document, tol)
    except (ValueError, TypeError) as e:
        raise ProcessingError(f"{path}:1: {e}") from e


def load_oracle(path: str, config: RunConfig) -> MomentOracle:
    return oracle_from_dict(load_document(path), source=path, guards=config.guards())


class HopfImageRunner:
    """Runs one command; each ``run_<command>`` returns the process exit status."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.profile = config.profile
        self.tol = config.tolerance
        self.formatter = ReportFormatter(self.profile.output_format)
        self.writer = ReportWriter(self.profile.output_file)

    def run(self) -> int:
        handler_method = getattr(self, f"run_{self.config.command.replace('-', '_')}", None)
        if not handler_method:
            raise ConfigurationError(f"Unsupported command '{self.config.command}'")
        return handler_method()

    def require(self, name: str) -> str:
        value = getattr(self.config, name)
        if value is None:
            raise ConfigurationError(f"'{self.config.command}' needs --{name.replace('_path', '')}")
        return value

    def check_cap(self, model: MagicUnitaryModel) -> None:
        if self.profile.cap < model.n:
            raise ConfigurationError(f"cap {self.profile.cap} is smaller than n = {model.n}")

    def run_validate(self) -> int:
        path = self.require('model_path')
        model = load_model(path, self.tol)
        violations = validate_magic_unitary(model, self.tol)
        self.writer.write(self.formatter.render(ReportFormatter.validation(violations, path)))
        return EXIT_OK if not violations else EXIT_FAILURE

    def run_build_model(self) -> int:
        path = self.require('generator_path')
        model = load_model(path, self.tol)
        violations = validate_magic_unitary(model, self.tol)
        if violations:
            for violation in violations:
                UserInteraction.show_message(f"{path}: {violation}", "error", err=True)
            return EXIT_FAILURE
        self.writer.write(json.dumps(model_to_dict(model)) + '\n')
        return EXIT_OK

    def run_certify(self) -> int:
        model = load_model(self.require('model_path'), self.tol)
        oracle = load_oracle(self.require('oracle_path'), self.config)
        self.check_cap(model)
        try:
            report = certify(
                model, oracle, self.profile.k_max, self.tol,
                cap=self.profile.cap, max_level=self.profile.max_level, method=self.profile.method,
                max_rounds=self.profile.max_rounds, norm_iters=self.profile.norm_iters,
                progress=self.config.progress,
            )
        except CertificationError as e:
            partial = e.partial_report
            if partial is not None and partial.levels:
                UserInteraction.show_message(
                    "Levels completed before the failure: "
                    + ', '.join(f"k={r.k}: m={r.m_k}, c={r.c_k}" for r in partial.levels),
                    "warning", err=True,
                )
            raise
        self.writer.write(self.formatter.render(ReportFormatter.certificate(report)))

        status = report.verdict.status
        message_type = {'confirmed': 'info', 'refuted': 'warning', 'inconsistent': 'error'}[status]
        UserInteraction.show_message(f"Verdict: {report.verdict.label}", message_type, err=True)
        if status == 'confirmed':
            return EXIT_OK
        return EXIT_REFUTED if status == 'refuted' else EXIT_FAILURE

    def idempotent_words(self, model: MagicUnitaryModel) -> List[Word]:
        if self.config.words:
            return [Word.parse(text) for text in self.config.words]
        max_length = self.config.max_length or 1
        return [word for k in range(1, max_length + 1) for word in all_words(model.n, k)]

    def run_idempotent(self) -> int:
        model = load_model(self.require('model_path'), self.tol)
        self.check_cap(model)
        if self.config.hopf_image:
            oracle = ClassicalPermutationGroup.from_model(model, size_guard=self.profile.group_size_guard)
        else:
            oracle = load_oracle(self.require('oracle_path'), self.config)
        rows = compare_idempotent_to_haar(
            model, oracle, self.idempotent_words(model), self.tol,
            cap=self.profile.cap, max_level=self.profile.max_level, max_rounds=self.profile.max_rounds,
        )
        self.writer.write(self.formatter.render(ReportFormatter.idempotent(rows, oracle.kind)))
        return EXIT_OK

    def run_moments(self) -> int:
        oracle = load_oracle(self.require('oracle_path'), self.config)
        values: List[Tuple[int, Fraction]] = [
            (k, oracle.character_moment(k)) for k in range(1, self.profile.k_max + 1)
        ]
        self.writer.write(self.formatter.render(ReportFormatter.moments(values, oracle.kind)))
        return EXIT_OK


def run(config: RunConfig) -> int:
    """Executes the configured command and returns its exit status (0 ok, 2 refuted, 1 failure)."""
    logging.info(f"Running '{config.command}'")
    return HopfImageRunner(config).run()
