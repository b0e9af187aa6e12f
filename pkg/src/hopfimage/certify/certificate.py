"""
Inner-faithfulness certification.

For k = 1..k_max the eigenvalue-1 multiplicity m_k of T_k is compared with the
Haar moment c_k = h(χ^k) of the ambient quantum group. Since the fixed space of
u^{⊗k} always lies inside the 1-eigenspace of T_k, m_k ≥ c_k; the model is inner
faithful iff equality holds at every level. A strict excess refutes inner
faithfulness, a deficit means something is numerically or structurally wrong.
"""

import logging
from collections import OrderedDict
from fractions import Fraction
from typing import Dict, List, Literal, NamedTuple, Optional, Sequence

from pydantic import BaseModel

from hopfimage.core.exceptions import CertificationError, DimensionError, HopfImageError, InvalidInputError
from hopfimage.linalg import Tolerance, DEFAULT_TOLERANCE
from hopfimage.models import MagicUnitaryModel, model_digest
from hopfimage.moments import MomentOracle, oracle_digest
from hopfimage.transfer import (
    DEFAULT_CAP,
    DEFAULT_MAX_LEVEL,
    TransferMatrix,
    Word,
    build_transfer,
    check_contractive,
    encode,
    fixed_vector_defect,
    idempotent_projector,
    multiplicity_of,
)
from hopfimage.utils import managed_progress_bar

CAVEAT = (
    "ConfirmedUpTo(k_max) certifies m_k = c_k only for the scanned levels; "
    "inner faithfulness requires equality for every k, which no finite scan can establish."
)
# fixed vectors of the oracle are only materialized up to this many tuples
FIXED_VECTOR_LIMIT = 4096
DEFECT_FACTOR = 10.0

VerdictStatus = Literal['confirmed', 'refuted', 'inconsistent']


class LevelRecord(BaseModel):
    k: int
    m_k: int
    c_k: Fraction
    marginal: bool = False
    norm_estimate: Optional[float] = None
    fixed_defect: Optional[float] = None

    class Config:
        arbitrary_types_allowed = True


class Verdict(BaseModel):
    status: VerdictStatus
    level: int

    @property
    def label(self) -> str:
        names = {'confirmed': 'ConfirmedUpTo', 'refuted': 'RefutedAt', 'inconsistent': 'Inconsistent'}
        return f"{names[self.status]}({self.level})"


class CertificateReport(BaseModel):
    levels: List[LevelRecord] = []
    verdict: Optional[Verdict] = None
    k_max: int
    method: str = 'both'
    tolerance: float
    model_digest: str
    oracle_digest: str
    oracle_kind: str
    warnings: List[str] = []
    caveat: str = CAVEAT

    class Config:
        arbitrary_types_allowed = True

    def record(self, k: int) -> LevelRecord:
        return self.levels[k - 1]


class IdempotentRow(NamedTuple):
    word: Word
    idempotent: complex
    haar: Fraction
    difference: float


def _check_oracle_size(model: MagicUnitaryModel, oracle: MomentOracle) -> None:
    n = getattr(oracle, 'n', None)
    if n is not None and n != model.n:
        raise DimensionError(f"model has n={model.n} but the {oracle.kind} oracle has n={n}")


def _integer_moment(oracle: MomentOracle, k: int) -> Fraction:
    c_k = Fraction(oracle.character_moment(k))
    if c_k.denominator != 1:
        raise HopfImageError(f"c_{k} = {c_k} is not an integer; it must be a fixed-space dimension")
    return c_k


def certify_level(transfer: TransferMatrix, oracle: MomentOracle, method: str = 'both',
                  tol: Tolerance = DEFAULT_TOLERANCE, max_rounds: int = 64,
                  norm_iters: int = 200) -> LevelRecord:
    """m_k, c_k and the numeric side checks for one level."""
    k = transfer.k
    norm = check_contractive(transfer, tol, norm_iters)
    result = multiplicity_of(transfer, method, tol, max_rounds)
    c_k = _integer_moment(oracle, k)

    defect = None
    if transfer.size <= FIXED_VECTOR_LIMIT:
        vectors = oracle.fixed_vectors(k)
        if vectors is not None:
            defect = fixed_vector_defect(transfer, vectors)

    logging.info(f"k={k}: m_k={result.m_k}, c_k={c_k}, marginal={result.marginal}")
    return LevelRecord(k=k, m_k=result.m_k, c_k=c_k, marginal=result.marginal,
                       norm_estimate=norm, fixed_defect=defect)


def certify(model: MagicUnitaryModel, oracle: MomentOracle, k_max: int,
            tol: Tolerance = DEFAULT_TOLERANCE, cap: int = DEFAULT_CAP,
            max_level: int = DEFAULT_MAX_LEVEL, method: str = 'both',
            max_rounds: int = 64, norm_iters: int = 200,
            progress: bool = False) -> CertificateReport:
    """
    Scans k = 1..k_max and stops at the first level where m_k ≠ c_k.

    The oracle must describe a quantum group the model represents; this is
    not checked beyond the fixed-vector defect, which is reported as a warning.
    Errors raised at some level are re-raised as CertificationError carrying
    the levels completed so far.
    """
    if k_max < 1:
        raise InvalidInputError("k_max must be at least 1")
    _check_oracle_size(model, oracle)

    report = CertificateReport(
        k_max=k_max,
        method=method,
        tolerance=tol.eps,
        model_digest=model_digest(model),
        oracle_digest=oracle_digest(oracle),
        oracle_kind=oracle.kind,
    )
    defect_thr = DEFECT_FACTOR * tol.eps

    with managed_progress_bar(k_max, desc="Certifying", disable=not progress) as progress_bar:
        for k in range(1, k_max + 1):
            try:
                transfer = build_transfer(model, k, cap, max_level)
                record = certify_level(transfer, oracle, method, tol, max_rounds, norm_iters)
            except HopfImageError as e:
                logging.error(f"Certification stopped at level k={k}: {e}")
                raise CertificationError(f"level k={k}: {e}", partial_report=report) from e
            report.levels.append(record)
            progress_bar.update(1)

            if record.marginal:
                report.warnings.append(f"k={k}: rank decision is numerically marginal")
            if record.norm_estimate is not None and record.norm_estimate > 1.0 + tol.threshold(transfer.size):
                report.warnings.append(f"k={k}: ||T_k|| estimate {record.norm_estimate:.12g} exceeds 1")
            if record.fixed_defect is not None and record.fixed_defect > defect_thr:
                report.warnings.append(
                    f"k={k}: oracle fixed vectors are not fixed by T_k (defect {record.fixed_defect:.3e}); "
                    f"the model may not be a representation of this oracle's quantum group"
                )

            if record.m_k > record.c_k:
                report.verdict = Verdict(status='refuted', level=k)
                break
            if record.m_k < record.c_k:
                report.verdict = Verdict(status='inconsistent', level=k)
                break
        else:
            report.verdict = Verdict(status='confirmed', level=k_max)

    for warning in report.warnings:
        logging.warning(warning)
    logging.info(f"Verdict: {report.verdict.label}")
    return report


def compare_idempotent_to_haar(model: MagicUnitaryModel, oracle: MomentOracle, words: Sequence[Word],
                               tol: Tolerance = DEFAULT_TOLERANCE, cap: int = DEFAULT_CAP,
                               max_level: int = DEFAULT_MAX_LEVEL,
                               max_rounds: int = 64) -> List[IdempotentRow]:
    """
    φ̃ against the oracle's Haar state on each word. When the oracle describes the
    Hopf image (e.g. the generated subgroup) the differences vanish; against a
    larger ambient group a nonzero difference exhibits the failure of inner faithfulness.
    """
    _check_oracle_size(model, oracle)
    projectors: Dict[int, object] = OrderedDict()
    rows = []
    for word in words:
        word.check_range(model.n)
        if word.k not in projectors:
            projectors[word.k] = idempotent_projector(model, word.k, tol, cap, max_level, max_rounds)
        projector = projectors[word.k]
        value = complex(projector[encode(word.rows, model.n), encode(word.cols, model.n)])
        haar = Fraction(oracle.haar_monomial(word))
        rows.append(IdempotentRow(word=word, idempotent=value, haar=haar, difference=abs(value - float(haar))))
    logging.info(f"Compared φ̃ with the {oracle.kind} Haar state on {len(rows)} word(s)")
    return rows
