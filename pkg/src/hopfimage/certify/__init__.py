from .certificate import (
    CAVEAT,
    LevelRecord,
    Verdict,
    CertificateReport,
    IdempotentRow,
    certify,
    certify_level,
    compare_idempotent_to_haar,
)
