from .exceptions import (
    HopfImageError,
    ConfigurationError,
    ProcessingError,
    DimensionError,
    InvalidInputError,
    DomainError,
    SizeGuardError,
    CapacityError,
    NonConvergenceError,
    InconsistencyError,
    CertificationError,
    NumericalError,
)
from .profile import Profile
from .hopfimage_config import HopfImageConfig
from .user_interaction import UserInteraction
