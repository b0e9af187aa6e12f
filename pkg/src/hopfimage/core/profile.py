from pydantic import BaseSettings, validator
from typing import Optional

METHODS = ('kernel', 'cesaro', 'both')
OUTPUT_FORMATS = ('json', 'csv', 'text')


class Profile(BaseSettings):
    """
    Represents a set of numeric settings for a run.
    Attributes can be overridden by CLI arguments or HOPFIMAGE_* environment variables.
    """
    tolerance: float = 1e-9  # Absolute zero-test threshold, scaled by matrix dimension
    cap: int = 65536  # Largest admissible n^k
    max_level: int = 12  # Largest admissible k
    k_max: int = 4  # Default number of certified levels
    method: str = 'both'  # Multiplicity method: kernel, cesaro or both
    max_rounds: int = 64  # Cesàro doubling rounds
    norm_iters: int = 200  # Power-iteration steps for the norm guard
    group_size_guard: int = 10 ** 6
    nc_guard: int = 14
    weingarten_guard: int = 6
    dual_table_guard: int = 4096
    output_format: str = 'text'
    output_file: Optional[str] = None
    verbose: bool = False

    class Config:
        env_prefix = 'HOPFIMAGE_'

    @validator('tolerance')
    def validate_tolerance(cls, v):
        if not 0 < v < 1:
            raise ValueError('tolerance must lie strictly between 0 and 1')
        return v

    @validator('cap', 'max_level', 'k_max', 'max_rounds', 'norm_iters',
               'group_size_guard', 'nc_guard', 'weingarten_guard', 'dual_table_guard')
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError('must be a positive integer')
        return v

    @validator('method')
    def validate_method(cls, v):
        if v not in METHODS:
            raise ValueError(f"method must be one of {', '.join(METHODS)}")
        return v

    @validator('output_format')
    def validate_output_format(cls, v):
        if v not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {', '.join(OUTPUT_FORMATS)}")
        return v
