from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ..errors import ConfigurationError

#: validity ceiling for the default Euler-Maclaurin term policy
MAX_IMAG = 200.0


@dataclass(frozen=True)
class PrecisionConfig:
    """Numerical knobs for the zeta and polygamma kernels.

    ``euler_maclaurin_terms=None`` selects the height-dependent policy
    ``N = max(24, ceil(1.3 |Im s|) + 8)``.
    """

    euler_maclaurin_terms: Optional[int] = None
    tail_terms: int = 12
    polygamma_shift_threshold: float = 12.0
    polygamma_terms: int = 10
    target_rel_error: float = 1e-12

    def __post_init__(self):
        m = self.tail_terms
        if not 1 <= m <= 30:
            raise ConfigurationError(f"tail_terms must lie in [1, 30], got {m}")
        n = self.euler_maclaurin_terms
        if n is not None and (n < 1 or n < 2 * m):
            raise ConfigurationError(f"euler_maclaurin_terms={n} must be >= 2*tail_terms={2 * m}")
        if not 1 <= self.polygamma_terms <= 30:
            raise ConfigurationError("polygamma_terms must lie in [1, 30]")
        if self.polygamma_shift_threshold <= 0:
            raise ConfigurationError("polygamma_shift_threshold must be positive")
        if self.target_rel_error < 1e-13:
            raise ConfigurationError("target_rel_error below the binary64 floor of 1e-13")

    def terms_for(self, s: complex) -> int:
        if self.euler_maclaurin_terms is not None:
            return self.euler_maclaurin_terms
        return max(24, math.ceil(1.3 * abs(s.imag)) + 8, 2 * self.tail_terms)


DEFAULT = PrecisionConfig()
