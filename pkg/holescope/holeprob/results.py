import math
from dataclasses import asdict, dataclass, field
from enum import Enum

import numpy as np
from pydantic import BaseModel, Field, field_validator

from holescope.config import DEFAULT_LOG_EPS, MIN_PROPOSAL_SCALE


class Method(str, Enum):
    DIRECT = 'direct'
    IMPORTANCE = 'importance'
    CERTIFICATE = 'certificate'


@dataclass
class EstimateResult:
    """Log-domain hole-probability estimate or bound at one radius."""

    method: Method
    r: float
    log_p: float
    log_ci_low: float
    log_ci_high: float
    n_samples: int = 0
    n_hole: int = 0
    n_uncertain: int = 0
    ess: float | None = None
    # False when log_p is not a point estimate (no successes, low ESS).
    reliable: bool = True
    diagnostics: dict = field(default_factory=dict)

    @property
    def log10_p(self) -> float:
        return self.log_p / math.log(10.0)

    def to_dict(self, extra_field: dict | None = None) -> dict:
        result = asdict(self)
        result['method'] = self.method.value
        if extra_field:
            result.update(extra_field)
        return result


class ProposalSpec(BaseModel):
    """Importance proposal: phi_0 shifted by ``mean_shift_0``, phi_n scaled by
    ``scales[n - 1]`` for n >= 1.

    With ``random_phase`` the shifted phi_0 is rotated by a uniform phase, so the
    proposal for phi_0 is radially symmetric like the events it targets;
    otherwise the shift is along the real axis.
    """

    mean_shift_0: float = Field(default=0.0, ge=0.0)
    scales: list[float] = Field(default_factory=list)
    random_phase: bool = Field(default=True)

    @field_validator('scales')
    @classmethod
    def _scales_in_unit_interval(cls, value: list[float]) -> list[float]:
        for s in value:
            if not (0.0 < s <= 1.0):
                raise ValueError(f'proposal scales must lie in (0, 1], got {s!r}')
        return value

    @property
    def n_trunc(self) -> int:
        return len(self.scales)

    def scale_array(self) -> np.ndarray:
        """sigma_n for n = 0 .. n_trunc, with sigma_0 = 1."""
        return np.concatenate([[1.0], np.asarray(self.scales, dtype=float)])

    @property
    def is_identity(self) -> bool:
        return self.mean_shift_0 == 0.0 and all(s == 1.0 for s in self.scales)

    @classmethod
    def identity(cls, n_trunc: int) -> 'ProposalSpec':
        return cls(mean_shift_0=0.0, scales=[1.0] * n_trunc)


class EstimatorSettings(BaseModel):
    """How a Monte Carlo estimate is produced."""

    method: Method = Field(default=Method.IMPORTANCE, description='Estimator to run.')
    n_samples: int = Field(default=10_000, gt=0, description='Number of sample streams.')
    seed: int | None = Field(default=None, ge=0, description='Root seed of the counter streams.')
    log_eps: float = Field(default=DEFAULT_LOG_EPS, lt=0, description='Relative truncation target.')
    mean_shift_0: float | None = Field(
        default=None, ge=0, description='Importance shift of phi_0; None for the pilot estimate.'
    )
    scale_floor: float = Field(
        default=MIN_PROPOSAL_SCALE, gt=0, le=1, description='Lower bound on the importance scales.'
    )
    workers: int | None = Field(default=None, gt=0, description='Thread count cap.')
