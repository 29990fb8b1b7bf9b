import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Hashable

import numpy as np
from pydantic import BaseModel

from holescope.config import DEFAULT_R_MAX, MAX_TABLE_LENGTH


class Family(str, Enum):
    GEF = 'gef'
    MITTAG_LEFFLER = 'mittag_leffler'
    GAUSSIAN_DECAY = 'gaussian_decay'
    EXP_EXP = 'exp_exp'
    TABLE = 'table'


@dataclass(frozen=True)
class LogTerm:
    """One term of the log profile: value = log a_n + n log r."""

    n: int
    value: float


class ValidationReport(BaseModel):
    check: str
    passed: bool
    n_max: int
    first_violation: int | None = None
    worst_margin: float = 0.0
    message: str = ''


class CoefficientModel(ABC):
    """Deterministic coefficient profile n -> log a_n, with log a_0 = 0.

    Subclasses are immutable after construction and are shared freely
    between worker threads.
    """

    family: Family

    def __init__(self, n_support_hint: int):
        self._n_support_hint = int(n_support_hint)

    @property
    def n_support_hint(self) -> int:
        """Index beyond which h(n) = log a_n + n log r is decreasing for every supported r."""
        return self._n_support_hint

    @property
    @abstractmethod
    def params(self) -> dict:
        """Family parameters, as they would appear in a manifest."""

    @abstractmethod
    def log_coeffs(self, ns: np.ndarray) -> np.ndarray:
        """Vectorised log a_n; -inf where a_n = 0."""

    @abstractmethod
    def log_ratio(self, ns: np.ndarray) -> np.ndarray:
        """Vectorised log a_{n+1} - log a_n, evaluated without cancellation."""

    @property
    def is_polynomial(self) -> bool:
        return False

    @property
    def key(self) -> Hashable:
        return (self.family.value, tuple(sorted(self.params.items())))

    def log_coeff(self, n: int) -> float:
        return float(self.log_coeffs(np.array([n]))[0])

    def describe(self) -> str:
        params = ', '.join(f'{k}={v}' for k, v in self.params.items() if k != 'values')
        return f'{self.family.value}({params})' if params else self.family.value

    def __repr__(self) -> str:
        return f'<{type(self).__name__} {self.describe()} hint={self.n_support_hint}>'


def support_hint_from_ratio(model: CoefficientModel, r_max: float = DEFAULT_R_MAX) -> int:
    """First n with log_ratio(n) + log r_max < 0, found by galloping then bisection.

    Past that index the ratio a_{n+1} r^{n+1} / (a_n r^n) is below one for every
    r <= r_max, by log-concavity.
    """
    log_r_max = math.log(r_max)

    def decreasing(n: int) -> bool:
        return bool(model.log_ratio(np.array([n]))[0] + log_r_max < 0)

    if decreasing(0):
        return 0
    hi = 1
    while not decreasing(hi):
        if hi > MAX_TABLE_LENGTH:
            return MAX_TABLE_LENGTH
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if decreasing(mid):
            hi = mid
        else:
            lo = mid
    return hi
