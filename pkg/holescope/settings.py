import json
import math
import os
from enum import Enum

from pydantic import BaseModel, Field, field_validator, model_validator

from holescope.coeffs import FamilySpec
from holescope.exceptions import ParameterInvalidError
from holescope.holeprob import EstimatorSettings, Method
from holescope.verify.suite import DEFAULT_DELTAS


class Command(str, Enum):
    ANALYZE = 'analyze'
    VERIFY = 'verify'
    ESTIMATE = 'estimate'
    COMPARE = 'compare'


def parse_r_grid(text: str) -> list[float]:
    """Comma list ``1,1.5,2`` or geometric range ``geom:START:STOP:COUNT``."""
    text = text.strip()
    try:
        if text.startswith('geom:'):
            start, stop, count = text[len('geom:') :].split(':')
            n = int(count)
            if n < 1:
                raise ValueError
            if n == 1:
                return [float(start)]
            lo, hi = math.log(float(start)), math.log(float(stop))
            return [math.exp(lo + (hi - lo) * k / (n - 1)) for k in range(n)]
        return [float(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ParameterInvalidError(
            'r-grid', text, 'Expected a comma list or geom:START:STOP:COUNT.'
        )


class ExperimentConfig(BaseModel):
    """A reproducible experiment manifest."""

    model: FamilySpec = Field(default_factory=FamilySpec, description='Coefficient family.')
    r_grid: list[float] = Field(default_factory=lambda: [1.0], description='Radii, increasing, >= 1.')
    commands: list[Command] = Field(default_factory=list, description='Commands to run.')
    estimator: EstimatorSettings = Field(
        default_factory=EstimatorSettings, description='Monte Carlo settings.'
    )
    deltas: list[float] = Field(
        default_factory=lambda: list(DEFAULT_DELTAS), description='Circle shrink factors.'
    )
    points: int | None = Field(
        default=None, gt=0, description='Point count for the determinant check; N_1(r) if unset.'
    )
    sigma: float = Field(default=0.5, gt=0, description='Exponent slack of the large-maximum event.')
    verify_samples: int = Field(
        default=0, ge=0, description='Samples for the Monte Carlo checks in verify; 0 skips them.'
    )
    out: str = Field(default='.', description='Directory the CSV and JSON outputs go to.')

    @field_validator('r_grid')
    @classmethod
    def _increasing_radii(cls, value: list[float]) -> list[float]:
        if not value:
            raise ValueError('r_grid must not be empty')
        if any(not (r >= 1 and math.isfinite(r)) for r in value):
            raise ValueError('every radius must be finite and >= 1')
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError('r_grid must be strictly increasing')
        return value

    @field_validator('deltas')
    @classmethod
    def _deltas_in_range(cls, value: list[float]) -> list[float]:
        if any(not 0 < d < 1 for d in value):
            raise ValueError('deltas must lie in (0, 1)')
        return value

    @model_validator(mode='after')
    def _commands_and_seed(self) -> 'ExperimentConfig':
        if not self.commands:
            raise ValueError('at least one command is required')
        stochastic = (
            Command.COMPARE in self.commands
            or (Command.ESTIMATE in self.commands and self.estimator.method is not Method.CERTIFICATE)
            or (Command.VERIFY in self.commands and self.verify_samples > 0)
        )
        if stochastic and self.estimator.seed is None:
            raise ValueError('a seed is required for stochastic commands')
        return self

    def persist(self, path: str) -> None:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self.model_dump_json(indent=2))

    @classmethod
    def from_file(cls, path: str) -> 'ExperimentConfig':
        with open(path, 'r', encoding='utf-8') as f:
            return cls.model_validate(json.load(f))

    @classmethod
    def raw_from_file(cls, path: str) -> dict:
        """The manifest as a dict, before validation, so flags can be layered on."""
        if not os.path.exists(path):
            raise ParameterInvalidError('config', path, 'File does not exist.')
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
