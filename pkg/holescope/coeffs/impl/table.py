from pathlib import Path
from typing import Sequence

import numpy as np

from holescope.coeffs.base import CoefficientModel, Family
from holescope.config import LOG_TOL
from holescope.exceptions import ModelValidationError


class TableModel(CoefficientModel):
    """Finite log-coefficient table; a_n = 0 past the last entry.

    The random series is then a polynomial of degree len(values) - 1, which is
    entire without further conditions.
    """

    family = Family.TABLE

    def __init__(self, values: Sequence[float]):
        log_a = np.asarray(values, dtype=float)
        if log_a.ndim != 1 or log_a.size == 0:
            raise ModelValidationError('table', 'at least one log-coefficient is required')
        if not np.all(np.isfinite(log_a)):
            bad = int(np.flatnonzero(~np.isfinite(log_a))[0])
            raise ModelValidationError('table', 'entry is not finite', bad)
        if log_a[0] != 0.0:
            raise ModelValidationError('table', f'log a_0 must be 0, got {log_a[0]!r}', 0)
        violation = first_concavity_violation(log_a)
        if violation is not None:
            raise ModelValidationError('table', 'profile is not log-concave', violation)
        log_a.setflags(write=False)
        self._values = log_a
        super().__init__(log_a.size - 1)

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def degree(self) -> int:
        return self._values.size - 1

    @property
    def is_polynomial(self) -> bool:
        return True

    @property
    def params(self) -> dict:
        return {'values': tuple(float(v) for v in self._values)}

    def log_coeffs(self, ns):
        n = np.asarray(ns, dtype=np.int64)
        inside = (n >= 0) & (n <= self.degree)
        out = np.full(n.shape, -np.inf)
        out[inside] = self._values[n[inside]]
        return out

    def log_ratio(self, ns):
        n = np.asarray(ns, dtype=np.int64)
        inside = (n >= 0) & (n < self.degree)
        out = np.full(n.shape, -np.inf)
        out[inside] = self._values[n[inside] + 1] - self._values[n[inside]]
        return out


def first_concavity_violation(log_a: np.ndarray) -> int | None:
    """First n >= 2 whose increment log a_n - log a_{n-1} exceeds the previous one.

    Returns None for a log-concave profile.
    """
    if log_a.size < 3:
        return None
    second = np.diff(log_a, n=2)
    scale = 1.0 + np.abs(log_a[1:-1])
    bad = np.flatnonzero(second > LOG_TOL * scale)
    return int(bad[0]) + 2 if bad.size else None


def load_table(path: str | Path) -> TableModel:
    """Read the two-column ``n log_a_n`` text format.

    Indices must be 0, 1, 2, ... without gaps. Blank lines and ``#`` comments
    are ignored.
    """
    values: list[float] = []
    with open(path, 'r', encoding='utf-8') as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ModelValidationError(
                    'table', f'{path}:{lineno}: expected two columns, got {len(parts)}'
                )
            try:
                n, value = int(parts[0]), float(parts[1])
            except ValueError:
                raise ModelValidationError('table', f'{path}:{lineno}: unparsable row {line!r}')
            if n != len(values):
                raise ModelValidationError(
                    'table', f'{path}:{lineno}: indices must increase by one from 0', n
                )
            values.append(value)
    return TableModel(values)


def save_table(model: TableModel, path: str | Path) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        for n, value in enumerate(model.values):
            f.write(f'{n} {float(value)!r}\n')
