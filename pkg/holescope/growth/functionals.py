import math
from dataclasses import asdict, dataclass, field

import numpy as np

from holescope.coeffs import CoefficientModel
from holescope.config import BAND_DEPTH
from holescope.exceptions import DegenerateProfileError, ParameterInvalidError
from holescope.growth.table import LogTermTable, get_table
from holescope.utils.logmath import log_fsum, logsumexp


@dataclass(frozen=True)
class GrowthProfile:
    """Deterministic growth functionals of the profile at one radius."""

    r: float
    log_mu: float
    nu: int
    n1: int
    s: float
    n1_prime: float
    bands: tuple[tuple[int, int], ...] = field(default=())
    # First band index not enumerated; None when log mu(r) = 0.
    band_cutoff_m: int | None = None

    def to_dict(self) -> dict:
        result = asdict(self)
        result['bands'] = [list(b) for b in self.bands]
        return result


def max_term(model: CoefficientModel, r: float) -> tuple[int, float]:
    """(nu(r), log mu(r)), ties broken towards the larger index.

    The term table is itself the certified bracket: it stops only once the
    peak lies strictly inside it and the term ratio at its end is below 1, so
    by log-concavity no later term can exceed the tabulated maximum. The
    argmax is then read off the table in O(extent); the same table feeds S(r),
    N_1(r), the bands and the truncation tail, so a separate bisection on the
    term ratios would not save its construction.
    """
    table = get_table(model, r)
    return table.nu, table.log_mu


def _n1_prime(table: LogTermTable, n1: int) -> float:
    h_in = max(0.0, float(table.h[n1 - 1]))
    h_out = float(table.h[n1]) if n1 <= table.last_index else -math.inf
    if not math.isfinite(h_out):
        return float(n1 - 1)
    return (n1 - 1) + h_in / (h_in - h_out)


def n1_count(model: CoefficientModel, r: float) -> tuple[int, float]:
    """(N_1(r), N_1'(r)): the number of indices with a_n r^n >= 1, and the
    root of the linear interpolant of h between N_1 - 1 and N_1."""
    table = get_table(model, r)
    n1 = table.n1
    return n1, _n1_prime(table, n1)


def _s_from_table(table: LogTermTable) -> float:
    n1 = table.n1
    return 2.0 * log_fsum(np.maximum(table.h[:n1], 0.0))


def s_value(model: CoefficientModel, r: float) -> float:
    """S(r) = 2 * sum of h(n) over the significant indices."""
    return _s_from_table(get_table(model, r))


def n_x(model: CoefficientModel, r: float, x: float) -> int:
    """#{n : h(n) >= (1 - x) log mu(r)}."""
    if not (x >= 0 and math.isfinite(x)):
        raise ParameterInvalidError('x', x, 'Must be a finite non-negative real.')
    table = get_table(model, r, depth=max(BAND_DEPTH, x))
    return table.count_at_least((1.0 - x) * table.log_mu)


def band_indices(table: LogTermTable) -> np.ndarray:
    """Band index m of every tabulated tail index (0 for significant ones).

    Band m holds the n with -m log mu <= h(n) < -(m - 1) log mu.
    """
    log_mu = table.log_mu
    if log_mu <= 0:
        raise DegenerateProfileError(table.r, 'The band partition')
    h = table.h
    with np.errstate(invalid='ignore'):
        m = np.ceil((-h - table.tol) / log_mu)
    m = np.where(np.isfinite(m), np.maximum(m, 1.0), 0.0).astype(np.int64)
    m[: table.n1] = 0
    return m


def band_cutoff(table: LogTermTable) -> int:
    """First band index whose terms may extend past the table."""
    log_mu = table.log_mu
    return int(math.floor(1.0 + table.depth * max(1.0, log_mu) / log_mu)) + 1


def band_counts(table: LogTermTable) -> list[tuple[int, int]]:
    """Nonempty complete bands (m, N_{m,m+1}) with m below the cutoff."""
    m = band_indices(table)
    cutoff = band_cutoff(table)
    tail = m[(m >= 1) & (m < cutoff)]
    if tail.size == 0:
        return []
    counts = np.bincount(tail)
    return [(int(k), int(c)) for k, c in enumerate(counts) if k >= 1 and c > 0]


def band_count(model: CoefficientModel, r: float, m: int) -> int:
    """N_{m,m+1}(r) = N_{m+1}(r) minus N_m(r).

    Raises:
        DegenerateProfileError: log mu(r) = 0.
    """
    if m < 1:
        raise ParameterInvalidError('m', m, 'Band indices start at 1.')
    table = get_table(model, r)
    if table.log_mu <= 0:
        raise DegenerateProfileError(r, 'The band count')
    if m >= band_cutoff(table):
        table = get_table(model, r, depth=float(m + 1))
    return int(np.count_nonzero(band_indices(table) == m))


def growth_profile(model: CoefficientModel, r: float) -> GrowthProfile:
    table = get_table(model, r)
    n1 = table.n1
    log_mu = table.log_mu
    degenerate = log_mu <= 0
    return GrowthProfile(
        r=float(r),
        log_mu=log_mu,
        nu=table.nu,
        n1=n1,
        s=_s_from_table(table),
        n1_prime=_n1_prime(table, n1),
        bands=() if degenerate else tuple(band_counts(table)),
        band_cutoff_m=None if degenerate else band_cutoff(table),
    )


def log_max_modulus(model: CoefficientModel, r: float) -> float:
    """log M(r) = log sum_n a_n r^n, with a geometric bound for the untabulated tail."""
    table = get_table(model, r)
    h = table.h[np.isfinite(table.h)]
    total = float(logsumexp(h))
    q = table.tail_log_ratio
    if math.isfinite(q) and math.isfinite(table.h[-1]):
        log_tail = float(table.h[-1]) + q - math.log(-math.expm1(q))
        total = float(np.logaddexp(total, log_tail))
    return total


def jump_log_radii(model: CoefficientModel, n_max: int) -> np.ndarray:
    """u_n = -log(a_{n+1}/a_n): nu(t) exceeds n exactly when log t >= u_n."""
    return -model.log_ratio(np.arange(n_max + 1))


def verify_integral_relation(model: CoefficientModel, r: float) -> float:
    """Residual of log mu(r) - log mu(1) = integral_1^r nu(t)/t dt.

    nu is a step function, so the integral is the exact sum over its jumps.
    """
    if not r >= 1:
        raise ParameterInvalidError('r', r, 'The integral relation is stated for r >= 1.')
    nu, log_mu = max_term(model, r)
    _, log_mu_1 = max_term(model, 1.0)
    if r == 1:
        return log_mu - log_mu_1
    log_r = math.log(r)
    u = jump_log_radii(model, nu + 1)
    with np.errstate(invalid='ignore'):
        pieces = np.maximum(0.0, log_r - np.maximum(0.0, u))
    pieces = np.where(np.isfinite(pieces), pieces, 0.0)
    integral = log_fsum(pieces)
    return log_mu - log_mu_1 - integral
