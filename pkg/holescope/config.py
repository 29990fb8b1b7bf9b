"""Library-wide numerical tunables."""

import os

# Relative tolerance for ties and equalities in log a_n + n log r.
LOG_TOL: float = 1e-12

# Bands are enumerated while their largest term stays above
# -BAND_DEPTH * max(1, log mu(r)).
BAND_DEPTH: float = 50.0

# Default truncation target: tail rms <= e^{DEFAULT_LOG_EPS} * mu(r).
DEFAULT_LOG_EPS: float = -30.0

# Markov factor applied to the truncation rms in the Rouche margin.
TAIL_SAFETY: float = 10.0

# Largest radius builtin families derive their support hint for.
DEFAULT_R_MAX: float = 1000.0

# Hard cap on any log-term table, independent of the support hint.
MAX_TABLE_LENGTH: int = 1 << 24

# Winding-number refinement.
INITIAL_GRID: int = 16
MAX_DEPTH: int = 12

CI_LEVEL: float = 0.95

# Importance sampler warns (and flags the interval) below this ESS.
MIN_ESS: float = 50.0

# Floor on importance proposal scales; below 1/sqrt(2) the weights have
# infinite variance.
MIN_PROPOSAL_SCALE: float = 0.85

# Sample streams handed to one worker at a time.
CHUNK_SIZE: int = 512


def max_workers() -> int:
    """Worker cap from HOLESCOPE_THREADS, defaulting to the CPU count."""
    raw = os.getenv('HOLESCOPE_THREADS')
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1
