"""Counter-based coefficient streams.

Every (seed, namespace, stream) triple owns a Philox key; cell n of the
stream lives in counter block n // 2, so any cell can be regenerated without
replaying the cells before it.
"""

import numpy as np

from holescope.exceptions import ParameterInvalidError

CELLS_PER_BLOCK = 2

# Namespaces keep auxiliary draws (pilot runs, spot checks) off the main streams.
MAIN_NAMESPACE = 0
PILOT_NAMESPACE = 1
PHASE_NAMESPACE = 2


def stream_key(seed: int, stream: int, namespace: int = MAIN_NAMESPACE) -> np.ndarray:
    if seed < 0:
        raise ParameterInvalidError('seed', seed, 'Seeds are non-negative integers.')
    if stream < 0:
        raise ParameterInvalidError('stream_index', stream, 'Stream indices are non-negative.')
    sequence = np.random.SeedSequence(int(seed), spawn_key=(int(namespace), int(stream)))
    return sequence.generate_state(2, dtype=np.uint64)


def _uniform_blocks(key: np.ndarray, first_block: int, n_blocks: int) -> np.ndarray:
    bit_generator = np.random.Philox(key=key, counter=int(first_block))
    return np.random.Generator(bit_generator).random((n_blocks, 2 * CELLS_PER_BLOCK))


def _to_complex_gaussian(u: np.ndarray) -> np.ndarray:
    """Exact CN(0, 1) from uniform pairs: |phi|^2 ~ Exp(1), uniform phase."""
    modulus = np.sqrt(-np.log1p(-u[..., 0]))
    return modulus * np.exp(2j * np.pi * u[..., 1])


def draw_cells(
    seed: int, stream: int, start: int, stop: int, namespace: int = MAIN_NAMESPACE
) -> np.ndarray:
    """Coefficients phi_start .. phi_{stop-1} of one stream."""
    if start < 0 or stop < start:
        raise ParameterInvalidError('cells', (start, stop), 'Need 0 <= start <= stop.')
    if stop == start:
        return np.zeros(0, dtype=complex)
    first_block = start // CELLS_PER_BLOCK
    last_block = (stop - 1) // CELLS_PER_BLOCK
    u = _uniform_blocks(stream_key(seed, stream, namespace), first_block, last_block - first_block + 1)
    cells = _to_complex_gaussian(u.reshape(-1, 2))
    offset = start - first_block * CELLS_PER_BLOCK
    return cells[offset : offset + stop - start]


def draw_cell(seed: int, stream: int, n: int, namespace: int = MAIN_NAMESPACE) -> complex:
    return complex(draw_cells(seed, stream, n, n + 1, namespace)[0])


def draw_batch(
    seed: int, streams: range, n_cells: int, namespace: int = MAIN_NAMESPACE
) -> np.ndarray:
    """Rows phi_0 .. phi_{n_cells-1} for each stream in ``streams``."""
    out = np.empty((len(streams), n_cells), dtype=complex)
    for row, stream in enumerate(streams):
        out[row] = draw_cells(seed, stream, 0, n_cells, namespace)
    return out
