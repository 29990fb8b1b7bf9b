from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

from holescope.config import CHUNK_SIZE, max_workers
from holescope.utils.logger import holescope_logger as logger

T = TypeVar('T')


def stream_chunks(n_streams: int, chunk_size: int = CHUNK_SIZE) -> list[range]:
    """Split stream indices 0..n_streams-1 into contiguous ranges."""
    return [
        range(start, min(start + chunk_size, n_streams))
        for start in range(0, n_streams, chunk_size)
    ]


def map_chunks(
    fn: Callable[[range], T],
    n_streams: int,
    workers: int | None = None,
    chunk_size: int = CHUNK_SIZE,
) -> list[T]:
    """Apply ``fn`` to every chunk of stream indices, preserving chunk order.

    Chunk boundaries depend only on ``chunk_size``, so the result is
    independent of the number of workers.
    """
    chunks: Sequence[range] = stream_chunks(n_streams, chunk_size)
    n_workers = min(workers or max_workers(), max_workers(), max(1, len(chunks)))
    logger.debug(f'Running {len(chunks)} chunks on {n_workers} worker(s)')
    if n_workers == 1:
        return [fn(chunk) for chunk in chunks]
    with ThreadPoolExecutor(max_workers=n_workers) as executor:
        return list(executor.map(fn, chunks))
