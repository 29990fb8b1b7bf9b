"""Chunked evaluation of hole indicators over sample streams."""

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import i0e

from holescope.sampling import MAIN_NAMESPACE, PHASE_NAMESPACE, draw_batch
from holescope.utils.logger import holescope_logger as logger
from holescope.utils.parallel import map_chunks

# Maps a batch of coefficient rows to (hole, uncertain) flags.
Classifier = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass
class ChunkOutcome:
    hole: np.ndarray
    uncertain: np.ndarray
    log_weight: np.ndarray


def log_weight_constant_term(psi_0: np.ndarray, shift: float, random_phase: bool) -> np.ndarray:
    """log of target / proposal density for the constant coefficient.

    Real-axis shift b: b^2 - 2 b Re psi_0. Phase-averaged shift: the proposal
    density is exp(-|z|^2 - b^2) I_0(2 b |z|) / pi, giving b^2 - log I_0(2 b |psi_0|).
    """
    if shift == 0.0:
        return np.zeros(psi_0.shape)
    if not random_phase:
        return shift * shift - 2.0 * shift * psi_0.real
    x = 2.0 * shift * np.abs(psi_0)
    return shift * shift - x - np.log(i0e(x))


def run_streams(
    classifier: Classifier,
    n_samples: int,
    seed: int,
    n_trunc: int,
    shift: float = 0.0,
    scales: np.ndarray | None = None,
    random_phase: bool = True,
    workers: int | None = None,
) -> ChunkOutcome:
    """Draw streams 0 .. n_samples-1, apply the proposal, classify.

    With shift = 0 and unit scales the draws are the target draws and every
    log-weight is 0. Results are concatenated in stream order, so they do not
    depend on the number of workers.
    """
    sigma = np.ones(n_trunc + 1) if scales is None else np.asarray(scales, dtype=float)
    log_sigma = np.log(sigma)
    weight_slope = 1.0 - 1.0 / sigma**2
    rotate = random_phase and shift != 0.0

    def work(streams: range) -> ChunkOutcome:
        phi = draw_batch(seed, streams, n_trunc + 1, MAIN_NAMESPACE)
        psi = phi * sigma
        psi[:, 0] += shift
        if rotate:
            phase = draw_batch(seed, streams, 1, PHASE_NAMESPACE)[:, 0]
            psi[:, 0] *= phase / np.abs(phase)
        log_w = log_weight_constant_term(psi[:, 0], shift, random_phase) + (
            2.0 * log_sigma[1:] - np.abs(psi[:, 1:]) ** 2 * weight_slope[1:]
        ).sum(axis=1)
        hole, uncertain = classifier(psi)
        logger.debug(
            f'streams {streams.start}..{streams.stop - 1}: '
            f'{int(hole.sum())} hole(s), {int(uncertain.sum())} uncertain'
        )
        return ChunkOutcome(hole=hole, uncertain=uncertain, log_weight=log_w)

    chunks = map_chunks(work, n_samples, workers=workers)
    return ChunkOutcome(
        hole=np.concatenate([c.hole for c in chunks]),
        uncertain=np.concatenate([c.uncertain for c in chunks]),
        log_weight=np.concatenate([c.log_weight for c in chunks]),
    )
