"""Zero counting in disks by the argument principle."""

from .disk import (
    HoleStatus,
    classify,
    classify_batch,
    count_zeros_in_disk,
    has_hole,
    tail_bound,
)
from .winding import CountStatus, ZeroCountResult, count_zeros_batch, winding_number

__all__ = [
    'CountStatus',
    'HoleStatus',
    'ZeroCountResult',
    'classify',
    'classify_batch',
    'count_zeros_batch',
    'count_zeros_in_disk',
    'has_hole',
    'tail_bound',
    'winding_number',
]
