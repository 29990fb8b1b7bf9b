import logging

import pytest

from holescope.utils.logger import holescope_logger, level_from_env, set_log_level
from holescope.utils.parallel import map_chunks, stream_chunks


def test_stream_chunks_cover_range():
    chunks = stream_chunks(1100, chunk_size=512)
    assert [(c.start, c.stop) for c in chunks] == [(0, 512), (512, 1024), (1024, 1100)]
    assert stream_chunks(0) == []


@pytest.mark.parametrize('workers', [1, 2, 4])
def test_map_chunks_preserves_order(workers):
    out = map_chunks(lambda streams: list(streams), 2000, workers=workers, chunk_size=300)
    assert [i for chunk in out for i in chunk] == list(range(2000))


def test_thread_cap_from_environment(monkeypatch):
    monkeypatch.setenv('HOLESCOPE_THREADS', '1')
    out = map_chunks(lambda streams: len(streams), 1000, workers=8, chunk_size=100)
    assert out == [100] * 10


def test_set_log_level():
    previous = holescope_logger.level
    try:
        set_log_level('debug')
        assert holescope_logger.level == logging.DEBUG
        set_log_level('nonsense')
        assert holescope_logger.level == logging.DEBUG
    finally:
        holescope_logger.setLevel(previous)


@pytest.mark.parametrize(
    'env,expected',
    [
        ({'LOG_LEVEL': 'warning'}, logging.WARNING),
        ({'LOG_LEVEL': 'bogus'}, logging.INFO),
        ({'LOG_LEVEL': 'error', 'DEBUG': 'yes'}, logging.DEBUG),
    ],
)
def test_level_from_env(monkeypatch, env, expected):
    monkeypatch.delenv('DEBUG', raising=False)
    for key, value in env.items():
        monkeypatch.setenv(key, value)
    assert level_from_env() == expected
