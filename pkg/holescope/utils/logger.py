import logging
import os

LEVELS = logging.getLevelNamesMapping()


def level_from_env() -> int:
    """LOG_LEVEL from the environment; DEBUG=true wins."""
    if os.getenv('DEBUG', 'False').lower() in ['true', '1', 'yes']:
        return logging.DEBUG
    return LEVELS.get(os.getenv('LOG_LEVEL', 'INFO').upper(), logging.INFO)


holescope_logger = logging.getLogger('holescope')

console_handler = logging.StreamHandler()
console_handler.setFormatter(
    logging.Formatter('{asctime} - {name}:{levelname} - {message}', style='{', datefmt='%Y-%m-%d %H:%M')
)
holescope_logger.addHandler(console_handler)
holescope_logger.setLevel(level_from_env())
holescope_logger.propagate = False


def set_log_level(level: str) -> None:
    """Override the level chosen from the environment (used by the CLI)."""
    numeric = LEVELS.get(level.upper())
    if numeric is None:
        holescope_logger.warning(f'Unknown log level {level!r}, keeping current level')
        return
    holescope_logger.setLevel(numeric)
    holescope_logger.debug(f'Log level set to {level.upper()}')
