import logging
import os
import sys

from services.errors import ConfigError

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"❌ {name} must be an integer, got {raw!r}") from None


def load_config() -> dict:
    """Read the ``LIEBAR_*`` environment; raises ``ConfigError`` on a malformed value."""
    config = {
        "max_weight_cap": _env_int("LIEBAR_MAX_WEIGHT_CAP", 8),
        "default_seed": _env_int("LIEBAR_SEED", 42),
        "sample_count": _env_int("LIEBAR_SAMPLES", 100),
        "log_level": os.environ.get("LIEBAR_LOG_LEVEL", "WARNING").upper(),
    }
    if config["max_weight_cap"] < 1:
        raise ConfigError(f"❌ LIEBAR_MAX_WEIGHT_CAP must be positive, got {config['max_weight_cap']}")
    if config["sample_count"] < 1:
        raise ConfigError(f"❌ LIEBAR_SAMPLES must be positive, got {config['sample_count']}")
    if not isinstance(logging.getLevelName(config["log_level"]), int):
        raise ConfigError(f"❌ unknown LIEBAR_LOG_LEVEL {config['log_level']!r}")
    return config


def setup_logging(config: dict, level: str = None) -> None:
    """Send every log record to stderr; stdout carries only command output."""
    logging.basicConfig(
        level=level or config["log_level"],
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
    logging.getLogger(__name__).debug("🔧 weight cap %d, seed %d", config["max_weight_cap"], config["default_seed"])
