"""Utility functions for vlink"""

import logging
import os
from typing import Optional
from dotenv import load_dotenv
from vlink.models import VlinkSettings

_ENV_FIELDS = {
    "VLINK_CONVENTION": "convention",
    "VLINK_LOG_LEVEL": "log_level",
    "VLINK_FUZZ_STEPS": "fuzz_steps",
    "VLINK_FUZZ_SEED": "fuzz_seed",
    "VLINK_FUZZ_TRIALS": "fuzz_trials",
    "VLINK_INSERT_BIAS": "insert_bias",
    "VLINK_MAX_CHORDS": "max_chords",
}


def load_settings(env_file: Optional[str] = None) -> VlinkSettings:
    """
    Build settings from a .env file and the VLINK_* environment variables.

    Args:
        env_file: Explicit .env path; the nearest .env is used when omitted

    Returns:
        VlinkSettings: Validated settings
    """
    load_dotenv(env_file)
    values = {field: os.environ[var] for var, field in _ENV_FIELDS.items() if var in os.environ}
    return VlinkSettings(**values)


def configure_logging(level: str = "WARNING") -> logging.Logger:
    """
    Attach a stream handler to the package logger once and set its level.

    Args:
        level: Logging level name

    Returns:
        logging.Logger: The "vlink" logger
    """
    logger = logging.getLogger("vlink")
    logger.setLevel(level.upper())
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        logger.addHandler(handler)
    return logger
