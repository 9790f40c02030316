import json
import logging
import os

from dotenv import load_dotenv

from .logging_config import setup_logging

logger = logging.getLogger(__name__)

INT_SETTINGS = {
    "ORACLE_MAX_N": 11,
    "ORACLE_JOBS": 1,
    "VERIFY_MAX_K": 5,
    "VERIFY_MAX_N": 10,
    "IDENTITY_MAX_N": 40,
    "IDENTITY_MAX_K": 6,
    "IDENTITY_CROSS_MAX_N": 20,
    "IDENTITY_PROBLEM1_MAX_N": 12,
    "IDENTITY_K2_MAX_N": 8,
    "IDENTITY_OMEGA_MAX_K": 6,
    "IDENTITY_OMEGA_MAX_N": 20,
    "IDENTITY_OMEGA_MAX_R": 20,
    "BIJECTION_MAX_N": 8,
}

OUTPUT_FORMATS = ("text", "json", "csv")


def _int_setting(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Invalid {name} '{raw}', using {default}")
        return default


def load_configurations(app, overrides=None):
    load_dotenv()
    for name, default in INT_SETTINGS.items():
        app.config[name] = _int_setting(name, default)

    output_format = os.getenv("OUTPUT_FORMAT", "text").lower()
    if output_format not in OUTPUT_FORMATS:
        logger.warning(f"Invalid OUTPUT_FORMAT '{output_format}', using text")
        output_format = "text"
    app.config["OUTPUT_FORMAT"] = output_format

    # Optional JSON file with sweep defaults, e.g. {"VERIFY_MAX_N": 9}
    sweep_file = os.getenv("SWEEP_CONFIG_FILE")
    app.config["SWEEP_CONFIG_FILE"] = sweep_file
    if sweep_file:
        if not app.config.from_file(os.path.abspath(sweep_file), load=json.load, silent=True):
            logger.warning(f"Sweep config file '{sweep_file}' not found, keeping environment defaults")

    if overrides:
        app.config.update(overrides)


def configure_logging():
    """Configure logging using the centralized logging configuration."""
    setup_logging()
