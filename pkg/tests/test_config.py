import json
import logging
import os
import tempfile
import unittest
from unittest.mock import patch

from flask import Flask

from app import create_app
from app.config import INT_SETTINGS, load_configurations
from app.logging_config import build_logging_config, parse_level, setup_logging

CLEAN_ENV = {name: "" for name in INT_SETTINGS}
CLEAN_ENV.update({"OUTPUT_FORMAT": "text", "SWEEP_CONFIG_FILE": ""})


@patch('app.config.load_dotenv')
class TestLoadConfigurations(unittest.TestCase):

    def load(self, overrides=None, **env):
        app = Flask(__name__)
        with patch.dict(os.environ, {**CLEAN_ENV, **env}):
            load_configurations(app, overrides)
        return app.config

    def test_defaults(self, _):
        config = self.load()
        for name, default in INT_SETTINGS.items():
            self.assertEqual(config[name], default)
        self.assertEqual(config["OUTPUT_FORMAT"], "text")

    def test_environment_values(self, _):
        config = self.load(ORACLE_MAX_N="9", ORACLE_JOBS="4", OUTPUT_FORMAT="JSON")
        self.assertEqual(config["ORACLE_MAX_N"], 9)
        self.assertEqual(config["ORACLE_JOBS"], 4)
        self.assertEqual(config["OUTPUT_FORMAT"], "json")

    @patch('app.config.logger')
    def test_invalid_integer_falls_back(self, mock_logger, _):
        """Test that a non-numeric setting is logged and replaced by its default."""
        config = self.load(VERIFY_MAX_N="ten")
        self.assertEqual(config["VERIFY_MAX_N"], 10)
        mock_logger.warning.assert_any_call("Invalid VERIFY_MAX_N 'ten', using 10")

    @patch('app.config.logger')
    def test_invalid_format_falls_back(self, mock_logger, _):
        config = self.load(OUTPUT_FORMAT="yaml")
        self.assertEqual(config["OUTPUT_FORMAT"], "text")
        mock_logger.warning.assert_called_once_with("Invalid OUTPUT_FORMAT 'yaml', using text")

    def test_sweep_file(self, _):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
            json.dump({"VERIFY_MAX_N": 7, "IDENTITY_MAX_K": 3}, handle)
        try:
            config = self.load(SWEEP_CONFIG_FILE=handle.name, VERIFY_MAX_N="9")
        finally:
            os.unlink(handle.name)
        self.assertEqual(config["VERIFY_MAX_N"], 7)
        self.assertEqual(config["IDENTITY_MAX_K"], 3)

    @patch('app.config.logger')
    def test_missing_sweep_file(self, mock_logger, _):
        config = self.load(SWEEP_CONFIG_FILE="no-such-sweep.json")
        self.assertEqual(config["VERIFY_MAX_N"], 10)
        mock_logger.warning.assert_called_once_with(
            "Sweep config file 'no-such-sweep.json' not found, keeping environment defaults"
        )

    def test_overrides_win(self, _):
        config = self.load({"ORACLE_MAX_N": 6}, ORACLE_MAX_N="9")
        self.assertEqual(config["ORACLE_MAX_N"], 6)


class TestCreateApp(unittest.TestCase):

    def test_registers_commands(self):
        app = create_app({"ORACLE_MAX_N": 8})
        self.assertEqual(app.config["ORACLE_MAX_N"], 8)
        self.assertIn("descents", app.blueprints)


class TestLogLevel(unittest.TestCase):

    def tearDown(self):
        with patch.dict(os.environ, {"LOG_LEVEL": "INFO"}):
            setup_logging()

    def test_level_from_environment(self):
        with patch.dict(os.environ, {"LOG_LEVEL": "warning"}):
            setup_logging()
        self.assertEqual(logging.getLogger('app').level, logging.WARNING)
        self.assertEqual(logging.getLogger('app.services.oracle').level, logging.DEBUG)

    @patch('app.logging_config.logging.warning')
    def test_invalid_level_falls_back(self, mock_warning):
        with patch.dict(os.environ, {"LOG_LEVEL": "chatty"}):
            setup_logging()
        mock_warning.assert_called_once_with("Invalid LOG_LEVEL 'CHATTY', using INFO")
        self.assertEqual(logging.getLogger().level, logging.INFO)

    @patch('app.logging_config.logging.warning')
    def test_non_level_attribute_is_rejected(self, mock_warning):
        """Test that names on the logging module that are not levels fall back too."""
        self.assertIsNone(parse_level("BASIC_FORMAT"))
        self.assertEqual(parse_level("warn"), logging.WARNING)
        with patch.dict(os.environ, {"LOG_LEVEL": "BASIC_FORMAT"}):
            setup_logging()
        mock_warning.assert_called_once_with("Invalid LOG_LEVEL 'BASIC_FORMAT', using INFO")
        self.assertEqual(logging.getLogger('app').level, logging.INFO)

    def test_log_file_from_environment(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "nested", "run.log")
            with patch.dict(os.environ, {"LOG_FILE": path, "LOG_LEVEL": "INFO"}):
                setup_logging()
            logging.getLogger('app.services.oracle').debug("trace line")
            with open(path) as handle:
                self.assertIn("trace line", handle.read())

    def test_file_handler_records_worker_process(self):
        config = build_logging_config("x.log")
        self.assertEqual(config['handlers']['file']['filename'], "x.log")
        self.assertIn('%(processName)s', config['formatters']['detailed']['format'])
        self.assertFalse(config['loggers']['app']['propagate'])


if __name__ == '__main__':
    unittest.main()
