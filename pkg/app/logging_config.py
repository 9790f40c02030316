import logging
import logging.config
import os

DEFAULT_LOG_FILE = 'logs/kdescents.log'

# Loggers that always record everything to the file, whatever LOG_LEVEL says
TRACE_LOGGERS = ('app.services.oracle',)


def build_logging_config(log_file=DEFAULT_LOG_FILE):
    """dictConfig payload: stderr console at INFO, rotating file at DEBUG."""
    handler_names = ['console', 'file']
    loggers = {
        name: {'level': 'DEBUG', 'handlers': handler_names, 'propagate': False}
        for name in TRACE_LOGGERS
    }
    loggers['app'] = {'level': 'INFO', 'handlers': handler_names, 'propagate': False}
    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'standard': {
                'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
            },
            'detailed': {
                'format': '%(asctime)s - %(name)s - %(levelname)s - %(processName)s - '
                          '%(funcName)s:%(lineno)d - %(message)s'
            },
        },
        'handlers': {
            'console': {
                'class': 'logging.StreamHandler',
                'level': 'INFO',
                'formatter': 'standard',
                # stdout carries command results
                'stream': 'ext://sys.stderr',
            },
            'file': {
                'class': 'logging.handlers.RotatingFileHandler',
                'level': 'DEBUG',
                'formatter': 'detailed',
                'filename': log_file,
                'maxBytes': 10485760,  # 10MB
                'backupCount': 5,
            },
        },
        'loggers': loggers,
        'root': {
            'level': 'INFO',
            'handlers': handler_names,
        },
    }


def parse_level(name):
    """Numeric level for a standard level name, or None."""
    level = logging.getLevelName(name.upper())
    return level if isinstance(level, int) else None


def setup_logging(log_file=None):
    """Setup logging configuration; LOG_FILE and LOG_LEVEL come from the environment."""
    log_file = log_file or os.getenv('LOG_FILE') or DEFAULT_LOG_FILE
    directory = os.path.dirname(log_file)
    if directory:
        os.makedirs(directory, exist_ok=True)

    logging.config.dictConfig(build_logging_config(log_file))

    log_level = os.getenv('LOG_LEVEL', 'INFO').upper()
    numeric_level = parse_level(log_level)
    if numeric_level is None:
        logging.warning(f"Invalid LOG_LEVEL '{log_level}', using INFO")
        numeric_level = logging.INFO
    logging.getLogger().setLevel(numeric_level)
    logging.getLogger('app').setLevel(numeric_level)
    for name in TRACE_LOGGERS:
        logging.getLogger(name).setLevel(logging.DEBUG)
