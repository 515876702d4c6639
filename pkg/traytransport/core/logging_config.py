import logging
import os
import sys
from logging.config import dictConfig
from typing import Optional

from traytransport.core.config import settings


def configure_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """
    Configure logging for the command line.

    Logs go to stderr so that stdout only carries command output. When a log
    file is configured (argument or TRAYTRANSPORT_LOG_FILE), a rotating file
    handler is added.
    """
    level = (level or settings.LOG_LEVEL).upper()
    log_file = log_file or settings.LOG_FILE

    log_config = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S",
            },
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "stream": sys.stderr,
                "formatter": "default",
                "level": level,
            },
        },
        "loggers": {
            "traytransport": {
                "handlers": ["console"],
                "level": level,
                "propagate": False,
            },
        },
    }

    if log_file:
        # Create the log directory if it doesn't exist
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)

        log_config["handlers"]["file"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "filename": log_file,
            "maxBytes": 10485760,  # 10 MB
            "backupCount": 5,
            "formatter": "default",
            "level": level,
        }
        log_config["loggers"]["traytransport"]["handlers"].append("file")

    # Apply configuration
    dictConfig(log_config)

    logging.getLogger("traytransport").debug(
        f"Logging configured. Level: {level}, file: {log_file or 'none'}"
    )
