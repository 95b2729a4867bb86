"""
Setup the CLI logger

Console output always, plus a rotating, timestamped log file per run
"""

import os
import logging
from logging.handlers import RotatingFileHandler

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.utils.misc import timestamp

DEFAULT_LOG_FILENAME = config["logging"]["default_log_filename"]
DEFAULT_LOG_LEVEL = config["logging"]["default_log_level"]
DEFAULT_LOG_DIR = config["logging"]["default_log_dir"]

MB_50 = 52428800
MAX_BYTES = MB_50

DEFAULT_FORMAT = "%(asctime)s - %(name)s" " -  %(levelname)s - %(message)s"
DEFAULT_FORMATTER = logging.Formatter(DEFAULT_FORMAT)

# Marks handlers installed here so repeated init_logger calls don't stack them
_HANDLER_TAG = "_gelfand_cetlin_handler"


def _remove_own_handlers(root: logging.Logger):
    for handler in list(root.handlers):
        if getattr(handler, _HANDLER_TAG, False):
            root.removeHandler(handler)
            handler.close()


def init_logger(log_level=None, log_dir=None, write_logs=None):
    """
    Configure and create the logger

    :param log_level: a string specifying what level of log messages to record
    in the log file. Values are not case sensitive. The list of acceptable
    values are the names of Python's standard lib logging levels.
    (critical, error, warning, info, debug, notset)
    :type log_level: one of logging modules log levels
    :param write_logs: whether to also write a log file. Defaults to the
    GC_WRITE_LOGS setting
    :returns: path to the log file or None
    """
    log_level = log_level or DEFAULT_LOG_LEVEL
    log_dir = log_dir or DEFAULT_LOG_DIR
    if write_logs is None:
        write_logs = config["logging"]["write_logs"]

    if isinstance(log_level, str):
        level_name = log_level
        log_level = logging._nameToLevel.get(level_name.upper())
        if log_level is None:
            raise ValueError(f"❌ Unknown log level: {level_name}")

    root = logging.getLogger()
    _remove_own_handlers(root)

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(DEFAULT_FORMATTER)
    setattr(console_handler, _HANDLER_TAG, True)

    root.setLevel(log_level)
    root.addHandler(console_handler)

    log_filepath = None
    if write_logs:
        os.makedirs(log_dir, exist_ok=True)

        # Create a new log file named with a timestamp
        filename = f"{DEFAULT_LOG_FILENAME}-{timestamp()}.log"
        log_filepath = os.path.join(log_dir, filename)

        file_handler = RotatingFileHandler(
            log_filepath, mode="w", maxBytes=MAX_BYTES
        )
        file_handler.setFormatter(DEFAULT_FORMATTER)
        setattr(file_handler, _HANDLER_TAG, True)

        root.addHandler(file_handler)

    return log_filepath
