from logging import getLogger, StreamHandler, Formatter, CRITICAL
from sys import stdout, stderr
from termcolor import colored


def build_logger(name, stream, prefix="", color=None, attrs=["bold"]):
    logger = getLogger(name)
    logger.setLevel(CRITICAL)
    handler = StreamHandler(stream)
    formatter = Formatter(colored(prefix, attrs=attrs) + colored('%(message)s', color=color, attrs=attrs))
    handler.setFormatter(formatter)
    logger.addHandler(handler)
    return logger


_progress_logger = build_logger("cvfaithful.progress", stdout, prefix="> ", color="yellow")
_detail_logger = build_logger("cvfaithful.detail", stdout, prefix="... ", color="cyan", attrs=[])
_warn_logger = build_logger("cvfaithful.warn", stderr, prefix="! ", color="red")


def set_log_level(level):
    _progress_logger.setLevel(level)
    _detail_logger.setLevel(level)
    _warn_logger.setLevel(level)


def log_progress(text):
    _progress_logger.info(text)


def log_detail(text):
    _detail_logger.debug(text)


def log_warning(text):
    _warn_logger.warning(text)
