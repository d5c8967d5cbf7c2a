import logging
import sys
import traceback as tb

ROOT_LOGGER = "schmidt_subspaces"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

_handler = None


def get_logger(module=None) -> logging.Logger:
    if not module:
        return logging.getLogger(ROOT_LOGGER)
    return logging.getLogger(f"{ROOT_LOGGER}.{module}")


def setup_logging(level=None):
    """
    Attaches a single stderr handler to the package logger.
    The level defaults to `log_level` from the config; developer_mode forces DEBUG.
    """
    global _handler
    from schmidt_subspaces.config import get_conf

    conf = get_conf()
    if level is None:
        level = "DEBUG" if conf.developer_mode else conf.log_level

    logger = get_logger()
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(_handler)
    else:
        _handler.setStream(sys.stderr)

    logger.setLevel(level)
    return logger


def log_error(title, exc=None, **context):
    from schmidt_subspaces.config import get_conf

    lines = [title]
    for key in sorted(context):
        lines.append(f"{key}: {context[key]}")
    if exc is not None:
        lines.append("".join(tb.format_exception(type(exc), exc, exc.__traceback__)))

    text = "\n".join(lines)
    get_logger().error(text)
    if get_conf().developer_mode:
        print(text, file=sys.stderr)

    return text
