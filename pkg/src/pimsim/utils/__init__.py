""" Utils for pimsim """

from pimsim.utils.formatting import format_percent, format_size
from pimsim.utils.logger import get_logger, setup_logging

__all__ = ["format_percent", "format_size", "get_logger", "setup_logging"]
