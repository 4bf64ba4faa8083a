import sys
from typing import Optional
from loguru import logger
from core.config import settings

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level} | {message}"

def setup_logging(level: Optional[str] = None):
    # stdout carries the JSON report
    level = level or settings.LOG_LEVEL
    logger.remove()
    logger.add(
        sys.stderr,
        format=LOG_FORMAT,
        level=level,
        backtrace=True,
        diagnose=False,
    )
    if settings.LOG_FILE:
        logger.add(
            settings.LOG_FILE,
            rotation=settings.LOG_ROTATION,
            retention=settings.LOG_RETENTION,
            format=LOG_FORMAT,
            level=level,
            backtrace=True,
            diagnose=False,
        )
    return logger
