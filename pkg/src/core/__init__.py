# Core infrastructure modules
from .config import Config
from .logger import get_logger, configure_logging
from .exceptions import (
    RSKLabError,
    ValidationError,
    DomainError,
    ResourceRefusal,
    VerificationFailure,
    ConfigError,
)

__all__ = [
    "Config",
    "get_logger",
    "configure_logging",
    "RSKLabError",
    "ValidationError",
    "DomainError",
    "ResourceRefusal",
    "VerificationFailure",
    "ConfigError",
]
