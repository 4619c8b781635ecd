"""Truncated path signatures, log signatures and signature features."""

from ._core import cumsum_bp, features, leadlag, logsig, sig

__all__ = ["sig", "logsig", "leadlag", "cumsum_bp", "features"]
__version__ = "0.1.0"
