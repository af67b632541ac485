"""Shared exception base for the toolkit.

Every data-level failure raised by this package derives from
:class:`LodBridgeError`, so callers (notably the CLI) can map any of them
to a single "data error" exit code.
"""


class LodBridgeError(Exception):
    """Base class for all toolkit errors."""
