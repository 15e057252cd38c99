"""Switch for expensive self-checks.

Enabled by ``DICHROMATIC_DEBUG=1`` or the :func:`checks` context manager.
When on, recursive colorings re-verify class membership at every level and
structural facts are asserted as they are used.
"""
import os
from contextlib import contextmanager

_enabled = os.environ.get("DICHROMATIC_DEBUG", "") not in ("", "0")


def enabled() -> bool:
    return _enabled


@contextmanager
def checks(on: bool = True):
    global _enabled
    previous = _enabled
    _enabled = on
    try:
        yield
    finally:
        _enabled = previous
