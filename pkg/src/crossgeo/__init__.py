"""Non-orientable spanning-surface invariants of knots."""

from __future__ import annotations

__version__ = "0.1.0"
