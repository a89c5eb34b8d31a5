"""Resource caps for the enumeration and search kernels.

Every potentially exponential routine takes its cap from here by default;
callers may pass a larger cap explicitly when they know what they are doing.
Exceeding a cap raises :class:`CapExceeded` rather than silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass


class CapExceeded(ValueError):
    """A requested computation exceeds its configured resource cap."""


@dataclass(frozen=True)
class EnumerationCaps:
    # 2-regular multigraph enumeration (determinantal-term classes).
    determinantal_vertices: int = 10
    # general even-regular multigraph enumeration
    regular_vertices: int = 6
    regular_valency: int = 6
    # power-series order for the term-count generating function
    series_order: int = 30
    # bitmask search for zero blocks of a symmetric matrix
    zero_block_vertices: int = 16
    # brute-force one-parameter-subgroup search
    oracle_vertices: int = 6
    oracle_weight: int = 3


DEFAULT_CAPS = EnumerationCaps()
