"""Vertex sets as Python int bitmasks.

Bit i set means vertex i is a member.  Python ints are arbitrary width, so
the same representation serves any vertex count; iteration is always in
increasing index order.
"""

from collections.abc import Iterable, Iterator


def vset(members: Iterable[int]) -> int:
    """Build a bitmask from an iterable of vertex indices."""
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    """Index of the lowest set bit (mask must be nonzero)."""
    return (mask & -mask).bit_length() - 1
