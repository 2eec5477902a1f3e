"""Vectors over GF(2) used as set-coloring labels.

A label over a ground set of n colors {x_1, ..., x_n} is a nonempty
subset, which we store as an n-bit integer: bit i-1 is the indicator of
color x_i, so x_1 sits in the least significant bit.  Symmetric
difference of subsets is then plain XOR of the integers.  The zero
vector corresponds to the empty set and is deliberately not
representable as a ColorVector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError

# Labels live in F_2^n.  Search and verification cost grows with 2^n,
# and 30 bits keeps every bitmask comfortably inside a machine word.
MAX_DIMENSION = 30


def check_dimension(n: int) -> int:
    """Validate a ground-set size and return it unchanged."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError(f"dimension must be an integer, got {n!r}")
    if n < 1 or n > MAX_DIMENSION:
        raise InputError(f"dimension must be in 1..{MAX_DIMENSION}, got {n}")
    return n


@dataclass(frozen=True, slots=True)
class ColorVector:
    """A nonempty subset of n colors, packed into the integer `bits`."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        check_dimension(self.n)
        if not isinstance(self.bits, int) or isinstance(self.bits, bool):
            raise InputError(f"bits must be an integer, got {self.bits!r}")
        if self.bits <= 0 or self.bits >= 1 << self.n:
            raise InputError(
                f"bits must be in 1..{(1 << self.n) - 1} for dimension {self.n}, "
                f"got {self.bits}"
            )

    def __lt__(self, other: "ColorVector") -> bool:
        if self.n != other.n:
            raise InputError("cannot order vectors of different dimensions")
        return self.bits < other.bits

    def hex(self) -> str:
        """Lowercase hex without prefix or leading zeros, e.g. 0b101 -> '5'."""
        return format(self.bits, "x")

    @classmethod
    def from_hex(cls, text: str, n: int) -> "ColorVector":
        try:
            bits = int(text, 16)
        except ValueError:
            raise InputError(f"not a hex label: {text!r}") from None
        return cls(bits, n)


def xor_add(a: ColorVector, b: ColorVector) -> ColorVector | None:
    """Symmetric difference of two labels, or None when it is empty.

    The empty set is not a valid label, so a + a has no representation
    and the caller must handle the None.
    """
    if a.n != b.n:
        raise InputError("cannot add vectors of different dimensions")
    bits = a.bits ^ b.bits
    if bits == 0:
        return None
    return ColorVector(bits, a.n)


def subset_to_vector(indices: Iterable[int], n: int) -> ColorVector:
    """Pack a nonempty set of color indices from 1..n into a vector."""
    check_dimension(n)
    bits = 0
    for i in indices:
        if not isinstance(i, int) or isinstance(i, bool) or i < 1 or i > n:
            raise InputError(f"color index must be in 1..{n}, got {i!r}")
        bits |= 1 << (i - 1)
    if bits == 0:
        raise InputError("empty subsets have no vector representation")
    return ColorVector(bits, n)


def vector_to_subset(v: ColorVector) -> frozenset[int]:
    """Unpack a vector into the set of color indices it contains."""
    return frozenset(i + 1 for i in range(v.n) if v.bits >> i & 1)
