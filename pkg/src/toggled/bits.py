"""Fixed-length bit vectors: the shared currency for configurations and press-sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class BitVector:
    """Immutable length-``n`` bit vector.

    Index 0 is the leftmost character of the string form and the least
    significant bit of ``mask``.
    """

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative length {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} does not fit in {self.n} bits")

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a string over {0,1}; character i becomes bit i."""
        mask = 0
        for i, ch in enumerate(text):
            if ch == "1":
                mask |= 1 << i
            elif ch != "0":
                raise ValueError(f"bit string may contain only 0/1, got {ch!r} at index {i}")
        return cls(len(text), mask)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "BitVector":
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} out of range for length {n}")
            mask |= 1 << i
        return cls(n, mask)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ValueError(f"index {i} out of range for length {self.n}")
        return (self.mask >> i) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return BitVector(self.n, self.mask ^ other.mask)

    def __invert__(self) -> "BitVector":
        return BitVector(self.n, self.mask ^ ((1 << self.n) - 1))

    def __len__(self) -> int:
        return self.n

    def __bool__(self) -> bool:
        return self.mask != 0

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> list[int]:
        return [i for i in range(self.n) if (self.mask >> i) & 1]

    def to_string(self) -> str:
        return "".join("1" if (self.mask >> i) & 1 else "0" for i in range(self.n))

    def braces(self) -> str:
        """Render as sorted indices inside braces, e.g. ``{0,3}``."""
        return "{" + ",".join(str(i) for i in self.indices()) + "}"

    def sort_key(self) -> tuple[int, int]:
        """Weight first, then mask order (index 0 least significant); a total order."""
        return (self.weight, self.mask)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"BitVector({self.to_string()!r})"
