"""Support patterns: which of z_i, w_i are nonzero at a point of C^{2n}."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterator


class Support(enum.Enum):
    NONE = "."
    Z = "z"
    W = "w"
    BOTH = "b"

    @property
    def has_z(self) -> bool:
        return self in (Support.Z, Support.BOTH)

    @property
    def has_w(self) -> bool:
        return self in (Support.W, Support.BOTH)


_ORDER = (Support.NONE, Support.Z, Support.W, Support.BOTH)


@dataclass(frozen=True)
class SupportPattern:
    states: tuple[Support, ...]

    @classmethod
    def parse(cls, text: str) -> SupportPattern:
        """``"zw.b"`` means z_1 only, w_2 only, nothing at 3, both at 4."""
        return cls(tuple(Support(c) for c in text))

    @classmethod
    def origin(cls, n: int) -> SupportPattern:
        return cls((Support.NONE,) * n)

    @classmethod
    def from_sets(cls, n: int, z=(), w=()) -> SupportPattern:
        """Build from 0-based index sets of nonzero z's and w's."""
        z, w = set(z), set(w)
        states = []
        for i in range(n):
            states.append(
                Support.BOTH if i in z and i in w
                else Support.Z if i in z
                else Support.W if i in w
                else Support.NONE
            )
        return cls(tuple(states))

    @property
    def n(self) -> int:
        return len(self.states)

    @property
    def active(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.states) if s is not Support.NONE)

    @property
    def z_active(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.states) if s.has_z)

    @property
    def w_active(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.states) if s.has_w)

    @property
    def both(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.states) if s is Support.BOTH)

    @property
    def singles(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.states) if s in (Support.Z, Support.W))

    def __str__(self) -> str:
        return "".join(s.value for s in self.states)


def all_patterns(n: int) -> Iterator[SupportPattern]:
    """All 4^n patterns in lexicographic order (. < z < w < b)."""
    for states in product(_ORDER, repeat=n):
        yield SupportPattern(states)
