"""Closed forms for the maximal region count and the arrangement sizes
realised by the extremal constructions.

All values are exact integers computed with integer arithmetic only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class InvalidN(ValueError):
    """Cycle length below 3 has no embedding with enclosed regions."""


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidN(f"n must be an integer, got {n!r}")
    if n < 3:
        raise InvalidN(f"n must be at least 3, got {n}")


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class ParityCase:
    """A cycle length together with its parity tag."""

    n: int
    parity: Parity

    def __post_init__(self) -> None:
        _check_n(self.n)
        expected = Parity.EVEN if self.n % 2 == 0 else Parity.ODD
        if self.parity is not expected:
            raise ValueError(f"parity tag {self.parity} does not match n={self.n}")

    @classmethod
    def of(cls, n: int) -> "ParityCase":
        _check_n(n)
        return cls(n, Parity.EVEN if n % 2 == 0 else Parity.ODD)


def f_max(n: int) -> int:
    """Largest number of bounded regions a straight-line embedding of an
    n-cycle can enclose.

    n even: n^2/2 - 2n + 2.  n odd: n^2/2 - 3n/2 + 1 = (n-1)(n-2)/2.
    """
    _check_n(n)
    if n % 2 == 0:
        return n * n // 2 - 2 * n + 2
    return (n - 1) * (n - 2) // 2


def predicted_vertices(n: int) -> int:
    """Arrangement vertex count (corners plus crossings) of the maximal
    construction for cycle length n."""
    _check_n(n)
    if n % 2 == 0:
        return ((n - 2) ** 2 + 2 * (n - 1)) // 2
    return n * (n - 1) // 2


def predicted_edges(n: int) -> int:
    """Arrangement edge count of the maximal construction for cycle
    length n."""
    _check_n(n)
    if n % 2 == 0:
        return (n - 2) * (n - 3) + 2 * (n - 2)
    return n * (n - 2)
