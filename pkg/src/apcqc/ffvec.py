"""Vectors over the prime field F_p and the two weights used throughout.

Coordinates are stored 0-based in ``FpVector.coords``; ``FpVector.coord(i)``
gives the 1-based view (x_1 .. x_n). The text form is comma-separated
residues in coordinate order, e.g. ``"1,0,2"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Operands disagree on p or n."""


@lru_cache(maxsize=256)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    return p


@dataclass(frozen=True)
class FpVector:
    p: int
    coords: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        coords = tuple(int(c) for c in self.coords)
        if not coords:
            raise ValueError("vector length must be at least 1")
        for c in coords:
            if not 0 <= c < self.p:
                raise ValueError(f"coordinate {c} outside [0, {self.p - 1}]")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, p: int, values: Iterable[int]) -> FpVector:
        """Build a vector reducing arbitrary integers mod p."""
        return cls(p, tuple(int(v) % p for v in values))

    @classmethod
    def zero(cls, p: int, n: int) -> FpVector:
        return cls(p, (0,) * n)

    @classmethod
    def unit(cls, p: int, n: int, i: int) -> FpVector:
        """The 1-based unit vector e_i."""
        if not 1 <= i <= n:
            raise IndexError(f"unit index {i} outside 1..{n}")
        return cls(p, tuple(1 if j == i - 1 else 0 for j in range(n)))

    @classmethod
    def parse(cls, p: int, text: str) -> FpVector:
        try:
            values = [int(t) for t in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed vector {text!r}") from None
        return cls(p, tuple(values))

    @property
    def n(self) -> int:
        return len(self.coords)

    def coord(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"coordinate index {i} outside 1..{self.n}")
        return self.coords[i - 1]

    def support(self) -> frozenset[int]:
        """1-based positions of nonzero coordinates."""
        return frozenset(i + 1 for i, c in enumerate(self.coords) if c)

    def weight(self) -> int:
        return sum(1 for c in self.coords if c)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other: FpVector) -> None:
        if not isinstance(other, FpVector):
            raise TypeError(f"expected FpVector, got {type(other).__name__}")
        if other.p != self.p or other.n != self.n:
            raise DimensionError(
                f"vectors over (p={self.p}, n={self.n}) and (p={other.p}, n={other.n})"
            )

    def __add__(self, other: FpVector) -> FpVector:
        self._check(other)
        p = self.p
        return FpVector(p, tuple((x + y) % p for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: FpVector) -> FpVector:
        self._check(other)
        p = self.p
        return FpVector(p, tuple((x - y) % p for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> FpVector:
        return FpVector(self.p, tuple((-x) % self.p for x in self.coords))

    def __mul__(self, scalar: int) -> FpVector:
        if not isinstance(scalar, int):
            return NotImplemented
        return FpVector(self.p, tuple((scalar * x) % self.p for x in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


def _pair(a: FpVector, b: FpVector) -> None:
    a._check(b)


def ws(a: FpVector, b: FpVector) -> int:
    """Symmetrical weight: positions where (a_i, b_i) != (0, 0)."""
    _pair(a, b)
    return sum(1 for x, y in zip(a.coords, b.coords) if x or y)


def wh(a: FpVector, b: FpVector) -> int:
    """Hamming distance."""
    _pair(a, b)
    return sum(1 for x, y in zip(a.coords, b.coords) if x != y)


def dot(a: FpVector, b: FpVector) -> int:
    _pair(a, b)
    return sum(x * y for x, y in zip(a.coords, b.coords)) % a.p


def all_vectors(p: int, n: int) -> Iterable[FpVector]:
    """Every vector of F_p^n in big-endian index order."""
    from itertools import product

    for t in product(range(p), repeat=n):
        yield FpVector(p, t)


def as_vectors(p: int, rows: Sequence[Sequence[int]]) -> list[FpVector]:
    return [FpVector(p, tuple(r)) for r in rows]
