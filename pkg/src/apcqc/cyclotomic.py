"""Exact arithmetic in Z[zeta_p], zeta_p a primitive complex p-th root of unity.

An element is a coefficient vector (c_0, ..., c_{p-1}) meaning sum c_k zeta^k.
Because 1 + zeta + ... + zeta^{p-1} = 0 the representation is not unique:
two vectors denote the same number iff they differ by a constant vector.
The canonical form subtracts c_{p-1} from every entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .ffvec import check_prime


@dataclass(frozen=True, eq=False)
class CycInt:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.p:
            raise ValueError(f"expected {self.p} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_int(cls, p: int, value: int) -> CycInt:
        return cls(p, (int(value),) + (0,) * (p - 1))

    @classmethod
    def from_counts(cls, p: int, counts: Iterable[int]) -> CycInt:
        """Sum of roots of unity where counts[k] is the multiplicity of zeta^k."""
        return cls(p, tuple(int(c) for c in counts))

    def canonical(self) -> tuple[int, ...]:
        last = self.coeffs[-1]
        return tuple(c - last for c in self.coeffs)

    def is_zero(self) -> bool:
        first = self.coeffs[0]
        return all(c == first for c in self.coeffs)

    def rational_value(self) -> int | None:
        """The integer this element equals, or None if it is not in Z."""
        c = self.canonical()
        if self.p == 2:
            return c[0]
        # with c_{p-1} = 0 the remaining zeta^1..zeta^{p-2} are independent
        if any(c[1:]):
            return None
        return c[0]

    def _check(self, other: CycInt) -> None:
        if not isinstance(other, CycInt):
            raise TypeError(f"expected CycInt, got {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"mixing Z[zeta_{self.p}] and Z[zeta_{other.p}]")

    def _coerce(self, other) -> CycInt:
        if isinstance(other, int):
            return CycInt.from_int(self.p, other)
        self._check(other)
        return other

    def __add__(self, other) -> CycInt:
        other = self._coerce(other)
        return CycInt(self.p, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.p, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> CycInt:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CycInt:
        return self._coerce(other) - self

    def __mul__(self, other) -> CycInt:
        other = self._coerce(other)
        p = self.p
        out = [0] * p
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[(i + j) % p] += x * y
        return CycInt(p, tuple(out))

    __rmul__ = __mul__

    def conj(self) -> CycInt:
        p = self.p
        out = [0] * p
        for k, c in enumerate(self.coeffs):
            out[(-k) % p] = c
        return CycInt(p, tuple(out))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.p, self.canonical()))

    def __repr__(self) -> str:
        return f"CycInt(p={self.p}, {list(self.canonical())})"

    def to_json(self) -> list[int]:
        return list(self.canonical())

    @classmethod
    def from_json(cls, coeffs: list[int]) -> CycInt:
        return cls(len(coeffs), tuple(coeffs))


def root_power(p: int, k: int) -> CycInt:
    """zeta_p ** k."""
    check_prime(p)
    out = [0] * p
    out[k % p] = 1
    return CycInt(p, tuple(out))


def add(x: CycInt, y: CycInt) -> CycInt:
    return x + y


def mul(x: CycInt, y: CycInt) -> CycInt:
    return x * y


def conj(x: CycInt) -> CycInt:
    return x.conj()


def is_zero(x: CycInt) -> bool:
    return x.is_zero()
