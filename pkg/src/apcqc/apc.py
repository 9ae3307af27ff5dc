"""Character sums and the APC distance of a logic function.

For f over F_p^n and a pair (a, b) the character sum is

    S_f(a, b) = sum_x zeta^(f(x - a) + b.x - f(x))

and the APC distance is the least ws(a, b) over (a, b) != (0, 0) with
S_f(a, b) != 0. The zero pair always gives p^n and is excluded.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .cyclotomic import CycInt
from .ffvec import DimensionError, FpVector, dot
from .logicfn import FpFunction
from .shells import first_hit, shell_pairs

UNATTAINED = "unattained"


@dataclass(frozen=True)
class ApcResult:
    distance: int | str
    a: FpVector | None = None
    b: FpVector | None = None
    value: CycInt | None = None

    @property
    def attained(self) -> bool:
        return self.distance != UNATTAINED

    def to_json(self) -> dict:
        out: dict = {"distance": self.distance}
        if self.attained:
            out["witness"] = {"a": str(self.a), "b": str(self.b), "char_sum": self.value.to_json()}
        return out


def _match(f: FpFunction, v: FpVector) -> None:
    if v.p != f.p or v.n != f.n:
        raise DimensionError(f"vector over (p={v.p}, n={v.n}) for function over (p={f.p}, n={f.n})")


def char_sum(f: FpFunction, a: FpVector, b: FpVector) -> CycInt:
    _match(f, a)
    _match(f, b)
    # kernel sums zeta^(f(x-a) + b.(x-a) - f(x)); b.x differs by the constant b.a
    counts = kernels.char_counts(f.table, f.table, np.asarray(a.coords), np.asarray(b.coords), f.p, f.n)
    shift = dot(a, b)
    p = f.p
    return CycInt(p, tuple(int(counts[(k - shift) % p]) for k in range(p)))


def apc_distance(f: FpFunction, workers: int | None = None) -> ApcResult:
    p, n = f.p, f.n
    t = f.table
    N = t.size

    def search(A, B):
        return kernels.first_nonvanishing(t, t, A, B, p, n)

    for w in range(1, n + 1):
        A, B = shell_pairs(p, n, w)
        hit = first_hit(search, A, B, N, workers)
        if hit >= 0:
            a = FpVector(p, tuple(int(v) for v in A[hit]))
            b = FpVector(p, tuple(int(v) for v in B[hit]))
            return ApcResult(w, a, b, char_sum(f, a, b))
    return ApcResult(UNATTAINED)
