"""Exact Knill-Laflamme verification of logic-state codes.

States are kept as phase tables: e(x) in Z_p with the unnormalized state
sum_x zeta^e(x) |x>. The error E(a, b) = X(a) Z(b) sends e to
y -> e(y - a) + b.(y - a), so every overlap <s1| E |s2> is an exact
character sum. Normalization p^(-n/2) is left implicit: inner products here
are p^n times the physical ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .codec import CodeSpec
from .cyclotomic import CycInt
from .ffvec import DimensionError, FpVector
from .logicfn import FpFunction, add_linear, digit_matrix, place_values
from .shells import first_hit, shell_pairs


@dataclass(frozen=True, eq=False)
class PhaseState:
    p: int
    n: int
    exponents: np.ndarray

    def __post_init__(self):
        e = np.array(self.exponents, dtype=np.int64).reshape(-1) % self.p
        if e.size != self.p**self.n:
            raise ValueError(f"expected {self.p**self.n} exponents, got {e.size}")
        e.setflags(write=False)
        object.__setattr__(self, "exponents", e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseState):
            return NotImplemented
        return self.p == other.p and self.n == other.n and np.array_equal(self.exponents, other.exponents)

    def equal_up_to_phase(self, other: PhaseState) -> bool:
        diff = (self.exponents - other.exponents) % self.p
        return bool((diff == diff[0]).all())

    def _match(self, v: FpVector) -> None:
        if v.p != self.p or v.n != self.n:
            raise DimensionError(f"vector over (p={v.p}, n={v.n}) for state over (p={self.p}, n={self.n})")


def build_state(f: FpFunction, beta: FpVector) -> PhaseState:
    g = add_linear(f, beta)
    return PhaseState(f.p, f.n, g.table)


def apply_error(s: PhaseState, a: FpVector, b: FpVector) -> PhaseState:
    s._match(a)
    s._match(b)
    p, n = s.p, s.n
    Y = digit_matrix(p, n)
    src = ((Y - np.asarray(a.coords)) % p) @ place_values(p, n)
    lin = ((Y - np.asarray(a.coords)) @ np.asarray(b.coords)) % p
    return PhaseState(p, n, s.exponents[src] + lin)


def inner(s1: PhaseState, s2: PhaseState) -> CycInt:
    """sum_x zeta^(e2(x) - e1(x)), i.e. <s1|s2> scaled by p^n."""
    if (s1.p, s1.n) != (s2.p, s2.n):
        raise DimensionError("states over different (p, n)")
    counts = np.bincount((s2.exponents - s1.exponents) % s1.p, minlength=s1.p)
    return CycInt.from_counts(s1.p, counts)


def overlap(s1: PhaseState, s2: PhaseState, a: FpVector, b: FpVector) -> CycInt:
    """<s1| E(a, b) |s2> scaled by p^n."""
    s1._match(a)
    s1._match(b)
    counts = kernels.char_counts(s1.exponents, s2.exponents, np.asarray(a.coords), np.asarray(b.coords), s1.p, s1.n)
    return CycInt.from_counts(s1.p, counts)


@dataclass(frozen=True)
class KLWitness:
    a: FpVector
    b: FpVector
    i: int
    j: int
    kind: str  # "overlap" (K = 1), "offdiag" or "diag"
    value: CycInt

    @property
    def weight(self) -> int:
        return sum(1 for x, y in zip(self.a.coords, self.b.coords) if x or y)

    def to_json(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "weight": self.weight,
            "i": self.i,
            "j": self.j,
            "kind": self.kind,
            "value": self.value.to_json(),
        }


@dataclass(frozen=True)
class KLResult:
    ok: bool
    witness: KLWitness | None = None


def _states(code: CodeSpec) -> list[PhaseState]:
    return [build_state(code.f, beta) for beta in code.betas]


def first_failure(code: CodeSpec, max_weight: int, workers: int | None = None) -> KLWitness | None:
    """Smallest-weight, then lexicographically first, error of weight
    <= max_weight that breaks the code conditions; None if there is none.

    K = 1 uses the pure-code test: any nonzero <psi|E|psi> is a failure.
    K >= 2 uses Knill-Laflamme: off-diagonal entries must vanish and the
    diagonal must be constant.
    """
    p, n = code.p, code.n
    states = _states(code)
    E = np.ascontiguousarray(np.stack([s.exponents for s in states]))
    N = E.shape[1]
    K = E.shape[0]
    if K == 1:
        t = E[0]

        def search(A, B):
            return kernels.first_nonvanishing(t, t, A, B, p, n)

    else:

        def search(A, B):
            return kernels.first_kl_failure(E, A, B, p, n)[0]

    for w in range(1, min(max_weight, n) + 1):
        A, B = shell_pairs(p, n, w)
        hit = first_hit(search, A, B, N * K * K, workers)
        if hit < 0:
            continue
        a = FpVector(p, tuple(int(v) for v in A[hit]))
        b = FpVector(p, tuple(int(v) for v in B[hit]))
        if K == 1:
            return KLWitness(a, b, 0, 0, "overlap", overlap(states[0], states[0], a, b))
        _, i, j = kernels.first_kl_failure(E, A[hit:hit + 1], B[hit:hit + 1], p, n)
        value = overlap(states[i], states[j], a, b)
        if i != j:
            return KLWitness(a, b, i, j, "offdiag", value)
        return KLWitness(a, b, i, j, "diag", value - overlap(states[0], states[0], a, b))
    return None


def kl_check(code: CodeSpec, t: int, workers: int | None = None) -> KLResult:
    if t < 0:
        raise ValueError("t must be non-negative")
    w = first_failure(code, t, workers)
    return KLResult(w is None, w)


def kl_distance(code: CodeSpec, workers: int | None = None) -> int:
    """Largest d with kl_check(code, d - 1) true; n + 1 if nothing fails."""
    return kl_distance_witness(code, workers)[0]


def kl_distance_witness(code: CodeSpec, workers: int | None = None) -> tuple[int, KLWitness | None]:
    w = first_failure(code, code.n, workers)
    if w is None:
        return code.n + 1, None
    return w.weight, w
