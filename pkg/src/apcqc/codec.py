"""Logic-state code construction and its parameter theory.

A code is fixed by a function f with APC distance d' >= 2 and distinct shift
vectors beta_1..beta_K; its states are sum_x zeta^(f(x) + beta_i.x) |x>.
This module holds the distance formula for such codes, the beta families
with K = p^k and K = p^(k-2)(1 + (n-k+2)(p-1)), the bound on K, and the
quantum-Singleton / MDS predicates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .ffvec import DimensionError, FpVector, check_prime
from .logicfn import FpFunction
from .shells import shell_pairs

BEYOND_THM2 = "beyond-Thm-2-range"


class DomainError(ValueError):
    """Arguments outside the range where a formula is defined."""


@dataclass(frozen=True, eq=False)
class CodeSpec:
    p: int
    n: int
    f: FpFunction
    betas: tuple[FpVector, ...]
    d_prime: int
    d_claimed: int
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        betas = tuple(self.betas)
        object.__setattr__(self, "betas", betas)
        if not betas:
            raise ValueError("a code needs at least one beta vector")
        if self.f.p != self.p or self.f.n != self.n:
            raise DimensionError("function does not match the code's (p, n)")
        for b in betas:
            if b.p != self.p or b.n != self.n:
                raise DimensionError(f"beta {b} does not match (p={self.p}, n={self.n})")
        if len(set(betas)) != len(betas):
            raise ValueError("beta vectors must be pairwise distinct")

    @property
    def K(self) -> int:
        return len(self.betas)

    def hypothesis_issues(self) -> list[str]:
        """Ways this spec falls outside the construction's assumptions."""
        issues = []
        if self.d_prime < 2:
            issues.append(f"d_prime = {self.d_prime} < 2")
        if self.d_claimed > self.d_prime:
            issues.append(f"d_claimed = {self.d_claimed} exceeds d_prime = {self.d_prime}")
        return issues

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "f": self.f.to_json(),
            "betas": [list(b.coords) for b in self.betas],
            "d_prime": self.d_prime,
            "d_claimed": self.d_claimed,
            "K": self.K,
        }

    @classmethod
    def from_json(cls, obj: dict) -> CodeSpec:
        try:
            p, n = int(obj["p"]), int(obj["n"])
            f = FpFunction.from_json(obj["f"])
            betas = tuple(FpVector(p, tuple(int(c) for c in b)) for b in obj["betas"])
            spec = cls(p, n, f, betas, int(obj["d_prime"]), int(obj["d_claimed"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed code spec: {exc}") from None
        if "K" in obj and int(obj["K"]) != spec.K:
            raise ValueError(f"K = {obj['K']} but {spec.K} betas given")
        return spec


def _beta_array(betas, p: int, n: int) -> np.ndarray:
    for b in betas:
        if b.p != p or b.n != n:
            raise DimensionError(f"beta {b} does not match (p={p}, n={n})")
    return np.array([b.coords for b in betas], dtype=np.int64).reshape(len(betas), n)


def lemma1_distance(betas, d_prime: int, p: int, n: int) -> int:
    """Least ws(u, v) over (u, v) != 0 such that some i <= j has
    ws(u, v - beta_i + beta_j) >= d_prime.

    Returns n + 1 when no (u, v) qualifies (only possible for d_prime = n + 1).
    """
    check_prime(p)
    betas = list(betas)
    if not betas:
        raise ValueError("betas must be nonempty")
    if len(set(betas)) != len(betas):
        raise ValueError("betas must be pairwise distinct")
    if not 2 <= d_prime <= n + 1:
        raise DomainError(f"d_prime = {d_prime} outside 2..{n + 1}")
    Bm = _beta_array(betas, p, n)
    K = len(betas)
    iu, ju = np.triu_indices(K)
    deltas = np.unique((Bm[ju] - Bm[iu]) % p, axis=0)
    for w in range(1, n + 1):
        U, V = shell_pairs(p, n, w)
        u_nz = U != 0
        for delta in deltas:
            weights = (u_nz | (((V + delta) % p) != 0)).sum(axis=1)
            if (weights >= d_prime).any():
                return w
    return n + 1


def build_betas_large_p(n: int, k: int, p: int) -> list[FpVector]:
    """p^k vectors: first k coordinates run over F_p^k, the rest are zero.

    p >= n-k+1 is required only for k >= 2; for k <= 1 the family already
    has the largest allowed K (1 or p) for every p.
    """
    check_prime(p)
    if not 0 <= k <= n:
        raise DomainError(f"k = {k} outside 0..{n}")
    if k >= 2 and p < n - k + 1:
        raise DomainError(f"needs p >= n-k+1 = {n - k + 1}, got p = {p}")
    tail = (0,) * (n - k)
    return [FpVector(p, head + tail) for head in product(range(p), repeat=k)]


def build_betas_small_p(n: int, k: int, p: int) -> list[FpVector]:
    """p^(k-2)(1 + (n-k+2)(p-1)) vectors.

    The first k-2 coordinates run over F_p^(k-2); of the remaining n-k+2
    positions at most one is nonzero.
    """
    check_prime(p)
    if not 2 <= k <= n:
        raise DomainError(f"k = {k} outside 2..{n}")
    if p >= n - k + 1:
        raise DomainError(f"needs p < n-k+1 = {n - k + 1}, got p = {p}")
    m = n - k + 2
    tails = [(0,) * m]
    for pos in range(m):
        for c in range(1, p):
            t = [0] * m
            t[pos] = c
            tails.append(tuple(t))
    return [FpVector(p, head + tail) for head in product(range(p), repeat=k - 2) for tail in tails]


def build_betas(n: int, k: int, p: int) -> tuple[str, list[FpVector]]:
    """Pick the family by comparing p with n-k+1; returns (branch, betas)."""
    if k >= 2 and p < n - k + 1:
        return "small-p", build_betas_small_p(n, k, p)
    return "large-p", build_betas_large_p(n, k, p)


def check_wh_constraint(betas, k: int) -> bool:
    """True iff every pair of betas is within Hamming distance k."""
    betas = list(betas)
    if len(betas) < 2:
        return True
    M = np.array([b.coords for b in betas], dtype=np.int64)
    varying = (M != M[0]).any(axis=0)
    if int(varying.sum()) <= k:
        return True
    M = M[:, varying]
    chunk = max(1, (1 << 22) // (M.shape[0] * M.shape[1]))
    for lo in range(0, M.shape[0], chunk):
        d = (M[lo:lo + chunk, None, :] != M[None, :, :]).sum(axis=2)
        if (d > k).any():
            return False
    return True


def max_K(n: int, p: int, d_prime: int, k: int, statement_form: bool = False) -> int:
    """Largest K a code of distance d' - k can have.

    ``statement_form=True`` uses p^(k-2) max(1 + n(p-1), p^2) as displayed in
    the theorem statement instead of the n-k+2 form its derivation reaches.
    """
    check_prime(p)
    if k < 0:
        raise DomainError(f"k = {k} must be non-negative")
    if k == 0:
        return 1
    if k == 1:
        return p
    if k > d_prime - 2:
        raise DomainError(f"k = {k} exceeds d_prime - 2 = {d_prime - 2}")
    spread = n if statement_form else n - k + 2
    return p ** (k - 2) * max(1 + spread * (p - 1), p * p)


def singleton_bound_K(n: int, d: int, p: int) -> int:
    """p^(n - 2d + 2), the quantum Singleton bound on K."""
    check_prime(p)
    if not 1 <= d <= n:
        raise DomainError(f"d = {d} outside 1..{n}")
    e = n - 2 * d + 2
    if e < 0:
        raise DomainError(f"n - 2d + 2 = {e} < 0: no code ((n={n}, K, d={d})) satisfies the bound")
    return p**e


def mds_saturates(n: int, K: int, d: int, p: int) -> bool:
    return K == singleton_bound_K(n, d, p)


@dataclass(frozen=True)
class Thm3Result:
    case: int
    holds: bool
    lhs: int
    rhs: int | None
    warning: str | None = None

    def to_json(self) -> dict:
        out = {"case": self.case, "holds": self.holds, "lhs": self.lhs, "rhs": self.rhs}
        if self.warning:
            out["warning"] = self.warning
        return out


def theorem3_predicate(n: int, p: int, d_prime: int, k: int) -> Thm3Result:
    """Evaluate the MDS condition for a code ((n, K, d' - k))_p.

    Cases: k = 0 (n even and d' = n/2 + 1); k = 1 (n(p-1) + 1 = p^(n-2d'+4));
    k >= 2 with p >= n-k+1 (2d' = n + k + 2); k >= 2 with p < n-k+1
    (p^(k-2)(1 + (n-k+2)(p-1)) = p^(n - 2(d'-k) + 2)). lhs/rhs carry the two
    sides that were compared; rhs is None where the right side is not an
    integer (negative exponent), in which case the condition is false.
    """
    check_prime(p)
    if k < 0 or k > d_prime:
        raise DomainError(f"k = {k} outside 0..d_prime = {d_prime}")
    if 2 * (d_prime - k) > n + 2:
        raise DomainError(f"hypothesis d' - k <= n/2 + 1 fails: d' - k = {d_prime - k}, n = {n}")
    warning = BEYOND_THM2 if k >= 2 and k > d_prime - 2 else None

    def power(e: int) -> int | None:
        return p**e if e >= 0 else None

    if k == 0:
        lhs, rhs = 2 * d_prime, n + 2
        return Thm3Result(1, n % 2 == 0 and lhs == rhs, lhs, rhs, warning)
    if k == 1:
        lhs, rhs = n * (p - 1) + 1, power(n - 2 * d_prime + 4)
        return Thm3Result(2, lhs == rhs, lhs, rhs, warning)
    if p >= n - k + 1:
        lhs, rhs = 2 * d_prime, n + k + 2
        return Thm3Result(3, lhs == rhs, lhs, rhs, warning)
    lhs = p ** (k - 2) * (1 + (n - k + 2) * (p - 1))
    rhs = power(n - 2 * (d_prime - k) + 2)
    return Thm3Result(4, lhs == rhs, lhs, rhs, warning)
