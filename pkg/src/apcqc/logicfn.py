"""Logic functions F_p^n -> F_p held as full truth tables.

Ordering is big-endian in x_1: the entry for x sits at
idx(x) = sum_i x_i * p^(n-i), so x_1 is the most significant digit.
The text file format names this convention in its header::

    p=3 n=2 order=bigendian-x1
    0 0 0 0 1 2 0 2 1
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .ffvec import DimensionError, FpVector, check_prime

ORDER_TAG = "bigendian-x1"
MAX_TABLE = 1 << 24


class ParseError(ValueError):
    """Syntax error in a polynomial expression; ``pos`` is 0-based."""

    def __init__(self, message: str, pos: int, expr: str = ""):
        self.pos = pos
        self.expr = expr
        super().__init__(f"{message} at position {pos}")


class TableFormatError(ValueError):
    pass


@lru_cache(maxsize=64)
def digit_matrix(p: int, n: int) -> np.ndarray:
    """Row r holds the coordinates of the vector with index r (read-only)."""
    size = p**n
    if size > MAX_TABLE:
        raise ValueError(f"p^n = {size} is too large for a truth table")
    idx = np.arange(size, dtype=np.int64)
    out = np.empty((size, n), dtype=np.int64)
    for col in range(n - 1, -1, -1):
        out[:, col] = idx % p
        idx //= p
    out.setflags(write=False)
    return out


@lru_cache(maxsize=64)
def place_values(p: int, n: int) -> np.ndarray:
    w = np.array([p ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    w.setflags(write=False)
    return w


def index_of(x: FpVector) -> int:
    i = 0
    for c in x.coords:
        i = i * x.p + c
    return i


def vector_at(p: int, n: int, index: int) -> FpVector:
    if not 0 <= index < p**n:
        raise IndexError(f"index {index} outside [0, {p**n})")
    digits = []
    for _ in range(n):
        index, r = divmod(index, p)
        digits.append(r)
    return FpVector(p, tuple(reversed(digits)))


@dataclass(frozen=True, eq=False)
class FpFunction:
    p: int
    n: int
    table: np.ndarray

    def __post_init__(self):
        check_prime(self.p)
        if self.n < 1:
            raise ValueError("n must be at least 1")
        t = np.array(self.table, dtype=np.int64).reshape(-1)
        if t.size != self.p**self.n:
            raise ValueError(f"table has {t.size} entries, expected p^n = {self.p**self.n}")
        if t.size and (t.min() < 0 or t.max() >= self.p):
            raise ValueError(f"table entries must lie in [0, {self.p - 1}]")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    @classmethod
    def constant(cls, p: int, n: int, value: int = 0) -> FpFunction:
        return cls(p, n, np.full(p**n, value % p, dtype=np.int64))

    def __call__(self, x: FpVector) -> int:
        return eval_at(self, x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpFunction):
            return NotImplemented
        return self.p == other.p and self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.table.tobytes()))

    @property
    def header(self) -> str:
        return f"p={self.p} n={self.n} order={ORDER_TAG}"

    def table_text(self) -> str:
        return " ".join(str(int(v)) for v in self.table)

    def digest(self) -> str:
        return hashlib.sha256(f"{self.header}\n{self.table_text()}".encode()).hexdigest()

    def to_json(self) -> dict:
        return {"header": self.header, "table": [int(v) for v in self.table]}

    @classmethod
    def from_json(cls, obj: dict) -> FpFunction:
        p, n = parse_header(obj["header"])
        return cls(p, n, np.asarray(obj["table"], dtype=np.int64))


def eval_at(f: FpFunction, x: FpVector) -> int:
    if x.p != f.p or x.n != f.n:
        raise DimensionError(f"point over (p={x.p}, n={x.n}) for function over (p={f.p}, n={f.n})")
    return int(f.table[index_of(x)])


def add_linear(f: FpFunction, beta: FpVector) -> FpFunction:
    """x -> f(x) + beta . x  (mod p)."""
    if beta.p != f.p or beta.n != f.n:
        raise DimensionError("beta does not match the function's (p, n)")
    lin = digit_matrix(f.p, f.n) @ np.asarray(beta.coords, dtype=np.int64)
    return FpFunction(f.p, f.n, (f.table + lin) % f.p)


# --- polynomial expressions -------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[xX]\d+)|(?P<op>[+\-*])|(?P<bad>\S))")


def _tokens(expr: str):
    pos = 0
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        yield kind, m.group(kind), start
        pos = m.end()
    yield "end", "", len(expr)


def parse_terms(expr: str, p: int, n: int) -> list[tuple[int, tuple[int, ...]]]:
    """Parse into (coefficient mod p, sorted 1-based variable indices) terms.

    Grammar: ['+'|'-'] term (('+'|'-') term)*, term = factor ('*' factor)*,
    factor = integer | x<j>. Parentheses and exponents are rejected.
    """
    check_prime(p)
    toks = list(_tokens(expr))
    terms: list[tuple[int, tuple[int, ...]]] = []
    i = 0
    sign = 1
    kind, text, pos = toks[i]
    if kind == "op" and text in "+-":
        sign = -1 if text == "-" else 1
        i += 1
    while True:
        coef, vars_ = sign, []
        while True:
            kind, text, pos = toks[i]
            if kind == "int":
                coef *= int(text)
            elif kind == "var":
                j = int(text[1:])
                if not 1 <= j <= n:
                    raise ParseError(f"variable {text} outside x1..x{n}", pos, expr)
                vars_.append(j)
            elif kind == "bad":
                what = "exponents are not supported" if text == "^" else f"unexpected character {text!r}"
                raise ParseError(what, pos, expr)
            else:
                raise ParseError("expected a number or variable", pos, expr)
            i += 1
            kind, text, pos = toks[i]
            if kind == "op" and text == "*":
                i += 1
                continue
            break
        terms.append((coef % p, tuple(sorted(vars_))))
        if kind == "end":
            return terms
        if kind == "op" and text in "+-":
            sign = -1 if text == "-" else 1
            i += 1
            continue
        if kind == "bad":
            what = "exponents are not supported" if text == "^" else f"unexpected character {text!r}"
            raise ParseError(what, pos, expr)
        raise ParseError("expected '+', '-' or '*'", pos, expr)


def parse_poly(expr: str, p: int, n: int) -> FpFunction:
    terms = parse_terms(expr, p, n)
    X = digit_matrix(p, n)
    table = np.zeros(p**n, dtype=np.int64)
    for coef, vars_ in terms:
        if not coef:
            continue
        col = np.full(p**n, coef, dtype=np.int64)
        for j in vars_:
            col = (col * X[:, j - 1]) % p
        table = (table + col) % p
    return FpFunction(p, n, table)


def quadratic_form(p: int, n: int, coeffs: dict[tuple[int, int], int]) -> FpFunction:
    """sum c_ij x_i x_j over 1-based pairs (i, j)."""
    X = digit_matrix(p, n)
    table = np.zeros(p**n, dtype=np.int64)
    for (i, j), c in coeffs.items():
        if c % p:
            table = (table + (c % p) * X[:, i - 1] * X[:, j - 1]) % p
    return FpFunction(p, n, table)


# --- truth-table files ------------------------------------------------------

_HEADER = re.compile(r"^p=(\d+)\s+n=(\d+)\s+order=(\S+)$")


def parse_header(line: str) -> tuple[int, int]:
    m = _HEADER.match(line.strip())
    if m is None:
        raise TableFormatError(f"malformed header {line.strip()!r}; expected 'p=<p> n=<n> order={ORDER_TAG}'")
    p, n, order = int(m.group(1)), int(m.group(2)), m.group(3)
    if order != ORDER_TAG:
        raise TableFormatError(f"unsupported ordering {order!r}; only {ORDER_TAG} is understood")
    if n < 1:
        raise TableFormatError("n must be at least 1")
    try:
        check_prime(p)
    except ValueError as exc:
        raise TableFormatError(str(exc)) from None
    return p, n


def loads_table(text: str) -> FpFunction:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise TableFormatError(f"expected a header line and a table line, found {len(lines)} lines")
    p, n = parse_header(lines[0])
    try:
        values = [int(v) for v in lines[1].split()]
    except ValueError:
        raise TableFormatError("table line must hold integers") from None
    if len(values) != p**n:
        raise TableFormatError(f"table has {len(values)} entries, expected {p**n}")
    if any(not 0 <= v < p for v in values):
        raise TableFormatError(f"table entries must lie in [0, {p - 1}]")
    return FpFunction(p, n, np.asarray(values, dtype=np.int64))


def dumps_table(f: FpFunction) -> str:
    return f"{f.header}\n{f.table_text()}\n"


def read_table(path: str | Path) -> FpFunction:
    return loads_table(Path(path).read_text())


def write_table(f: FpFunction, path: str | Path) -> None:
    Path(path).write_text(dumps_table(f))
