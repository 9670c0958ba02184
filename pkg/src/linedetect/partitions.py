"""Partitions, SL_m duals, Gaussian polynomials and bounded partition counts.

Everything here is exact integer arithmetic on Python ints.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .report import Report

__all__ = [
    "Partition",
    "IntPolynomial",
    "conjugate",
    "dual_sl",
    "gaussian_polynomial",
    "count_bounded_partitions",
    "verify_corollary_identities",
    "partitions_of",
    "partitions_up_to",
]


class Partition:
    """A weakly decreasing sequence of nonnegative integers.

    The stored ``parts`` keep their explicit length (fixed-length m-tuples are
    common when working with SL_m), but equality and hashing use the
    normalized form with trailing zeros removed.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        self.parts = parts

    @classmethod
    def coerce(cls, value: "Partition | Sequence[int]") -> "Partition":
        return value if isinstance(value, Partition) else cls(value)

    def normalized(self) -> tuple[int, ...]:
        parts = self.parts
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return parts[:end]

    @property
    def size(self) -> int:
        """|λ|, the number partitioned."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts (ℓ)."""
        return len(self.normalized())

    def padded(self, m: int) -> tuple[int, ...]:
        parts = self.normalized()
        if len(parts) > m:
            raise ValueError(f"partition {parts} has more than {m} nonzero parts")
        return parts + (0,) * (m - len(parts))

    def sl_normalized(self, m: int) -> "Partition":
        """Remove full columns of height m (the SL_m equivalence λ ~ λ + b)."""
        parts = self.padded(m)
        last = parts[-1] if parts else 0
        return Partition(p - last for p in parts).trimmed()

    def trimmed(self) -> "Partition":
        return Partition(self.normalized())

    def contains(self, other: "Partition") -> bool:
        """Young diagram containment other ⊆ self."""
        mine, theirs = self.normalized(), other.normalized()
        if len(theirs) > len(mine):
            return False
        return all(a >= b for a, b in zip(mine, theirs))

    def __getitem__(self, i: int) -> int:
        parts = self.parts
        return parts[i] if i < len(parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.normalized() == other.normalized()
        if isinstance(other, tuple):
            return self.normalized() == Partition(other).normalized()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.normalized())

    def __lt__(self, other: "Partition") -> bool:
        return self.normalized() < other.normalized()

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.normalized()) + ")"


class IntPolynomial:
    """Dense polynomial in q with exact integer coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coeff(self, n: int) -> int:
        if 0 <= n < len(self.coefficients):
            return self.coefficients[n]
        return 0

    def __call__(self, q: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * q + c
        return total

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by q**k."""
        if not self.coefficients:
            return self
        return IntPolynomial((0,) * k + self.coefficients)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def is_palindromic(self) -> bool:
        c = self.coefficients
        return c == c[::-1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)})"

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


def conjugate(partition: Partition | Sequence[int]) -> Partition:
    """Transpose of the Young diagram."""
    parts = Partition.coerce(partition).normalized()
    if not parts:
        return Partition()
    return Partition(sum(1 for p in parts if p > i) for i in range(parts[0]))


def dual_sl(partition: Partition | Sequence[int], m: int) -> Partition:
    """Partition of the dual representation S_λ(V)^∨ for SL_m.

    Returns the m-entry partition (λ1-λm, λ1-λ(m-1), ..., λ1-λ1), i.e. the
    reversed complement of λ inside a λ1 × m box.
    """
    if m < 1:
        raise ValueError("m must be positive")
    parts = Partition.coerce(partition).padded(m)
    top = parts[0] if parts else 0
    return Partition(top - p for p in reversed(parts))


@lru_cache(maxsize=None)
def _gaussian(a: int, b: int) -> IntPolynomial:
    # [a,b] = [a-1,b] + q^(a-b) [a-1,b-1], filled row by row in b
    prev = [IntPolynomial([1])] * (a - b + 1)  # row b'=0: [b'+t, 0] = 1
    for bb in range(1, b + 1):
        row = [IntPolynomial([1])]  # [bb, bb] = 1
        for t in range(1, a - b + 1):
            aa = bb + t
            row.append(row[t - 1] + prev[t].shift(aa - bb))
        prev = row
    return prev[a - b]


def gaussian_polynomial(a: int, b: int) -> IntPolynomial:
    """The q-binomial coefficient [a choose b]_q."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    if b > a:
        raise ValueError(f"need b <= a, got a={a}, b={b}")
    return _gaussian(a, min(b, a - b))


@lru_cache(maxsize=8)
def _exact_parts_table(j: int, n_max: int) -> tuple[tuple[int, ...], ...]:
    """table[c][t] = number of partitions of t into exactly c parts, each <= j."""
    width = n_max + 1
    table = [[0] * width for _ in range(n_max + 1)]
    table[0][0] = 1
    # knapsack over part sizes v = 1..j; rows are the part count c
    for v in range(1, j + 1):
        for c in range(1, n_max + 1):
            # nonzero only for c <= t <= j*c
            lo, hi = max(v, c), min(width, j * c + 1)
            if lo >= hi:
                continue
            below, row = table[c - 1], table[c]
            row[lo:hi] = [x + y for x, y in zip(row[lo:hi], below[lo - v:hi - v])]
    return tuple(tuple(row) for row in table)


def count_bounded_partitions(k: int, j: int, n: int) -> int:
    """p(k, j, n): partitions of n into at most j parts, each at most k.

    Counted through the conjugate picture (parts at most j, at most k of
    them) with a part-count knapsack table, independently of the Gaussian
    recurrence.
    """
    if k < 0 or j < 0 or n < 0:
        raise ValueError("k, j, n must be nonnegative")
    if n > j * k:
        return 0
    if n == 0:
        return 1
    size = 64
    while size < n:
        size *= 2
    table = _exact_parts_table(j, size)
    return sum(table[c][n] for c in range(0, min(k, n) + 1))


def verify_corollary_identities(l_max: int) -> Report:
    """Check p(4l,3,6l) - p(4l,3,6l-1) = 1 and p(4l-2,3,6l-3) = p(4l-2,3,6l-4)."""
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    rows = []
    failures = []
    for ell in range(1, l_max + 1):
        a = count_bounded_partitions(4 * ell, 3, 6 * ell)
        b = count_bounded_partitions(4 * ell, 3, 6 * ell - 1)
        c = count_bounded_partitions(4 * ell - 2, 3, 6 * ell - 3)
        d = count_bounded_partitions(4 * ell - 2, 3, 6 * ell - 4)
        first, second = a - b == 1, c == d
        if not first:
            failures.append(f"l={ell}: p({4*ell},3,{6*ell}) - p({4*ell},3,{6*ell-1}) = {a - b}")
        if not second:
            failures.append(f"l={ell}: p({4*ell-2},3,{6*ell-3}) = {c} != {d}")
        rows.append({"l": ell, "diff_4l": a - b, "p_4l-2_hi": c, "p_4l-2_lo": d,
                     "identity_1": first, "identity_2": second})
    return Report(
        name="corollary",
        passed=not failures,
        columns=["l", "diff_4l", "p_4l-2_hi", "p_4l-2_lo", "identity_1", "identity_2"],
        rows=rows,
        failures=failures,
        summary=f"{2 * l_max - len(failures)}/{2 * l_max} identities hold for l=1..{l_max}",
    )


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions_of(n - first, first, rest_len):
            yield (first,) + rest


def partitions_up_to(size: int, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    for n in range(size + 1):
        yield from partitions_of(n, max_len=max_len)
