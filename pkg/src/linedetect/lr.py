"""Littlewood-Richardson coefficients, Pieri's rule and SSYT weight multisets."""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterator, Sequence

from .characters import Character, DecompResult, check_size
from .liealg import Group, root_system
from .partitions import Partition, partitions_of

__all__ = [
    "lr_coefficient",
    "tensor_decompose_lr",
    "pieri_row",
    "kostka_weights",
    "hook_content_dimension",
    "sl_group",
    "partition_to_dynkin",
]

PartitionLike = Partition | Sequence[int]


def sl_group(m: int) -> Group:
    """The group SL_m as a product ambient (trivial for m == 1)."""
    if m < 1:
        raise ValueError("m must be positive")
    return Group(()) if m == 1 else Group((root_system("A", m - 1),))


def partition_to_dynkin(partition: PartitionLike, m: int) -> tuple[int, ...]:
    parts = Partition.coerce(partition).padded(m)
    return tuple(parts[i] - parts[i + 1] for i in range(m - 1))


def _skew_cells(outer: tuple[int, ...], inner: tuple[int, ...]) -> list[tuple[int, int]]:
    """Cells of outer/inner in reverse reading order: rows top to bottom, right to left."""
    cells = []
    for r, length in enumerate(outer):
        start = inner[r] if r < len(inner) else 0
        for c in range(length - 1, start - 1, -1):
            cells.append((r, c))
    return cells


def lr_coefficient(lam: PartitionLike, mu: PartitionLike, nu: PartitionLike) -> int:
    """C^nu_{lam,mu}: LR skew tableaux of shape nu/lam and content mu.

    Rows weakly increase, columns strictly increase, and the reverse reading
    word is a lattice word.  Cells are filled in reading order with the
    lattice condition checked as each letter is placed.
    """
    lam_p, mu_p, nu_p = (Partition.coerce(x).normalized() for x in (lam, mu, nu))
    if sum(nu_p) != sum(lam_p) + sum(mu_p):
        return 0
    if not Partition(nu_p).contains(Partition(lam_p)):
        return 0
    if not mu_p:
        return 1
    cells = _skew_cells(nu_p, lam_p)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu_p) + 1)
    inner = lam_p

    def above(r: int, c: int) -> int:
        if r == 0:
            return 0
        if c < (inner[r - 1] if r - 1 < len(inner) else 0):
            return 0
        return filling[(r - 1, c)]

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = filling.get((r, c + 1), len(mu_p))  # row weakly increasing to the right
        lo = above(r, c) + 1  # column strict
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu_p[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += place(k + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return place(0)


def _candidate_shapes(lam: tuple[int, ...], mu: tuple[int, ...], max_rows: int) -> Iterator[tuple[int, ...]]:
    n = sum(lam) + sum(mu)
    rows = min(max_rows, len(lam) + len(mu))
    top = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    for nu in partitions_of(n, max_part=top, max_len=rows):
        if Partition(nu).contains(Partition(lam)) and Partition(nu).contains(Partition(mu)):
            yield nu


def _check_rows(p: tuple[int, ...], m: int, name: str) -> None:
    if len(p) > m:
        raise ValueError(f"{name} = {p} has more than m = {m} nonzero parts")


def tensor_decompose_lr(lam: PartitionLike, mu: PartitionLike, m: int) -> DecompResult:
    """S_lam(V) ⊗ S_mu(V) for dim V = m, reported as SL_m data.

    Shapes with more than m rows are dropped; surviving shapes are
    normalized by removing full columns of height m.
    """
    lam_p, mu_p = Partition.coerce(lam).normalized(), Partition.coerce(mu).normalized()
    _check_rows(lam_p, m, "lambda")
    _check_rows(mu_p, m, "mu")
    terms: dict[Partition, int] = defaultdict(int)
    for nu in _candidate_shapes(lam_p, mu_p, m):
        c = lr_coefficient(lam_p, mu_p, nu)
        if c:
            terms[Partition(nu).sl_normalized(m)] += c
    return DecompResult(dict(terms), sl_group(m), "partition")


def pieri_row(lam: PartitionLike, k: int, m: int) -> DecompResult:
    """S_lam(V) ⊗ Sym^k(V) by Pieri's rule (add a horizontal strip of k boxes).

    With lam = (k) this is Sym^k ⊗ Sym^k = sum over i of S_(k+i, k-i).
    """
    if k <= 0:
        raise ValueError("k must be positive")
    if m < 2:
        raise ValueError("m must be at least 2")
    lam_p = Partition.coerce(lam).normalized()
    _check_rows(lam_p, m, "lambda")
    padded = lam_p + (0,) * (m - len(lam_p))
    terms: dict[Partition, int] = {}

    def grow(row: int, left: int, shape: list[int]) -> None:
        if row == m:
            if left == 0:
                terms[Partition(shape).sl_normalized(m)] = 1
            return
        # row r may grow up to the old length of row r-1 (horizontal strip)
        cap = left if row == 0 else min(left, padded[row - 1] - padded[row])
        for add in range(cap, -1, -1):
            shape.append(padded[row] + add)
            grow(row + 1, left - add, shape)
            shape.pop()

    grow(0, k, [])
    return DecompResult(terms, sl_group(m), "partition")


def hook_content_dimension(lam: PartitionLike, m: int) -> int:
    """dim S_lam(C^m) = product over cells of (m + content) / hook."""
    parts = Partition.coerce(lam).normalized()
    if len(parts) > m:
        return 0
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])] if parts else []
    value = Fraction(1)
    for r, length in enumerate(parts):
        for c in range(length):
            hook = (length - c - 1) + (conj[c] - r - 1) + 1
            value *= Fraction(m + c - r, hook)
    assert value.denominator == 1
    return int(value)


def kostka_weights(lam: PartitionLike, m: int) -> Character:
    """Weight multiset of S_lam(C^m) as an SL_m character.

    Semistandard tableaux of shape lam with entries 1..m are enumerated by
    backtracking; a tableau with content c has Dynkin weight
    (c_1 - c_2, ..., c_{m-1} - c_m).
    """
    parts = Partition.coerce(lam).normalized()
    _check_rows(parts, m, "lambda")
    check_size(hook_content_dimension(parts, m), f"S_{parts} of SL_{m}")
    cells = [(r, c) for r, length in enumerate(parts) for c in range(length)]
    column_height = [sum(1 for p in parts if p > c) for c in range(parts[0])] if parts else []
    grid: dict[tuple[int, int], int] = {}
    content = [0] * (m + 1)
    weights: dict[tuple[int, ...], int] = defaultdict(int)

    def fill(k: int) -> None:
        if k == len(cells):
            weights[tuple(content[i] - content[i + 1] for i in range(1, m))] += 1
            return
        r, c = cells[k]
        lo = max(grid.get((r, c - 1), 1), grid.get((r - 1, c), 0) + 1)
        # rows below need room for strictly larger entries
        hi = m - (column_height[c] - 1 - r)
        for v in range(lo, hi + 1):
            grid[(r, c)] = v
            content[v] += 1
            fill(k + 1)
            content[v] -= 1
        grid.pop((r, c), None)

    fill(0)
    return Character(sl_group(m), dict(weights), check=False)
