"""Randomized and exhaustive consistency checks over the whole pipeline."""
from __future__ import annotations

import random
from typing import Callable

from .characters import (
    Character,
    adams,
    direct_sum,
    dual,
    ext_power,
    sym_power,
    tensor,
    tensor_power,
    trivial_multiplicity,
)
from .liealg import RootSystem, dominant_weights_up_to_dim, irreducible_character, root_system, weyl_dimension
from .partitions import count_bounded_partitions, gaussian_polynomial
from .report import Report

__all__ = [
    "PROPERTY_TYPES",
    "random_dominant_weight",
    "random_character",
    "irreducibles_up_to_dim",
    "check_freudenthal_dimensions",
    "check_newton_cube",
    "check_gaussian",
    "check_schur_orthogonality",
    "run_property_suite",
]

PROPERTY_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
                  ("C", 3), ("D", 4), ("G", 2)]


def random_dominant_weight(rng: random.Random, max_dim: int) -> tuple[RootSystem, tuple[int, ...]]:
    while True:
        rs = root_system(*rng.choice(PROPERTY_TYPES))
        top = rng.choice((1, 2, 3, 5))
        lam = tuple(rng.randint(0, top) for _ in range(rs.rank))
        if weyl_dimension(rs, lam) <= max_dim:
            return rs, lam


def irreducibles_up_to_dim(max_dim: int, types=None) -> list[tuple[RootSystem, tuple[int, ...]]]:
    if types is None:
        types = PROPERTY_TYPES + [("A", r) for r in range(5, 9)] + [("C", 2), ("C", 4)]
    out = []
    for letter, rank in types:
        rs = root_system(letter, rank)
        out.extend((rs, lam) for lam in dominant_weights_up_to_dim(rs, max_dim))
    return out


def random_character(rng: random.Random, max_dim: int = 30) -> Character:
    """A direct sum of one to three random irreducibles of one simple type."""
    while True:
        rs = root_system(*rng.choice(PROPERTY_TYPES))
        pool = [lam for lam in dominant_weights_up_to_dim(rs, max_dim)]
        char = None
        for _ in range(rng.randint(1, 3)):
            lam = rng.choice(pool)
            piece = irreducible_character(rs, lam)
            if char is not None and char.dim + piece.dim > max_dim:
                break
            char = piece if char is None else direct_sum(char, piece)
        if char is not None and char.dim <= max_dim:
            return char


def check_freudenthal_dimensions(rng: random.Random, count: int = 50, max_dim: int = 5000) -> list[str]:
    failures = []
    for _ in range(count):
        rs, lam = random_dominant_weight(rng, max_dim)
        char = irreducible_character(rs, lam)
        if char.dim != weyl_dimension(rs, lam):
            failures.append(f"{rs.name}{list(lam)}: Freudenthal {char.dim} != Weyl {weyl_dimension(rs, lam)}")
        if not char.is_weyl_invariant():
            failures.append(f"{rs.name}{list(lam)}: character not Weyl-invariant")
    return failures


def check_newton_cube(rng: random.Random, count: int = 20, max_dim: int = 30) -> list[str]:
    """⊗^3 = Sym^3 + Λ^3 + 2 S_(2,1), with S_(2,1) = (p1^3 - p3)/3, weight by weight."""
    failures = []
    for _ in range(count):
        a = random_character(rng, max_dim)
        cube = tensor_power(a, 3)
        sym3, ext3 = sym_power(a, 3), ext_power(a, 3)
        p3 = adams(a, 3)
        for char in (cube, sym3, ext3):
            if not char.is_weyl_invariant():
                failures.append(f"{a!r}: generated character not Weyl-invariant")
        for w, m in cube.items():
            hook = (m - p3[w]) // 3
            if (m - p3[w]) % 3 or m != sym3[w] + ext3[w] + 2 * hook:
                failures.append(f"{a!r}: Newton identity fails at {w}")
                break
        sq = tensor(a, a)
        s2, e2, p2 = sym_power(a, 2), ext_power(a, 2), adams(a, 2)
        for w in set(sq.weights) | set(p2.weights):
            if s2[w] + e2[w] != sq[w] or s2[w] - e2[w] != p2[w]:
                failures.append(f"{a!r}: degree-2 identities fail at {w}")
                break
    return failures


def check_gaussian(max_kj: int = 12) -> list[str]:
    failures = []
    for k in range(max_kj + 1):
        for j in range(max_kj + 1):
            g = gaussian_polynomial(j + k, k)
            if not g.is_palindromic() or g.degree != j * k:
                failures.append(f"[{j + k},{k}]_q not palindromic of degree {j * k}")
            for n in range(j * k + 2):
                if count_bounded_partitions(k, j, n) != g.coeff(n):
                    failures.append(f"p({k},{j},{n}) != coefficient of q^{n}")
    return failures


def check_schur_orthogonality(max_dim: int = 30) -> list[str]:
    failures = []
    for rs, lam in irreducibles_up_to_dim(max_dim):
        a = irreducible_character(rs, lam)
        if trivial_multiplicity(tensor(a, dual(a))) != 1:
            failures.append(f"{rs.name}{list(lam)}: trivial multiplicity of a ⊗ a^dual is not 1")
    return failures


def run_property_suite(seed: int = 0) -> Report:
    rng = random.Random(seed)
    checks: list[tuple[str, Callable[[], list[str]]]] = [
        ("freudenthal_vs_weyl", lambda: check_freudenthal_dimensions(rng)),
        ("newton_cube", lambda: check_newton_cube(rng)),
        ("gaussian", check_gaussian),
        ("schur_orthogonality", check_schur_orthogonality),
    ]
    rows, failures = [], []
    for name, fn in checks:
        found = fn()
        failures.extend(f"{name}: {f}" for f in found)
        rows.append({"check": name, "failures": len(found), "passed": not found})
    return Report(
        name="properties",
        passed=not failures,
        columns=["check", "failures", "passed"],
        rows=rows,
        failures=failures,
        summary=f"seed {seed}: {sum(r['passed'] for r in rows)}/{len(rows)} property checks pass",
    )
