"""Closed-form SL_2 plethysm Sym^j(Sym^k V) from Gaussian polynomial coefficients."""
from __future__ import annotations

from .characters import DecompResult
from .liealg import Group, root_system
from .partitions import gaussian_polynomial

__all__ = ["plethysm_coefficient", "sym_of_sym_sl2", "detects_sym3_sl2"]


def plethysm_coefficient(j: int, k: int, w: int) -> int:
    """N(j, k, w): coefficient of q^w in (1 - q) [j+k choose k]_q.

    This is the multiplicity of Sym^(jk - 2w) V in Sym^j(Sym^k V) for
    0 <= w <= floor(jk / 2).
    """
    if j < 0 or k < 0:
        raise ValueError("j and k must be nonnegative")
    if not 0 <= w <= (j * k) // 2:
        raise ValueError(f"w must lie in [0, {(j * k) // 2}], got {w}")
    g = gaussian_polynomial(j + k, k)
    return g.coeff(w) - g.coeff(w - 1)


def sym_of_sym_sl2(j: int, k: int) -> DecompResult:
    """Sym^j(Sym^k V) as SL_2 highest weights {jk - 2w: N(j, k, w)}.

    Determinant twists are dropped: only the SL_2 structure is kept.
    """
    if j < 1 or k < 0:
        raise ValueError("need j >= 1 and k >= 0")
    terms = {}
    for w in range((j * k) // 2 + 1):
        n = plethysm_coefficient(j, k, w)
        if n < 0:
            raise ArithmeticError(f"negative plethysm coefficient N({j},{k},{w}) = {n}")
        if n:
            terms[(j * k - 2 * w,)] = n
    return DecompResult(terms, Group((root_system("A", 1),)), "weight")


def detects_sym3_sl2(n: int) -> bool:
    """Whether Sym^3 fixes a line for Sym^(n-1)(SL_2) in GL_n.

    The trivial summand of Sym^3(Sym^(n-1) V) is the w = 3(n-1)/2 term, which
    exists only for odd n.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    k = n - 1
    if (3 * k) % 2:
        return False
    return plethysm_coefficient(3, k, 3 * k // 2) >= 1
