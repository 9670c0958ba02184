"""Exact character calculus on weight multisets.

A :class:`Character` is a finite map from weights (Dynkin coordinates,
concatenated over the factors of its ambient :class:`~linedetect.liealg.Group`)
to positive integer multiplicities.  Symmetric and exterior powers go through
Adams operations and the Newton identities; decomposition into irreducibles
is done by highest-weight stripping.

For representations whose tensor powers are too large to hold as weight
multisets, :func:`functor_decomposition` works on decompositions instead:
it tensors an already-decomposed character with a weight multiset using the
Brauer-Klimyk rule, and folds virtual weight multisets into irreducibles by
the dot action of the Weyl group.
"""
from __future__ import annotations

import contextlib
import json
import os
import re
from collections import defaultdict
from dataclasses import dataclass
from math import factorial
from types import MappingProxyType
from typing import Any, Iterator, Mapping, Sequence

from .liealg import Group, GroupLike, dominant_multiplicities, weyl_dimension
from .partitions import Partition, partitions_of

__all__ = [
    "Character",
    "DecompResult",
    "Functor",
    "SizeCapExceeded",
    "NotACharacterError",
    "AmbientMismatchError",
    "size_cap",
    "get_size_cap",
    "check_size",
    "tensor",
    "external_tensor",
    "direct_sum",
    "dual",
    "adams",
    "sym_power",
    "ext_power",
    "tensor_power",
    "apply_functor",
    "decompose",
    "decompose_by_reflection",
    "tensor_decomposition",
    "functor_decomposition",
    "trivial_multiplicity",
]

Weight = tuple[int, ...]

DEFAULT_SIZE_CAP = 10**7
SIZE_CAP_ENV = "LINEDETECT_SIZE_CAP"
MAX_FUNCTOR_DEGREE = 4


class SizeCapExceeded(RuntimeError):
    """A computation would exceed the configured number of weight entries."""


class NotACharacterError(ValueError):
    """Input is not a genuine (nonnegative, Weyl-invariant) character."""


class AmbientMismatchError(ValueError):
    pass


_size_cap: int | None = None


def get_size_cap() -> int:
    if _size_cap is not None:
        return _size_cap
    env = os.environ.get(SIZE_CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{SIZE_CAP_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_SIZE_CAP


@contextlib.contextmanager
def size_cap(cap: int) -> Iterator[None]:
    """Temporarily override the weight-entry cap."""
    global _size_cap
    old = _size_cap
    _size_cap = int(cap)
    try:
        yield
    finally:
        _size_cap = old


def check_size(entries: int, what: str) -> None:
    cap = get_size_cap()
    if entries > cap:
        raise SizeCapExceeded(f"{what}: {entries} weight entries exceeds size cap {cap}")


class Character:
    """Weight multiset of a representation of ``ambient``."""

    __slots__ = ("ambient", "_weights")

    def __init__(self, ambient: GroupLike, weights: Mapping[Sequence[int], int], *, check: bool = True):
        self.ambient = Group.of(ambient)
        if check:
            rank = self.ambient.rank
            clean: dict[Weight, int] = {}
            for w, m in weights.items():
                w = tuple(int(c) for c in w)
                if len(w) != rank:
                    raise ValueError(f"weight {w} has length {len(w)}, expected {rank}")
                if m < 0:
                    raise NotACharacterError(f"negative multiplicity {m} at weight {w}")
                if m:
                    clean[w] = int(m)
            self._weights = clean
        else:
            self._weights = dict(weights)

    @classmethod
    def trivial(cls, ambient: GroupLike) -> "Character":
        ambient = Group.of(ambient)
        return cls(ambient, {(0,) * ambient.rank: 1}, check=False)

    @property
    def weights(self) -> Mapping[Weight, int]:
        return MappingProxyType(self._weights)

    @property
    def dim(self) -> int:
        return sum(self._weights.values())

    def __len__(self) -> int:
        return len(self._weights)

    def __getitem__(self, weight: Sequence[int]) -> int:
        return self._weights.get(tuple(weight), 0)

    def items(self):
        return self._weights.items()

    def dominant_part(self) -> dict[Weight, int]:
        return {w: m for w, m in self._weights.items() if all(c >= 0 for c in w)}

    def is_weyl_invariant(self) -> bool:
        g = self.ambient
        ws = self._weights
        for i in range(g.rank):
            for w, m in ws.items():
                if ws.get(g.reflect(w, i), 0) != m:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.ambient == other.ambient and self._weights == other._weights

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self._weights.items())))

    def __repr__(self) -> str:
        return f"Character({self.ambient.name}, dim={self.dim}, weights={len(self._weights)})"


def _order_key(group: Group, weight: Weight):
    return (group.height(weight), weight)


@dataclass
class DecompResult:
    """Multiplicities of irreducible summands.

    ``terms`` maps highest weights (``kind == "weight"``) or partitions
    (``kind == "partition"``) to positive multiplicities, stored in
    descending stripping order.
    """

    terms: dict[Any, int]
    ambient: Any = None
    kind: str = "weight"

    def __post_init__(self) -> None:
        for key, m in self.terms.items():
            if m <= 0:
                raise ValueError(f"multiplicity of {key} must be positive, got {m}")
        self.terms = dict(sorted(self.terms.items(), key=self._sort_key, reverse=True))

    def _sort_key(self, item):
        key = item[0]
        if self.kind == "partition":
            parts = key.normalized() if isinstance(key, Partition) else tuple(key)
            return (sum(parts), parts)
        if isinstance(self.ambient, Group):
            return _order_key(self.ambient, key)
        return (sum(key), key)

    def __getitem__(self, key) -> int:
        if self.kind == "partition":
            key = Partition.coerce(key)
        else:
            key = tuple(key)
        return self.terms.get(key, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecompResult):
            return NotImplemented
        return self.kind == other.kind and self.terms == other.terms

    def dimension(self) -> int:
        if self.kind != "weight" or not isinstance(self.ambient, Group):
            raise ValueError("dimension needs weight terms over a Group")
        return sum(m * weyl_dimension(self.ambient, w) for w, m in self.terms.items())

    def to_json_obj(self) -> dict[str, Any]:
        key = "partition" if self.kind == "partition" else "weight"
        rows = []
        for k, m in self.terms.items():
            coords = list(k.normalized()) if isinstance(k, Partition) else list(k)
            rows.append({key: coords, "mult": str(m)})
        return {"terms": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, Any], ambient: Any = None) -> "DecompResult":
        rows = obj["terms"]
        if rows and "partition" in rows[0]:
            terms = {Partition(r["partition"]): int(r["mult"]) for r in rows}
            return cls(terms, ambient, "partition")
        return cls({tuple(r["weight"]): int(r["mult"]) for r in rows}, ambient, "weight")

    @classmethod
    def from_json(cls, text: str, ambient: Any = None) -> "DecompResult":
        return cls.from_json_obj(json.loads(text), ambient)


def _require_same_ambient(a: Character, b: Character) -> None:
    if a.ambient != b.ambient:
        raise AmbientMismatchError(f"ambient mismatch: {a.ambient.name} vs {b.ambient.name}")


def _convolve(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> dict[Weight, int]:
    out: dict[Weight, int] = defaultdict(int)
    for u, m in a.items():
        for v, n in b.items():
            out[tuple(x + y for x, y in zip(u, v))] += m * n
    return dict(out)


def tensor(a: Character, b: Character) -> Character:
    """Character of a ⊗ b."""
    _require_same_ambient(a, b)
    check_size(len(a) * len(b), f"tensor of {len(a)} x {len(b)} weights")
    return Character(a.ambient, _convolve(a.weights, b.weights), check=False)


def external_tensor(a: Character, b: Character) -> Character:
    """Character of a ⊠ b over the product of the two ambients."""
    check_size(len(a) * len(b), f"external tensor of {len(a)} x {len(b)} weights")
    group = Group(a.ambient.factors + b.ambient.factors)
    weights = {u + v: m * n for u, m in a.items() for v, n in b.items()}
    return Character(group, weights, check=False)


def direct_sum(a: Character, b: Character) -> Character:
    _require_same_ambient(a, b)
    weights = dict(a.weights)
    for w, m in b.items():
        weights[w] = weights.get(w, 0) + m
    return Character(a.ambient, weights, check=False)


def dual(a: Character) -> Character:
    return Character(a.ambient, {tuple(-c for c in w): m for w, m in a.items()}, check=False)


def adams(a: Character, k: int) -> Character:
    """Adams operation: every weight multiplied by k."""
    if k < 1:
        raise ValueError("Adams degree must be >= 1")
    if k == 1:
        return a
    return Character(a.ambient, {tuple(k * c for c in w): m for w, m in a.items()}, check=False)


def _cycle_types(d: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Partitions mu of d with the class size d!/z_mu."""
    for mu in partitions_of(d):
        z = 1
        counts: dict[int, int] = defaultdict(int)
        for part in mu:
            counts[part] += 1
        for part, mult in counts.items():
            z *= part**mult * factorial(mult)
        yield mu, factorial(d) // z


def _check_degree(d: int) -> None:
    if not 1 <= d <= MAX_FUNCTOR_DEGREE:
        raise ValueError(f"degree must be between 1 and {MAX_FUNCTOR_DEGREE}, got {d}")


def _power_sum(a: Character, mu: Sequence[int]) -> dict[Weight, int]:
    result: Mapping[Weight, int] = adams(a, mu[0]).weights
    for part in mu[1:]:
        b = adams(a, part).weights
        check_size(len(result) * len(b), f"power-sum product of {len(result)} x {len(b)} weights")
        result = _convolve(result, b)
    return dict(result)


def _newton(a: Character, d: int, signed: bool) -> Character:
    _check_degree(d)
    total: dict[Weight, int] = defaultdict(int)
    for mu, count in _cycle_types(d):
        coeff = count * (-1 if signed and (d - len(mu)) % 2 else 1)
        for w, m in _power_sum(a, mu).items():
            total[w] += coeff * m
    scale = factorial(d)
    weights: dict[Weight, int] = {}
    for w, m in total.items():
        q, r = divmod(m, scale)
        if r or q < 0:
            raise NotACharacterError(
                f"Newton identity gave non-integral or negative coefficient at {w}: {m}/{scale}")
        if q:
            weights[w] = q
    return Character(a.ambient, weights, check=False)


def sym_power(a: Character, d: int) -> Character:
    """Character of Sym^d, via h_d = sum over mu of p_mu / z_mu."""
    return _newton(a, d, signed=False)


def ext_power(a: Character, d: int) -> Character:
    """Character of Λ^d, via e_d = sum over mu of sign(mu) p_mu / z_mu."""
    return _newton(a, d, signed=True)


def tensor_power(a: Character, d: int) -> Character:
    _check_degree(d)
    out = a
    for _ in range(d - 1):
        out = tensor(out, a)
    return out


def decompose(a: Character) -> DecompResult:
    """Decompose a genuine character by highest-weight stripping.

    Dominant weights are visited in descending (height, coordinates) order,
    where height is the sum of simple-root coefficients.  Only the dominant
    part is touched; the character is Weyl-invariant, so it is determined
    by that part.
    """
    group = a.ambient
    remaining = a.dominant_part()
    order = sorted(remaining, key=lambda w: _order_key(group, w), reverse=True)
    terms: dict[Weight, int] = {}
    for lam in order:
        m = remaining.get(lam, 0)
        if m == 0:
            continue
        if m < 0:
            raise NotACharacterError(f"negative multiplicity {m} at dominant weight {lam} while stripping")
        terms[lam] = m
        for mu, n in dominant_multiplicities(group, lam).items():
            left = remaining.get(mu, 0) - m * n
            if left < 0:
                raise NotACharacterError(f"stripping {lam} leaves multiplicity {left} at {mu}")
            remaining[mu] = left
    return DecompResult(terms, group, "weight")


def trivial_multiplicity(a: Character) -> int:
    """Multiplicity of the trivial summand (zero highest weight)."""
    return decompose(a)[(0,) * a.ambient.rank]


def _fold(group: Group, weights: Mapping[Weight, int], shift: Weight | None = None) -> dict[Weight, int]:
    # alternating sum over the dot action: a weight nu contributes
    # sign(w) to V(w(nu + shift + rho) - rho)
    out: dict[Weight, int] = defaultdict(int)
    base = tuple(1 for _ in range(group.rank)) if shift is None else tuple(c + 1 for c in shift)
    for nu, m in weights.items():
        hit = group.dot_dominant(tuple(x + y for x, y in zip(nu, base)))
        if hit is not None:
            sign, lam = hit
            out[lam] += sign * m
    return out


def _clean(terms: Mapping[Weight, int]) -> dict[Weight, int]:
    return {w: m for w, m in terms.items() if m}


def decompose_by_reflection(a: Character) -> DecompResult:
    """Decompose by folding every weight into the dominant chamber with the dot action.

    Independent of :func:`decompose`; no irreducible characters are needed.
    """
    terms = _clean(_fold(a.ambient, a.weights))
    for lam, m in terms.items():
        if m < 0:
            raise NotACharacterError(f"virtual multiplicity {m} at {lam}")
    return DecompResult(terms, a.ambient, "weight")


def tensor_decomposition(group: Group, terms: Mapping[Weight, int], b: Mapping[Weight, int]) -> dict[Weight, int]:
    """Decomposition of (sum of terms) ⊗ b, where b is a weight multiset.

    Brauer-Klimyk: V(lam) ⊗ b = sum over weights nu of b of
    sign(w) V(w(lam + nu + rho) - rho).  Terms may be virtual.
    """
    check_size(len(terms) * len(b), f"Brauer-Klimyk product of {len(terms)} x {len(b)} entries")
    out: dict[Weight, int] = defaultdict(int)
    for lam, c in terms.items():
        for mu, m in _fold(group, b, lam).items():
            out[mu] += c * m
    return _clean(out)


@dataclass(frozen=True)
class Functor:
    """A polynomial functor r: ``tensor``, ``sym`` or ``ext`` of degree 1..4."""

    kind: str
    degree: int

    _ALIASES = {"tensor": "tensor", "sym": "sym", "ext": "ext", "wedge": "ext", "otimes": "tensor"}

    def __post_init__(self) -> None:
        if self.kind not in ("tensor", "sym", "ext"):
            raise ValueError(f"unknown functor kind {self.kind!r}")
        _check_degree(self.degree)

    @classmethod
    def parse(cls, text: str) -> "Functor":
        match = re.fullmatch(r"\s*([a-z]+)\s*\^?\s*(\d+)\s*", text.lower())
        if not match or match.group(1) not in cls._ALIASES:
            raise ValueError(f"cannot parse functor {text!r}; expected e.g. sym3, ext3, tensor3")
        return cls(cls._ALIASES[match.group(1)], int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.kind}{self.degree}"


def apply_functor(a: Character, functor: Functor) -> Character:
    """Weight multiset of r(a)."""
    if functor.kind == "tensor":
        return tensor_power(a, functor.degree)
    if functor.kind == "sym":
        return sym_power(a, functor.degree)
    return ext_power(a, functor.degree)


def functor_decomposition(a: Character, functor: Functor) -> DecompResult:
    """Decomposition of r(a) without forming the weight multiset of r(a).

    Each power-sum term p_mu(a) is decomposed by folding its first Adams
    factor and then applying Brauer-Klimyk for the remaining factors; the
    Newton combination is taken on the decompositions.
    """
    group = a.ambient
    d = functor.degree
    if functor.kind == "tensor":
        cycle_terms = [((1,) * d, 1)]
        scale = 1
    else:
        cycle_terms = [(mu, c * (-1 if functor.kind == "ext" and (d - len(mu)) % 2 else 1))
                       for mu, c in _cycle_types(d)]
        scale = factorial(d)
    total: dict[Weight, int] = defaultdict(int)
    for mu, coeff in cycle_terms:
        terms = _clean(_fold(group, adams(a, mu[0]).weights))
        for part in mu[1:]:
            terms = tensor_decomposition(group, terms, adams(a, part).weights)
        for lam, m in terms.items():
            total[lam] += coeff * m
    result: dict[Weight, int] = {}
    for lam, m in total.items():
        q, r = divmod(m, scale)
        if r or q < 0:
            raise NotACharacterError(f"{functor} produced coefficient {m}/{scale} at {lam}")
        if q:
            result[lam] = q
    return DecompResult(result, group, "weight")
