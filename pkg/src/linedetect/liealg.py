"""Root systems, Weyl dimensions and Freudenthal weight multiplicities.

Weights are integer tuples in Dynkin (fundamental-weight) coordinates.  A
:class:`Group` is an ordered product of simple factors; its weights are the
concatenation of the per-factor coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import TYPE_CHECKING, Iterator, Sequence, Union

if TYPE_CHECKING:
    from .characters import Character

__all__ = [
    "RootSystem",
    "Group",
    "root_system",
    "weyl_dimension",
    "dominant_multiplicities",
    "irreducible_character",
    "enumerate_irreps_of_dim",
    "dominant_weights_up_to_dim",
    "SUPPORTED_TYPES",
    "EXCLUDED_MIN_DIMENSIONS",
    "MAX_FACTORS",
    "MAX_A_RANK",
]

Weight = tuple[int, ...]

# Types scanned by enumerate_irreps_of_dim.  Every simple algebra with an
# irreducible of dimension <= 9 appears here.
SUPPORTED_TYPES: dict[str, tuple[int, ...]] = {
    "A": tuple(range(1, 9)),
    "B": (2, 3, 4),
    "C": (2, 3, 4),
    "D": (4,),
    "G": (2,),
}

# Smallest nontrivial irreducible dimension of each excluded exceptional type.
# All exceed 9, which is why they are left out.
EXCLUDED_MIN_DIMENSIONS: dict[str, int] = {"E6": 27, "E7": 56, "E8": 248, "F4": 26}

# Products considered by enumerate_irreps_of_dim.
MAX_FACTORS = 2

# Type A is accepted beyond the enumeration table (SL_m for Schur functors).
MAX_A_RANK = 32


class UnsupportedRootSystem(ValueError):
    pass


def _cartan_matrix(letter: str, rank: int) -> list[list[int]]:
    # convention: A[i][j] = <alpha_i, alpha_j^vee>, so row i holds the Dynkin
    # coordinates of alpha_i
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    if letter == "G":
        return [[2, -1], [-3, 2]]
    for i in range(rank - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if letter == "B":
        a[rank - 2][rank - 1] = -2
    elif letter == "C":
        a[rank - 1][rank - 2] = -2
    elif letter == "D":
        a[rank - 3][rank - 2] = a[rank - 2][rank - 3] = -1
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    return a


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Minimal positive integers d with A[i][j] * d[j] symmetric (d_j = (a_j, a_j)/2)."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] and d[j] is None:
                # A_ij d_j = A_ji d_i
                d[j] = Fraction(cartan[j][i]) * d[i] / cartan[i][j]
                stack.append(j)
    scale = 1
    for x in d:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    ints = [int(x * scale) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _inverse(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class RootSystem:
    """Root data of one simple factor.

    ``positive_roots`` are in simple-root coordinates; ``positive_roots_dynkin``
    are the same roots in Dynkin coordinates.
    """

    letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    positive_roots: tuple[Weight, ...] = field(compare=False, repr=False)
    symmetrizer: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    @property
    def weyl_vector(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def positive_roots_dynkin(self) -> tuple[Weight, ...]:
        return tuple(self.to_dynkin(r) for r in self.positive_roots)

    @cached_property
    def inverse_cartan(self) -> list[list[Fraction]]:
        return _inverse(self.cartan)

    @cached_property
    def height_vector(self) -> tuple[Fraction, ...]:
        """Height of each fundamental weight (sum of its simple-root coefficients)."""
        return tuple(sum(row) for row in self.inverse_cartan)

    def to_dynkin(self, root_coords: Sequence[int]) -> Weight:
        r = self.rank
        return tuple(sum(root_coords[i] * self.cartan[i][j] for i in range(r)) for j in range(r))

    def to_root_coords(self, weight: Sequence[int]) -> tuple[Fraction, ...]:
        inv = self.inverse_cartan
        r = self.rank
        return tuple(sum(weight[i] * inv[i][j] for i in range(r)) for j in range(r))

    def pair(self, weight: Sequence[int], root_coords: Sequence[int]) -> int:
        """(weight, root) in the integral form with (alpha_j, alpha_j) = 2 d_j."""
        d = self.symmetrizer
        return sum(c * d[j] * weight[j] for j, c in enumerate(root_coords) if c)

    def __str__(self) -> str:
        return self.name


def _positive_roots(cartan: list[list[int]]) -> tuple[Weight, ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for root in frontier:
            dyn = [sum(root[i] * cartan[i][j] for i in range(n)) for j in range(n)]
            for j in range(n):
                # s_j(beta) = beta - <beta, alpha_j^vee> alpha_j
                img = list(root)
                img[j] -= dyn[j]
                img = tuple(img)
                if img not in seen:
                    seen.add(img)
                    new.append(img)
        frontier = new
    positive = [r for r in seen if all(c >= 0 for c in r)]
    return tuple(sorted(positive, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def root_system(letter: str, rank: int) -> RootSystem:
    """Build the root system of type ``letter`` and ``rank``.

    Supported: A1..A32, B2..B4, C2..C4, D4, G2.  Exceptional E/F types are
    excluded because none has an irreducible of dimension <= 9 (see
    ``EXCLUDED_MIN_DIMENSIONS``).
    """
    letter = letter.upper()
    supported = letter in SUPPORTED_TYPES and rank in SUPPORTED_TYPES[letter]
    if letter == "A" and 1 <= rank <= MAX_A_RANK:
        supported = True
    if not supported:
        raise UnsupportedRootSystem(
            f"unsupported root system {letter}{rank}; supported are A1-A{MAX_A_RANK}, "
            + ", ".join(f"{k}{min(v)}-{k}{max(v)}" if len(v) > 1 else f"{k}{v[0]}"
                        for k, v in SUPPORTED_TYPES.items() if k != "A")
            + f" (exceptional types have minimal dimensions {EXCLUDED_MIN_DIMENSIONS})"
        )
    cartan = _cartan_matrix(letter, rank)
    return RootSystem(
        letter=letter,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=_positive_roots(cartan),
        symmetrizer=_symmetrizer(cartan),
    )


@dataclass(frozen=True)
class Group:
    """Product of simple factors; the empty product is the trivial group."""

    factors: tuple[RootSystem, ...] = ()

    @classmethod
    def of(cls, spec: "GroupLike") -> "Group":
        if isinstance(spec, Group):
            return spec
        if isinstance(spec, RootSystem):
            return cls((spec,))
        return cls(tuple(spec))

    @property
    def name(self) -> str:
        return "x".join(f.name for f in self.factors) or "trivial"

    @cached_property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, pos = [], 0
        for f in self.factors:
            out.append(pos)
            pos += f.rank
        return tuple(out)

    def split(self, weight: Sequence[int]) -> list[Weight]:
        weight = tuple(weight)
        if len(weight) != self.rank:
            raise ValueError(f"weight {weight} has length {len(weight)}, expected {self.rank} for {self.name}")
        return [weight[o:o + f.rank] for o, f in zip(self.offsets, self.factors)]

    @cached_property
    def _rows(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        # sparse rows of the block-diagonal Cartan matrix, global indices
        rows = []
        for o, f in zip(self.offsets, self.factors):
            for i in range(f.rank):
                rows.append(tuple((o + j, a) for j, a in enumerate(f.cartan[i]) if a))
        return tuple(rows)

    @cached_property
    def height_vector(self) -> tuple[Fraction, ...]:
        return tuple(h for f in self.factors for h in f.height_vector)

    def height(self, weight: Sequence[int]) -> Fraction:
        """Sum of simple-root coefficients; strictly monotone for the dominance order."""
        return sum((h * x for h, x in zip(self.height_vector, weight)), Fraction(0))

    def reflect(self, weight: Sequence[int], i: int) -> Weight:
        v = list(weight)
        c = v[i]
        if c:
            for j, a in self._rows[i]:
                v[j] -= c * a
        return tuple(v)

    def to_dominant(self, weight: Sequence[int]) -> Weight:
        """Dominant representative of the Weyl orbit of ``weight``."""
        v = list(weight)
        rows = self._rows
        while True:
            for i, c in enumerate(v):
                if c < 0:
                    for j, a in rows[i]:
                        v[j] -= c * a
                    break
            else:
                return tuple(v)

    def dot_dominant(self, shifted: Sequence[int]) -> tuple[int, Weight] | None:
        """Reflect a rho-shifted weight into the dominant chamber.

        Returns (sign of the Weyl element, dominant weight minus rho), or
        None when the weight lies on a wall.
        """
        v = list(shifted)
        rows = self._rows
        sign = 1
        while True:
            neg = -1
            for i, c in enumerate(v):
                if c == 0:
                    return None
                if c < 0 and neg < 0:
                    neg = i
            if neg < 0:
                return sign, tuple(c - 1 for c in v)
            c = v[neg]
            for j, a in rows[neg]:
                v[j] -= c * a
            sign = -sign

    def orbit(self, dominant: Sequence[int]) -> list[Weight]:
        """Weyl orbit of a dominant weight."""
        start = tuple(dominant)
        seen = {start}
        stack = [start]
        rows = self._rows
        while stack:
            v = stack.pop()
            for i, c in enumerate(v):
                if c > 0:
                    w = list(v)
                    for j, a in rows[i]:
                        w[j] -= c * a
                    w = tuple(w)
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return list(seen)

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(c >= 0 for c in weight)

    def dual_weight(self, weight: Sequence[int]) -> Weight:
        """Highest weight of the dual irreducible, -w0(weight)."""
        return self.to_dominant(tuple(-c for c in weight))

    def __str__(self) -> str:
        return self.name


GroupLike = Union[Group, RootSystem, Sequence[RootSystem]]


def weyl_dimension(group: GroupLike, weight: Sequence[int]) -> int:
    """Dimension of the irreducible with the given dominant highest weight."""
    group = Group.of(group)
    parts = group.split(weight)
    total = 1
    for rs, lam in zip(group.factors, parts):
        if any(c < 0 for c in lam):
            raise ValueError(f"weight {tuple(weight)} is not dominant")
        total *= _simple_dimension(rs, lam)
    return total


@lru_cache(maxsize=65536)
def _simple_dimension(rs: RootSystem, lam: Weight) -> int:
    num, den = 1, 1
    shifted = tuple(c + 1 for c in lam)
    for root in rs.positive_roots:
        num *= rs.pair(shifted, root)
        den *= rs.pair(rs.weyl_vector, root)
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension must be integral"
    return q


def _dominant_weights_below(rs: RootSystem, lam: Weight) -> dict[Weight, tuple[int, ...]]:
    """Dominant weights mu <= lam, mapped to the simple-root coordinates of lam - mu."""
    found = {lam: (0,) * rs.rank}
    stack = [lam]
    roots = list(zip(rs.positive_roots, rs.positive_roots_dynkin))
    while stack:
        mu = stack.pop()
        depth = found[mu]
        for root, dyn in roots:
            nu = tuple(a - b for a, b in zip(mu, dyn))
            if nu in found or any(c < 0 for c in nu):
                continue
            found[nu] = tuple(a + b for a, b in zip(depth, root))
            stack.append(nu)
    return found


@lru_cache(maxsize=4096)
def _freudenthal(rs: RootSystem, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    below = _dominant_weights_below(rs, lam)
    order = sorted(below, key=lambda mu: sum(below[mu]))
    group = Group((rs,))
    d = rs.symmetrizer
    roots = list(zip(rs.positive_roots, rs.positive_roots_dynkin))
    mult: dict[Weight, int] = {lam: 1}
    for mu in order[1:]:
        depth = below[mu]
        # (lam+rho, lam+rho) - (mu+rho, mu+rho) = (lam-mu, lam+mu+2rho)
        denom = sum(c * d[j] * (lam[j] + mu[j] + 2) for j, c in enumerate(depth) if c)
        num = 0
        for root, dyn in roots:
            w = tuple(a + b for a, b in zip(mu, dyn))
            while True:
                m = mult.get(group.to_dominant(w))
                if not m:
                    break
                num += m * rs.pair(w, root)
                w = tuple(a + b for a, b in zip(w, dyn))
        q, r = divmod(2 * num, denom)
        if r:
            raise ArithmeticError(f"Freudenthal recursion not integral at {mu} for {rs.name}{lam}")
        mult[mu] = q
    return tuple((mu, mult[mu]) for mu in order)


def dominant_multiplicities(group: GroupLike, weight: Sequence[int]) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of the irreducible V(weight)."""
    group = Group.of(group)
    parts = group.split(weight)
    for lam in parts:
        if any(c < 0 for c in lam):
            raise ValueError(f"weight {tuple(weight)} is not dominant")
    result: dict[Weight, int] = {(): 1}
    for rs, lam in zip(group.factors, parts):
        factor = _freudenthal(rs, lam)
        result = {a + mu: m * n for a, m in result.items() for mu, n in factor}
    return result


def irreducible_character(group: GroupLike, weight: Sequence[int]) -> "Character":
    """Full weight multiset of the irreducible with highest weight ``weight``."""
    from .characters import Character, check_size

    group = Group.of(group)
    weight = tuple(weight)
    dim = weyl_dimension(group, weight)
    check_size(dim, f"irreducible {group.name}{list(weight)} of dimension {dim}")
    weights: dict[Weight, int] = {}
    for mu, m in dominant_multiplicities(group, weight).items():
        for nu in group.orbit(mu):
            weights[nu] = m
    return Character(group, weights, check=False)


def dominant_weights_up_to_dim(rs: RootSystem, d: int) -> Iterator[Weight]:
    """Dominant weights whose Weyl dimension is at most d.

    Dimension is strictly increasing in every Dynkin coordinate, so each
    coordinate loop stops as soon as the dimension (with the remaining
    coordinates zero) exceeds d.
    """
    r = rs.rank

    def search(prefix: list[int]) -> Iterator[Weight]:
        i = len(prefix)
        if i == r:
            yield tuple(prefix)
            return
        v = 0
        while True:
            trial = tuple(prefix + [v] + [0] * (r - i - 1))
            if _simple_dimension(rs, trial) > d:
                return
            yield from search(prefix + [v])
            v += 1

    yield from search([])


def _dominant_weights_of_dim(rs: RootSystem, d: int) -> Iterator[Weight]:
    return (lam for lam in dominant_weights_up_to_dim(rs, d) if _simple_dimension(rs, lam) == d)


def _enumeration_types() -> list[RootSystem]:
    # C2 is isomorphic to B2; keep one representative
    out = []
    for letter, ranks in SUPPORTED_TYPES.items():
        for rank in ranks:
            if (letter, rank) == ("C", 2):
                continue
            out.append(root_system(letter, rank))
    return out


def enumerate_irreps_of_dim(d: int) -> list[tuple[Group, Weight]]:
    """All irreducibles of dimension d over supported simple and two-factor groups.

    Two-factor products are unordered and both factors are nontrivial.  For
    d == 1 only the trivial representation of the trivial group is returned.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if d == 1:
        return [(Group(()), ())]
    simple: list[tuple[RootSystem, Weight, int]] = []
    types = _enumeration_types()
    for rs in types:
        for div in _divisors(d):
            if div == 1:
                continue
            for lam in _dominant_weights_of_dim(rs, div):
                simple.append((rs, lam, div))
    simple.sort(key=lambda e: (e[2], _type_key(e[0]), e[1]))
    entries: list[tuple[Group, Weight]] = [
        (Group((rs,)), lam) for rs, lam, dim in simple if dim == d
    ]
    proper = [e for e in simple if e[2] < d]
    for i, (rs1, lam1, d1) in enumerate(proper):
        for rs2, lam2, d2 in proper[i:]:
            if d1 * d2 == d:
                entries.append((Group((rs1, rs2)), lam1 + lam2))
    return entries


def _type_key(rs: RootSystem) -> tuple[int, int]:
    return ("ABCDG".index(rs.letter), rs.rank)


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


