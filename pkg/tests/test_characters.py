import random
from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from linedetect.characters import (
    SIZE_CAP_ENV,
    AmbientMismatchError,
    Character,
    DecompResult,
    Functor,
    NotACharacterError,
    SizeCapExceeded,
    adams,
    apply_functor,
    decompose,
    decompose_by_reflection,
    direct_sum,
    dual,
    ext_power,
    external_tensor,
    functor_decomposition,
    get_size_cap,
    size_cap,
    sym_power,
    tensor,
    tensor_power,
    trivial_multiplicity,
)
from linedetect.liealg import Group, irreducible_character, root_system
from linedetect.lr import kostka_weights
from linedetect.properties import random_character

A1, A2, B4 = root_system("A", 1), root_system("A", 2), root_system("B", 4)


def std_a1():
    return irreducible_character(A1, (1,))


def std_a2():
    return irreducible_character(A2, (1, 0))


def multiset_power(a: Character, d: int, exterior: bool) -> Character:
    """Sym^d / Lambda^d by summing weights over multisets / subsets of weight slots."""
    slots = [w for w, m in a.items() for _ in range(m)]
    pick = combinations if exterior else combinations_with_replacement
    out: dict = {}
    for idx in pick(range(len(slots)), d):
        w = tuple(map(sum, zip(*(slots[i] for i in idx)))) if slots else ()
        out[w] = out.get(w, 0) + 1
    return Character(a.ambient, out)


def reconstruct(res: DecompResult, group) -> Character:
    total = Character(group, {})
    for lam, m in res.terms.items():
        piece = irreducible_character(group, lam)
        for _ in range(m):
            total = direct_sum(total, piece)
    return total


class TestCharacterBasics:
    def test_negative_multiplicity_rejected(self):
        with pytest.raises(NotACharacterError):
            Character(A1, {(1,): -1})

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            Character(A2, {(1,): 1})

    def test_ambient_mismatch(self):
        with pytest.raises(AmbientMismatchError):
            tensor(std_a1(), std_a2())

    def test_trivial(self):
        t = Character.trivial(A2)
        assert dict(t.weights) == {(0, 0): 1} and t.dim == 1


class TestOperations:
    def test_tensor_examples(self):
        assert dict(tensor(std_a1(), std_a1()).weights) == {(2,): 1, (0,): 2, (-2,): 1}
        assert tensor(std_a2(), dual(std_a2()))[(0, 0)] == 3
        b = irreducible_character(B4, (1, 0, 0, 0))
        assert tensor(b, b)[(0, 0, 0, 0)] == 9

    def test_external_tensor(self):
        s2 = irreducible_character(A1, (2,))
        e = external_tensor(s2, s2)
        assert len(e) == 9 and e.ambient.rank == 2
        e = external_tensor(std_a2(), std_a2())
        assert len(e) == 9 and set(e.weights.values()) == {1}
        triv = Character.trivial(Group(()))
        assert dict(external_tensor(s2, triv).weights) == dict(s2.weights)

    def test_dual(self):
        for k in range(6):
            s = irreducible_character(A1, (k,))
            assert dual(s) == s
        assert dual(std_a2()) == kostka_weights((1, 1), 3)
        a = irreducible_character(A2, (2, 1))
        assert dual(dual(a)) == a

    def test_adams(self):
        s2 = irreducible_character(A1, (2,))
        assert adams(s2, 1) == s2
        assert dict(adams(s2, 2).weights) == {(4,): 1, (0,): 1, (-4,): 1}
        assert dict(adams(std_a2(), 3).weights) == {tuple(3 * c for c in w): 1 for w in std_a2().weights}
        with pytest.raises(ValueError):
            adams(s2, 0)

    def test_sym_ext_examples(self):
        assert dict(sym_power(std_a1(), 3).weights) == {(3,): 1, (1,): 1, (-1,): 1, (-3,): 1}
        assert decompose(sym_power(irreducible_character(A1, (2,)), 2)).terms == {(4,): 1, (0,): 1}
        b = sym_power(irreducible_character(B4, (1, 0, 0, 0)), 3)
        assert b.dim == 165 and trivial_multiplicity(b) == 0
        assert dict(ext_power(std_a2(), 3).weights) == {(0, 0): 1}
        s2 = irreducible_character(A1, (2,))
        assert ext_power(s2, 2) == s2

    def test_degree_bounds(self):
        with pytest.raises(ValueError):
            sym_power(std_a1(), 5)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_newton_against_multisets(self, d):
        rng = random.Random(d)
        for _ in range(5):
            a = random_character(rng, 8)
            assert sym_power(a, d) == multiset_power(a, d, exterior=False)
            assert ext_power(a, d) == multiset_power(a, d, exterior=True)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2**32))
    def test_dimension_multiplicative(self, seed):
        rng = random.Random(seed)
        a, b = random_character(rng, 20), random_character(rng, 20)
        if a.ambient != b.ambient:
            b = random_character(random.Random(seed), 20)
        if a.ambient == b.ambient:
            assert tensor(a, b).dim == a.dim * b.dim
        assert external_tensor(a, b).dim == a.dim * b.dim

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2**32))
    def test_pair_identities(self, seed):
        a = random_character(random.Random(seed), 30)
        sq, s2, e2, p2 = tensor(a, a), sym_power(a, 2), ext_power(a, 2), adams(a, 2)
        for w in set(sq.weights) | set(p2.weights):
            assert s2[w] + e2[w] == sq[w]
            assert s2[w] - e2[w] == p2[w]


class TestDecompose:
    def test_examples(self):
        assert decompose(tensor(std_a1(), std_a1())).terms == {(2,): 1, (0,): 1}
        assert decompose(sym_power(irreducible_character(A1, (4,)), 3)).terms == {
            (12,): 1, (8,): 1, (6,): 1, (4,): 1, (0,): 1}
        b = irreducible_character(B4, (1, 0, 0, 0))
        assert decompose(tensor(b, b)).terms == {(2, 0, 0, 0): 1, (0, 1, 0, 0): 1, (0, 0, 0, 0): 1}

    def test_trivial_multiplicity_examples(self):
        assert trivial_multiplicity(tensor(std_a2(), dual(std_a2()))) == 1
        assert trivial_multiplicity(sym_power(irreducible_character(A1, (8,)), 3)) == 1
        assert trivial_multiplicity(sym_power(irreducible_character(A1, (2,)), 3)) == 0

    def test_not_a_character(self):
        bad = Character(A1, {(2,): 1})
        with pytest.raises(NotACharacterError):
            decompose(bad)

    def test_stripping_order_is_descending(self):
        res = decompose(tensor_power(irreducible_character(A2, (1, 1)), 2))
        g = Group.of(A2)
        heights = [g.height(w) for w in res.terms]
        assert heights == sorted(heights, reverse=True)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2**32))
    def test_reconstruction_and_reflection_route(self, seed):
        a = random_character(random.Random(seed), 12)
        cube = tensor_power(a, 3)
        res = decompose(cube)
        assert reconstruct(res, a.ambient) == cube
        assert decompose_by_reflection(cube).terms == res.terms

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2**32), st.sampled_from(["sym", "ext", "tensor"]), st.integers(2, 4))
    def test_functor_routes_agree(self, seed, kind, d):
        a = random_character(random.Random(seed), 6 if d == 4 else 10)
        f = Functor(kind, d)
        assert functor_decomposition(a, f).terms == decompose(apply_functor(a, f)).terms

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 2**32))
    def test_duality_stability(self, seed):
        a = random_character(random.Random(seed), 15)
        assert trivial_multiplicity(sym_power(a, 3)) == trivial_multiplicity(sym_power(dual(a), 3))


class TestDecompResult:
    def test_json_schema(self):
        res = DecompResult({(0,): 1, (2,): 1}, Group.of(A1))
        assert res.to_json() == '{"terms":[{"weight":[2],"mult":"1"},{"weight":[0],"mult":"1"}]}'
        assert DecompResult({}).to_json() == '{"terms":[]}'

    def test_round_trip(self):
        res = decompose(tensor_power(irreducible_character(A2, (1, 1)), 3))
        assert DecompResult.from_json(res.to_json(), res.ambient) == res
        big = DecompResult({(0,): 10**40})
        assert DecompResult.from_json(big.to_json()) == big

    def test_dimension(self):
        res = decompose(tensor_power(std_a2(), 3))
        assert res.dimension() == 27

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            DecompResult({(0,): 0})


class TestFunctor:
    @pytest.mark.parametrize("text, kind, d", [("sym3", "sym", 3), ("ext2", "ext", 2), ("wedge3", "ext", 3),
                                               ("tensor4", "tensor", 4), ("Sym^3", "sym", 3)])
    def test_parse(self, text, kind, d):
        f = Functor.parse(text)
        assert (f.kind, f.degree) == (kind, d)
        assert Functor.parse(str(f)) == f

    @pytest.mark.parametrize("text", ["sym5", "foo3", "sym", ""])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            Functor.parse(text)


class TestSizeCap:
    def test_context_manager(self):
        with size_cap(10):
            with pytest.raises(SizeCapExceeded):
                tensor(irreducible_character(A2, (2, 0)), irreducible_character(A2, (2, 0)))
        assert get_size_cap() >= 10**6

    def test_env_var(self, monkeypatch):
        monkeypatch.setenv(SIZE_CAP_ENV, "5")
        assert get_size_cap() == 5
        with pytest.raises(SizeCapExceeded):
            irreducible_character(A2, (1, 1))
        monkeypatch.setenv(SIZE_CAP_ENV, "lots")
        with pytest.raises(ValueError):
            get_size_cap()
