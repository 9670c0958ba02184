import pytest

from linedetect.characters import DecompResult, Functor
from linedetect.detector import (
    GroupSpec,
    build_rep_character,
    classify_gl9,
    detect,
    rs_spec,
    verify_lr_oracle,
    verify_plethysm_oracle,
    verify_rs_detection,
    verify_theorem_a1,
    verify_theorem_a2,
    verify_theorem_schur,
)
from linedetect.partitions import Partition, partitions_up_to

SO9 = "B4:[1,0,0,0]"
RS33 = "A2:[1,0];A2:[1,0]"


class TestGroupSpec:
    def test_parse(self):
        spec = GroupSpec.parse("A2:[1,0]; A1:[2]")
        assert spec.weight == (1, 0, 2) and spec.dimension == 9
        assert spec.lie_type == "sl3xsl2"
        assert GroupSpec.parse(str(spec)) == spec

    def test_parse_schur(self):
        spec = GroupSpec.parse("A2:schur=(2,1)")
        assert spec.weight == (1, 1) and spec.dimension == 8
        assert str(spec) == "A2:schur=(2,1)"

    @pytest.mark.parametrize("text", ["A2:[1]", "A2:[1,-1]", "B4:schur=(1)", "A2[1,0]", "E6:[1,0,0,0,0,0]"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            GroupSpec.parse(text)

    def test_schur_trivial_rank(self):
        assert GroupSpec.schur((3,), 1).factors == ()

    def test_build_characters(self):
        assert sorted(build_rep_character(GroupSpec.parse("A1:[8]")).weights) == [(w,) for w in range(-8, 9, 2)]
        char = build_rep_character(GroupSpec.parse(RS33))
        assert len(char) == 9 and all(len(w) == 4 for w in char.weights)
        so9 = build_rep_character(GroupSpec.parse(SO9))
        assert so9.dim == 9 and so9[(0, 0, 0, 0)] == 1

    def test_rs_shape(self):
        assert GroupSpec.parse(RS33).is_rs_shape
        assert GroupSpec.parse("A1:[2];A1:[2]").is_rs_shape
        assert not GroupSpec.parse("A1:[8]").is_rs_shape
        assert not GroupSpec.parse("A1:[1];A1:[1]").is_rs_shape


class TestDetect:
    def test_sl2_in_gl9(self):
        rep = detect(GroupSpec.parse("A1:[8]"), "sym3")
        assert rep.detected and rep.trivial_mult == 1 and rep.rep_dimension == 9

    def test_so9(self):
        rep = detect(GroupSpec.parse(SO9), "sym3")
        assert not rep.detected and rep.trivial_mult == 0
        assert rep.summary() == "not detected, trivial multiplicity 0"

    def test_sl3_squared(self):
        rep = detect(GroupSpec.parse(RS33), "sym3")
        assert rep.detected and rep.rs_factorization

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_sym_k_sl3(self, k):
        assert detect(GroupSpec.parse(f"A2:[{k},0]"), "tensor3").detected

    def test_schur_not_detected(self):
        assert not detect(GroupSpec.schur((1,), 4), "tensor3").detected
        assert not detect(GroupSpec.schur((1, 1), 7), "tensor3").detected
        assert detect(GroupSpec.schur((1,), 3), "tensor3").detected

    @pytest.mark.parametrize("spec", ["A1:[4]", "A2:[2,0]", RS33, "A1:[2];A2:[1,0]", "A2:[1,1]"])
    @pytest.mark.parametrize("functor", ["sym3", "ext3", "tensor3", "sym2", "tensor4"])
    def test_methods_agree(self, spec, functor):
        g = GroupSpec.parse(spec)
        a = detect(g, functor, method="character")
        b = detect(g, functor, method="weyl")
        assert a.decomposition == b.decomposition
        assert a.trivial_mult == b.trivial_mult

    @pytest.mark.parametrize("spec", ["A1:[4]", "A2:[2,0]", RS33, "A2:schur=(2,1)", "A1:[1];A2:[0,1]"])
    def test_monotone_and_dual_invariant(self, spec):
        g = GroupSpec.parse(spec)
        t3 = detect(g, "tensor3").trivial_mult
        assert t3 >= detect(g, "sym3").trivial_mult
        for f in ("sym3", "ext3", "tensor3"):
            assert detect(g, f).trivial_mult == detect(g.dual(), f).trivial_mult

    def test_degree_obstruction(self):
        for parts in partitions_up_to(4):
            lam = Partition(parts)
            for m in range(max(2, lam.length), 8):
                if (3 * lam.size) % m:
                    assert detect(GroupSpec.schur(lam, m), "tensor3").trivial_mult == 0

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            detect(GroupSpec.parse("A1:[1]"), "sym3", method="magic")

    def test_report_dict(self):
        rep = detect(GroupSpec.parse("A1:[8]"), Functor("sym", 3))
        d = rep.to_dict()
        assert d["trivial_mult"] == "1" and d["detected"] is True
        assert d["terms"][-1] == {"weight": [0], "mult": "1"}
        assert DecompResult.from_json_obj(d, rep.decomposition.ambient) == rep.decomposition
        assert len(rep.decomposition_digest) == rep.digest_size < d["n_terms"]


class TestSuites:
    def test_gl9(self):
        rep = classify_gl9()
        assert rep.passed
        by = {(r["group"], tuple(r["weight"])): r for r in rep.rows}
        assert by[("A1", (8,))]["branch"] == "sl2"
        assert not by[("B4", (1, 0, 0, 0))]["detected"]
        assert not by[("A8", (1, 0, 0, 0, 0, 0, 0, 0))]["detected"]
        a1a2 = by[("A1xA2", (2, 1, 0))]
        assert a1a2["detected"] and a1a2["rs_factorization"]

    def test_a1(self):
        rep = verify_theorem_a1(13)
        assert rep.passed and len(rep.rows) == 12
        assert [r["n"] for r in rep.rows if r["detected"]] == [5, 9, 13]

    def test_a2(self):
        rep = verify_theorem_a2(3)
        assert rep.passed
        assert rep.rows[1]["witness"] == "(2,2)" and rep.rows[1]["witness_is_dual"]

    def test_schur_small(self):
        rep = verify_theorem_schur(size_max=2)
        assert rep.passed
        explore = {(r["lambda"], r["m"]): r for r in rep.extra["exploratory"]}
        assert explore[("(1)", 3)]["detected"]

    def test_rs(self):
        assert verify_rs_detection((1, 2, 3)).passed
        assert rs_spec(1).factors == ()
        with pytest.raises(ValueError):
            verify_rs_detection(5)

    def test_oracles(self):
        assert verify_plethysm_oracle().passed
        assert verify_lr_oracle(size_max=3, m_max=4).passed
