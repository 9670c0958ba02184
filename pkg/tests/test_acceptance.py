"""End-to-end acceptance criteria, each with its runtime budget.

Every test prints one PASS/FAIL line (visible without ``-s``).  Memo caches
are cleared first so each criterion is timed cold.
"""
from __future__ import annotations

import time
from typing import Callable

import pytest

import linedetect.characters
import linedetect.liealg
import linedetect.lr
import linedetect.partitions
from linedetect.detector import (
    classify_gl9,
    verify_lr_oracle,
    verify_plethysm_oracle,
    verify_rs_detection,
    verify_theorem_a1,
    verify_theorem_a2,
    verify_theorem_schur,
)
from linedetect.partitions import Partition, partitions_up_to, verify_corollary_identities
from linedetect.properties import run_property_suite

MODULES = (linedetect.partitions, linedetect.liealg, linedetect.characters, linedetect.lr)


@pytest.fixture(autouse=True)
def cold_caches():
    for mod in MODULES:
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def run_criterion(capsys, number: int, title: str, limit: float, check: Callable[[], list[str]]) -> None:
    start = time.perf_counter()
    problems = check()
    elapsed = time.perf_counter() - start
    if elapsed >= limit:
        problems.append(f"took {elapsed:.2f}s, budget {limit}s")
    status = "PASS" if not problems else "FAIL"
    with capsys.disabled():
        print(f"\n[acceptance {number}] {status} {title} ({elapsed:.2f}s / {limit:g}s)")
        for p in problems:
            print(f"    {p}")
    assert not problems


def test_1_sl2_sym3_detection(capsys):
    def check():
        rep = verify_theorem_a1(13)
        out = list(rep.failures)
        if [r["n"] for r in rep.rows] != list(range(2, 14)):
            out.append("n range is not 2..13")
        if [r["n"] for r in rep.rows if r["detected"]] != [5, 9, 13]:
            out.append("detected set is not {5, 9, 13}")
        out += [f"n={r['n']}: routes disagree" for r in rep.rows if r["character_mult"] != r["closed_form_mult"]]
        return out

    run_criterion(capsys, 1, "Sym^3 detects Sym^(n-1)(SL2) exactly for n = 5, 9, 13 by both routes", 10, check)


def test_2_bounded_partition_identities(capsys):
    def check():
        rep = verify_corollary_identities(300)
        out = list(rep.failures)
        if len(rep.rows) != 300:
            out.append(f"expected 300 values of l, got {len(rep.rows)}")
        return out

    run_criterion(capsys, 2, "600 bounded-partition identities for l = 1..300", 5, check)


def test_3_sym_k_sl3_tensor_cube(capsys):
    def check():
        rep = verify_theorem_a2(6)
        out = list(rep.failures)
        for r in rep.rows:
            if not (r["trivial_mult"] >= 1 and r["witness_is_dual"] and r["witness_in_pieri"]):
                out.append(f"k={r['k']}: {r}")
        if [r["k"] for r in rep.rows] != list(range(1, 7)) or rep.rows[-1]["n"] != 28:
            out.append("k range is not 1..6")
        return out

    run_criterion(capsys, 3, "tensor cube detects Sym^k(SL3) for k = 1..6 with the (k,k) witness", 60, check)


def test_4_schur_functors_not_detected(capsys):
    def check():
        rep = verify_theorem_schur(size_max=4, m_window=3)
        out = list(rep.failures)
        expected = {(str(Partition(p)), m) for p in partitions_up_to(4) if p
                    for m in range(3 * len(p) + 1, 3 * len(p) + 4)}
        seen = {(r["lambda"], r["m"]) for r in rep.rows}
        if seen != expected:
            out.append(f"covered {len(seen)} (lambda, m) pairs, expected {len(expected)}")
        out += [f"{r['lambda']}, m={r['m']}" for r in rep.rows if r["trivial_mult"] != 0]
        return out

    run_criterion(capsys, 4, "tensor cube never detects S_lam(SL_m) for |lam| <= 4, 3l < m <= 3l+3", 120, check)


def test_5_dimension_nine(capsys):
    def check():
        rep = classify_gl9()
        out = list(rep.failures)
        by = {(r["group"], tuple(r["weight"])): r for r in rep.rows}
        types = {r["lie_type"] for r in rep.rows}
        for t in ("sl2", "sl3xsl3", "sl2xsl2", "so9"):
            if t not in types:
                out.append(f"missing Lie type {t}")
        if not by.get(("A1", (8,)), {}).get("detected"):
            out.append("A1 Sym^8 not detected")
        for key in [("B4", (1, 0, 0, 0)), ("A8", (1, 0, 0, 0, 0, 0, 0, 0))]:
            if by.get(key, {"detected": True})["detected"]:
                out.append(f"{key} should not be detected")
        for (group, w), r in by.items():
            if "x" in group and not (r["detected"] and r["rs_factorization"]):
                out.append(f"{group} {w}: two-factor entry not detected with rs_factorization")
            if r["detected"] and r["branch"] not in ("sl2", "RS(GL3xGL3)"):
                out.append(f"{group} {w}: detected outside the allowed cases")
        return out

    run_criterion(capsys, 5, "every 9-dimensional irreducible: Sym^3 detects only sl2 or 3x3 products", 60, check)


def test_6_plethysm_oracle(capsys):
    def check():
        rep = verify_plethysm_oracle((2, 3), 8)
        return list(rep.failures) + ([] if len(rep.rows) == 18 else ["expected 18 cases"])

    run_criterion(capsys, 6, "closed-form Sym^j(Sym^k) equals the character pipeline, j in {2,3}, k <= 8", 30, check)


def test_7_lr_oracle(capsys):
    def check():
        rep = verify_lr_oracle(4, 5)
        return list(rep.failures) + ([] if [r["m"] for r in rep.rows] == [1, 2, 3, 4, 5] else ["m range"])

    run_criterion(capsys, 7, "LR products equal character stripping for |lam|,|mu| <= 4, m <= 5", 60, check)


def test_8_property_suite(capsys):
    def check():
        rep = run_property_suite(seed=0)
        return list(rep.failures) + ([] if len(rep.rows) == 4 else ["expected 4 property checks"])

    run_criterion(capsys, 8, "property suite (Freudenthal, Newton, Gaussian, orthogonality)", 120, check)


def test_9_rs_detection(capsys):
    def check():
        rep = verify_rs_detection((2, 3))
        return list(rep.failures) + [f"m={r['m']}" for r in rep.rows if not r["detected"]]

    run_criterion(capsys, 9, "Sym^m detects SL_m x SL_m on std x std for m = 2, 3", 5, check)
