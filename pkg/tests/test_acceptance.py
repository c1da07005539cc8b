"""Acceptance criteria; each test prints one PASS/FAIL line (exact match, zero tolerance)."""

from __future__ import annotations

import subprocess
import sys

import pytest

from sdfa.classify import (
    all_ideals_sdf_report,
    is_sdf_bruteforce,
    is_sdf_counterexample,
    is_weakly_prime,
    is_weakly_prime_counterexample,
    is_weakly_sdf_bruteforce,
    nil_zn_classification,
    product_ideal,
    sdf_in_Z,
    sdf_in_Z_closed_form,
    sdf_via_linear_system,
    weakly_not_sdf,
    idealization_ideal,
    zero_ideal_zn_closed_form,
)
from sdfa.corpus import build_corpus, galois_field
from sdfa.harness import Context, run_property
from sdfa.ideals import ideal_generated, ideal_from_members, nilradical, proper_ideals, unit_ideal, zero_ideal
from sdfa.rings import ModuleSpec, make_idealization, make_poly_quotient, make_product, make_zn


@pytest.fixture(scope="module")
def corpus():
    return build_corpus()


@pytest.fixture(scope="module")
def ctx(corpus):
    return Context(corpus)


@pytest.fixture
def line(capsys):
    def emit(number: int, ok: bool, text: str) -> None:
        with capsys.disabled():
            sys.stdout.write(f"\nAC{number:<2} {'PASS' if ok else 'FAIL'}  {text}\n")

    return emit


def passed(ctx, *ids):
    results = [run_property(i, ctx) for i in ids]
    return all(r.status == "pass" for r in results), results


def counts(results) -> str:
    return ", ".join(f"{r.property_id}={r.checked_instances}" for r in results)


def test_ac01_zero_ideal_of_zn(line):
    mismatches = []
    for n in range(2, 501):
        R = make_zn(n)
        if is_sdf_bruteforce(R, zero_ideal(R)).holds != zero_ideal_zn_closed_form(n):
            mismatches.append(n)
    line(1, not mismatches, f"{{0}} in Z_n vs closed form for 2<=n<=500: {len(mismatches)} mismatches")
    assert mismatches == []


def test_ac02_multiples_of_n_in_integers(line):
    mismatches = []
    for n in range(2, 201):
        R = make_zn(4 * n)
        reduced = is_sdf_bruteforce(R, ideal_generated(R, [n])).holds
        if reduced != sdf_in_Z_closed_form(n) or sdf_in_Z(n) != reduced:
            mismatches.append(n)
    line(2, not mismatches, f"nZ via (n) in Z_4n for 2<=n<=200: {len(mismatches)} mismatches")
    assert mismatches == []


def test_ac03_linear_system_oracle(corpus, line):
    total = disagree = 0
    for R in corpus:
        for I in proper_ideals(R):
            total += 1
            disagree += sdf_via_linear_system(R, I).holds != is_sdf_bruteforce(R, I).holds
    ok = disagree == 0 and len(corpus) >= 300
    line(3, ok, f"linear system vs brute force: {len(corpus)} rings, {total} ideals, {disagree} disagreements")
    assert ok


def test_ac04_radical_and_two_regimes(ctx, corpus, line):
    ok, results = passed(ctx, "thm-2.2-radical", "thm-2.4-char2-radical", "thm-2.5-two-in-ideal",
                         "thm-2.6-two-unit-prime")
    regimes = {R.two_status for R in corpus}
    labels = {R.label for R in corpus}
    mixes = {"zn(4)", "prod(zn(4),zn(6))", "prod(zn(9),gf(2,[1,1,1]))"} <= labels
    ok = ok and regimes == {"unit", "zero", "zero-divisor"} and mixes
    line(4, ok, f"{counts(results)}; regimes {sorted(regimes)}; Z_4, Z_4xZ_6, Z_9xF_4 present={mixes}")
    assert ok


def test_ac05_all_ideals_trichotomy(ctx, corpus, line):
    inconsistent = [R.label for R in corpus if not all_ideals_sdf_report(R)["consistent"]]
    F4 = galois_field(4)
    fixtures = {
        "Z_4": (make_zn(4), True, True),
        "Z_25": (make_zn(25), False, True),
        "Z_2^2": (make_product([make_zn(2), make_zn(2)]), True, True),
        "Z_3^2": (make_product([make_zn(3), make_zn(3)]), False, True),
        "F_4^2": (make_product([F4, F4]), True, True),
    }
    wrong = [k for k, (R, ap, anp) in fixtures.items()
             if (all_ideals_sdf_report(R)["all_proper"], all_ideals_sdf_report(R)["all_nonzero_proper"]) != (ap, anp)]
    Z3 = make_zn(3)
    R = make_product([Z3, Z3, Z3])
    I = ideal_generated(R, [R.parse_element((0, 0, 1))])
    a, b = R.parse_element((2, 1, 0)), R.parse_element((1, 1, 0))
    cube = is_sdf_counterexample(R, I, a, b) and not is_sdf_bruteforce(R, I).holds
    ok_props, results = passed(ctx, "thm-3.1-vnr-reduction", "thm-3.3-quasilocal", "thm-3.5-two-unit-vnr",
                               "thm-3.6-char2-vnr", "thm-3.7-two-zero-divisor-vnr", "thm-3.1-nil-necessary",
                               "ex-3.2-fixtures", "ex-3.2c-counterexample")
    ok = not inconsistent and not wrong and cube and ok_props
    least = [R.render(w) for w in is_sdf_bruteforce(R, I).witness]
    line(5, ok, f"{len(corpus)} rings, {len(inconsistent)} inconsistent clauses; fixtures wrong={wrong}; "
                f"Z_3^3 pair (2,1,0),(1,1,0) certified={cube} (lex-least {least})")
    assert ok


def test_ac06_product_idealization_amalgamation_rules(ctx, corpus, line):
    ok, results = passed(ctx, "thm-4.10-products-nonzero", "thm-4.11-products-degenerate", "thm-4.14-idealization",
                         "rem-4.17ab-idealization-zero", "rem-4.17c-conjecture", "ex-4.15-idealization-fixtures",
                         "thm-4.16-amalgamation", "ex-4.16-amalgamation-zero")
    by_id = {r.property_id: r.checked_instances for r in results}
    product_ideals = by_id["thm-4.10-products-nonzero"] + by_id["thm-4.11-products-degenerate"]
    idealizations = [R for R in corpus if R.kind == "idealization"]
    amalgamations = [R for R in corpus if R.kind == "amalgamation"]
    labels = {R.label for R in idealizations}
    needed = {"idealize(zn(3);mod=0)", "idealize(zn(4);mod=0)"} <= labels
    Z4 = make_zn(4)
    T = next(R for R in amalgamations if R.label == "amalg(zn(4),zn(4),hom=id,j=[1])")
    a_, _ = T.info["pairs"]
    zero_bowtie = ideal_from_members(T, [k for k in range(T.order) if a_[k] == Z4.zero])
    z4_fails = not is_sdf_bruteforce(T, zero_bowtie).holds
    ok = ok and product_ideals >= 50 and len(idealizations) >= 10 and needed and len(amalgamations) >= 5 and z4_fails
    line(6, ok, f"{counts(results)}; {len(idealizations)} idealizations, {len(amalgamations)} amalgamations; "
                f"{{0}}|x|Z_4 fails={z4_fails}")
    assert ok


def test_ac07_weakly_sdf_suite(ctx, line):
    Z4 = make_zn(4)
    R = make_product([Z4, Z4])
    I = ideal_generated(R, [R.parse_element((0, 2))])
    x, y = R.parse_element((2, 2)), R.parse_element((0, 1))
    ex52 = (is_weakly_sdf_bruteforce(R, I).holds and not is_sdf_bruteforce(R, I).holds
            and not is_weakly_prime(R, I).holds and is_weakly_prime_counterexample(R, I, x, y))
    nil_bad = []
    for n in range(2, 501):
        Zn = make_zn(n)
        nil = nilradical(Zn)
        forms = nil_zn_classification(n)
        if is_sdf_bruteforce(Zn, nil).holds != forms["sdf"]:
            nil_bad.append(n)
        elif nil.is_zero and weakly_not_sdf(Zn, nil) != forms["weakly_not_sdf"]:
            nil_bad.append(n)
    ok_props, results = passed(ctx, "thm-5.8-nil", "cor-5.9-structure", "ex-5.14-fixture")
    D = make_poly_quotient(2, [0, 0, 1])
    P = make_product([D, R])
    K = product_ideal(P, zero_ideal(D), I)
    ex514 = weakly_not_sdf(P, K)
    ok = ex52 and not nil_bad and ok_props and ex514
    line(7, ok, f"(0)x(2) in Z_4^2 verdicts={ex52}; nil(Z_n) n<=500 mismatches={nil_bad}; {counts(results)}; "
                f"Z_2[X]/(X^2) x Z_4^2 product weakly-not-sdf={ex514}")
    assert ok


def test_ac08_dual_numbers(line):
    rings = {2: make_poly_quotient(2, [0, 0, 1]), 3: make_poly_quotient(3, [0, 0, 1]),
             5: make_poly_quotient(5, [0, 0, 1]), 7: make_poly_quotient(7, [0, 0, 1])}
    F4 = galois_field(4)
    rings[4] = make_idealization(F4, ModuleSpec(F4))  # F_4[X]/(X^2) as F_4(+)F_4
    got = {q: is_sdf_bruteforce(R, zero_ideal(R)).holds for q, R in sorted(rings.items())}
    ok = got == {2: False, 3: True, 4: False, 5: False, 7: False}
    line(8, ok, f"{{0}} in K[X]/(X^2) sdf: {got}")
    assert ok


def test_ac09_polynomial_reduction(ctx, line):
    total = bad = 0
    for R in ctx.small(32):
        T = make_idealization(R, ModuleSpec(R))
        full = unit_ideal(T.info["module_ring"])
        for I in proper_ideals(R):
            sdf_R = is_sdf_bruteforce(R, I).holds
            expected = sdf_R if not I.is_zero else (R.is_reduced and sdf_R)
            total += 1
            bad += is_sdf_bruteforce(T, idealization_ideal(T, I, full)).holds != expected
    line(9, bad == 0, f"I(+)R in R(+)R for {len(ctx.small(32))} rings of order <= 32: {total} ideals, {bad} mismatches")
    assert bad == 0


def test_ac10_verify_is_byte_identical(line):
    cmd = [sys.executable, "-m", "sdfa.cli", "verify"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    ok = first.returncode == second.returncode == 0 and first.stdout == second.stdout and len(first.stdout) > 0
    line(10, ok, f"two default `sdfa verify` runs: exit {first.returncode}/{second.returncode}, "
                 f"{len(first.stdout)} bytes, identical={first.stdout == second.stdout}")
    assert ok
