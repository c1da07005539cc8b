from __future__ import annotations

import json

import pytest

from sdfa.corpus import CorpusSpec, build_corpus, fields_corpus
from sdfa.errors import InputError
from sdfa.harness import REGISTRY, Tally, replay, run_all, run_property, uncovered
from sdfa.ideals import ideal_generated, zero_ideal
from sdfa.rings import FiniteRing, make_zn

TINY = CorpusSpec(zn_max=12, pair_order_cap=36, triple_order_cap=8)


@pytest.fixture(scope="module")
def tiny_corpus():
    return build_corpus(TINY)


def test_default_corpus_contents():
    labels = {R.label for R in build_corpus()}
    for must in ["zn(4)", "zn(9)", "prod(zn(3),zn(3))", "idealize(zn(3);mod=0)"]:
        assert must in labels
    assert "prod(gf(2,[1,1,1]),gf(2,[1,1,1]))" in labels
    assert len(labels) >= 300


def test_corpus_is_deterministic_and_seed_free():
    a = [R.label for R in build_corpus(TINY)]
    b = [R.label for R in build_corpus(CorpusSpec(**{**TINY.to_dict(), "field_orders": (4, 8, 9), "seed": 7}))]
    assert a == b


def test_zn_max_six():
    labels = [R.label for R in build_corpus(CorpusSpec(zn_max=6))]
    assert [f"zn({n})" for n in range(2, 7)] == [l for l in labels if l.startswith("zn(")]


def test_corpus_spec_validation(tmp_path):
    with pytest.raises(InputError):
        CorpusSpec.from_dict({"zn_max": 1})
    with pytest.raises(InputError):
        CorpusSpec.from_dict({"bogus": 1})
    with pytest.raises(InputError):
        CorpusSpec.from_dict({"include_products": "yes"})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        CorpusSpec.from_file(bad)
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"zn_max": 8, "field_orders": [4]}))
    assert CorpusSpec.from_file(good).field_orders == (4,)


def test_registry_is_complete():
    assert uncovered() == []
    assert len(REGISTRY) >= 25
    assert all(p.description for p in REGISTRY.values())


def test_tiny_corpus_all_pass(tiny_corpus):
    results = run_all(tiny_corpus)
    assert len(results) == len(REGISTRY)
    failed = [(r.property_id, r.counterexample) for r in results if r.status == "fail"]
    assert failed == []


def test_fields_only_corpus_has_no_failures():
    results = run_all(fields_corpus())
    statuses = {r.status for r in results}
    assert "fail" not in statuses
    assert sum(r.status == "inapplicable" for r in results) >= 5


def test_unknown_property_ids():
    with pytest.raises(KeyError):
        run_property("thm-9.9-nothing", [make_zn(2)])
    with pytest.raises(InputError):
        run_all([make_zn(2)], only=["thm-9.9-nothing"])


def test_zero_ideal_property_counts_follow_corpus():
    r = run_property("thm-4.8-zn-zero-ideal", build_corpus(CorpusSpec(zn_max=60)))
    assert (r.status, r.checked_instances) == ("pass", 59)


def test_sampled_property_is_labelled(tiny_corpus):
    r = run_property("thm-4.4-sampled", tiny_corpus)
    assert r.sampled and r.status == "pass"
    assert r.to_dict()["sampled"] is True


def _mutant() -> FiniteRing:
    R = make_zn(6)
    mul = R.mul.copy()
    mul[2, 3] = mul[3, 2] = 1
    return FiniteRing(R.add.copy(), mul, zero=0, one=1, label="mutant")


def test_flipped_table_entry_fails_ring_axioms():
    M = _mutant()
    r = run_property("ring-axioms", [make_zn(5), M])
    assert r.status == "fail"
    cex = r.counterexample
    assert cex["ring"] == "mutant" and cex["decider"] == "ring_axioms"
    assert replay(cex, ring=M)


def test_counterexample_replay_from_label():
    R = make_zn(8)
    I = ideal_generated(R, [4])
    t = Tally()
    t.check(False, R, I, decider="sdf", expected=True)
    assert replay(t.counterexample)
    t2 = Tally()
    t2.check(False, R, zero_ideal(R), decider="sdf", expected=False)
    assert not replay(t2.counterexample)  # {0} of Z_8 really is not sdf, so "expected False" is not a failure


def test_witness_replay_kinds():
    from sdfa.dsl import parse_ring

    R = parse_ring("prod(zn(3),zn(3),zn(3))")
    I = ideal_generated(R, [R.parse_element((0, 0, 1))])
    a, b = R.parse_element((2, 1, 0)), R.parse_element((1, 1, 0))
    t = Tally()
    t.check(False, R, I, decider="sdf_counterexample", witness=(a, b))
    # the pair does violate the definition, so a claimed failure to certify does not reproduce
    assert not replay(t.counterexample)


def test_results_serialize(tiny_corpus):
    r = run_property("ex-3.2c-counterexample", tiny_corpus)
    d = r.to_dict()
    assert set(d) == {"property_id", "status", "checked_instances", "counterexample", "sampled", "description"}
    assert json.loads(json.dumps(d)) == d
