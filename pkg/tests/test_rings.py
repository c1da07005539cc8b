from __future__ import annotations

import numpy as np
import pytest

from ringiso import isomorphic
from sdfa.corpus import CorpusSpec, build_corpus, galois_field
from sdfa.errors import ConstructionError, DomainError, InputError, ResourceError
from sdfa.ideals import enumerate_ideals, ideal_generated, zero_ideal
from sdfa.rings import (
    FiniteRing,
    ModuleSpec,
    RingHom,
    check_ring_axioms,
    hom_by_name,
    localize,
    make_amalgamation,
    make_galois_field,
    make_idealization,
    make_poly_quotient,
    make_product,
    make_quotient,
    make_zn,
    ring_queries,
)


def test_zn_tables_are_modular_arithmetic():
    R = make_zn(12)
    a, b = np.meshgrid(np.arange(12), np.arange(12), indexing="ij")
    assert np.array_equal(R.add, (a + b) % 12)
    assert np.array_equal(R.mul, (a * b) % 12)
    assert (R.zero, R.one, R.characteristic) == (0, 1, 12)


@pytest.mark.parametrize("n", [0, 1, -3])
def test_zn_rejects_small_moduli(n):
    with pytest.raises(ConstructionError):
        make_zn(n)


def test_product_encoding_is_lexicographic():
    R = make_product([make_zn(2), make_zn(3)])
    assert [R.render(i) for i in range(6)] == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2]]
    assert R.parse_element((1, 2)) == 5
    assert R.mul[R.parse_element((1, 2)), R.parse_element((1, 2))] == R.parse_element((1, 1))
    assert isomorphic(R, make_zn(6))


def test_poly_quotient_dual_numbers():
    R = make_poly_quotient(3, [0, 0, 1])
    x = R.parse_element([0, 1])
    assert R.order == 9
    assert R.mul[x, x] == R.zero
    assert R.parse_element([2]) == 2  # padded constant
    assert sorted(R.nilpotents) == sorted(R.parse_element([0, c]) for c in range(3))


def test_galois_field_of_order_four():
    F = make_galois_field(2, [1, 1, 1])
    assert F.order == 4 and F.is_field and F.characteristic == 2
    assert not F.is_boolean
    with pytest.raises(ConstructionError):
        make_galois_field(2, [1, 0, 1])  # X^2 + 1 = (X + 1)^2


def test_ring_queries_examples():
    q = ring_queries(make_zn(4))
    assert q["nilpotents"] == [0, 2] and q["units"] == [1, 3]
    assert q["characteristic"] == 4 and q["is_local"]
    assert ring_queries(make_product([make_zn(2), make_zn(2)]))["is_boolean"]
    F4 = galois_field(4)
    q = ring_queries(make_product([F4, F4]))
    assert q["is_von_neumann_regular"] and q["characteristic"] == 2 and not q["is_boolean"]
    assert ring_queries(make_zn(12))["jacobson_radical"].members.tolist() == [0, 6]


def test_every_corpus_ring_satisfies_the_axioms():
    for R in build_corpus(CorpusSpec(zn_max=30)):
        assert check_ring_axioms(R) is None, R.label


def test_large_ring_axioms_are_spot_checked():
    R = make_product([make_zn(9), make_zn(10)])
    assert R.order == 90
    assert check_ring_axioms(R, samples=2000) is None


def test_flipped_mul_entry_is_caught():
    R = make_zn(6)
    mul = R.mul.copy()
    mul[2, 3] = 1
    bad = FiniteRing(R.add.copy(), mul, zero=0, one=1, label="mutant")
    violation = check_ring_axioms(bad)
    assert violation is not None
    name, witness = violation
    assert name and witness


def test_quotient_of_z_mn_is_z_n():
    for m, n in [(3, 4), (2, 6), (5, 3), (4, 4)]:
        R = make_zn(m * n)
        Q, proj = make_quotient(R, ideal_generated(R, [n]))
        assert Q.order == n
        assert isomorphic(Q, make_zn(n))
        assert proj.axiom_violation() is None
        assert proj(R.one) == Q.one


def test_quotient_representatives_are_least_indices():
    R = make_zn(12)
    Q, proj = make_quotient(R, ideal_generated(R, [4]))
    assert [Q.render(i) for i in range(Q.order)] == [0, 1, 2, 3]
    assert proj(7) == 3


def test_quotient_by_whole_ring_is_refused():
    R = make_zn(6)
    with pytest.raises(DomainError):
        make_quotient(R, ideal_generated(R, [1]))


def test_localization_examples():
    L, h = localize(make_zn(6), [1, 3])
    assert L.order == 2 and L.info["idempotent"] == 3 and isomorphic(L, make_zn(2))
    L, h = localize(make_zn(12), [1, 4])
    assert [L.render(i) for i in range(L.order)] == [0, 4, 8]
    assert isomorphic(L, make_zn(3))
    assert h.axiom_violation() is None


def test_localization_at_units_changes_nothing():
    for R in [make_zn(5), make_zn(9), make_product([make_zn(2), make_zn(3)])]:
        L, h = localize(R, sorted(R.units))
        assert isomorphic(L, R)
        assert h.is_injective


def test_localization_input_errors():
    R = make_zn(12)
    with pytest.raises(InputError):
        localize(R, [1, 0])
    with pytest.raises(InputError):
        localize(R, [1, 2])  # 4 missing
    with pytest.raises(InputError):
        localize(R, [4])


def test_idealization_module_squares_to_zero():
    for R in [make_zn(3), make_zn(4), galois_field(4)]:
        T = make_idealization(R, ModuleSpec(R))
        nm = T.info["module_ring"].order
        module = [R.zero * nm + m for m in range(nm)]
        assert all(T.mul[x, x] == T.zero for x in module)
        assert T.order == R.order ** 2


def test_idealization_with_quotient_module():
    R = make_zn(12)
    T = make_idealization(R, ModuleSpec(R, ideal_generated(R, [4])))
    assert T.order == 48
    assert T.render(T.one) == [1, 0]
    assert check_ring_axioms(T) is None


def test_amalgamation_degenerate_cases():
    A = make_zn(4)
    f = hom_by_name(A, A, "id")
    diag = make_amalgamation(A, A, f, zero_ideal(A))
    assert isomorphic(diag, A)
    full = make_amalgamation(A, A, f, ideal_generated(A, [1]))
    assert isomorphic(full, make_product([A, A]))


def test_canonical_hom_and_its_failure():
    f = hom_by_name(make_zn(12), make_zn(4), "canonical")
    assert f.map.tolist() == [k % 4 for k in range(12)]
    with pytest.raises(ConstructionError):
        hom_by_name(make_zn(6), make_zn(4), "canonical")


def test_bad_hom_is_rejected():
    A, B = make_zn(4), make_zn(2)
    h = RingHom(A, B, [0, 1, 1, 1])
    assert h.axiom_violation() is not None
    with pytest.raises(ConstructionError):
        h.validate()


def test_order_cap_from_environment(monkeypatch):
    monkeypatch.setenv("SDFA_ORDER_CAP", "50")
    with pytest.raises(ResourceError):
        make_zn(51)
    make_zn(50)
    monkeypatch.setenv("SDFA_ORDER_CAP", "many")
    with pytest.raises(InputError):
        make_zn(3)


def test_default_order_cap_rejects_big_products():
    with pytest.raises(ResourceError):
        make_product([make_zn(64), make_zn(65)])


def test_corpus_ring_tables_have_distinct_elements():
    for R in build_corpus(CorpusSpec(zn_max=10)):
        assert len({repr(R.render(i)) for i in range(R.order)}) == R.order
        assert len(enumerate_ideals(R)) >= 2
