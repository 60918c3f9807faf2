import pytest

from services.colie_service import (
    T0,
    T1,
    T_AT_ONE,
    TX,
    ab_tables,
    antisymmetry_defect,
    change_basis,
    co_jacobi_defect,
    colie_basis,
    d_cy,
    format_tag,
    parse_tag,
    tcl_coalgebra,
    wedge,
    wedge_coefficient,
)
from services.errors import InvalidInputError
from services.ihara_service import structure_tables
from services.linear import Combination
from services.words_service import lyndon_words


def test_parse_and_format_tags():
    assert parse_tag("T0:01") == (T0, "01")
    assert parse_tag("T@1:0011") == (T_AT_ONE, "0011")
    assert format_tag((TX, "011")) == "Tx:011"


@pytest.mark.parametrize("text", ["T2:01", "T0:10", "T0:", "01", "Tx:0a"])
def test_bad_tags_rejected(text):
    with pytest.raises(InvalidInputError):
        parse_tag(text)


def test_cobracket_of_weight_two_in_x1_basis():
    expected = wedge([((TX, "0"), (TX, "1"), 1), ((TX, "1"), (T_AT_ONE, "0"), 1)])
    assert d_cy(colie_basis((TX, "01"))) == expected
    assert d_cy(colie_basis((T_AT_ONE, "01"))).is_zero()


def test_cobracket_of_weight_two_in_t01_basis():
    expected = wedge([((T1, "0"), (T0, "1"), 1)])
    assert d_cy(colie_basis((T0, "01"))) == expected
    assert d_cy(colie_basis((T1, "01"))) == expected
    assert d_cy(colie_basis((TX, "01")), basis="t01") == expected


@pytest.mark.parametrize("kind", [TX, T_AT_ONE, T0, T1])
def test_cobracket_vanishes_on_letters(kind):
    for letter in "01":
        assert d_cy(colie_basis((kind, letter))).is_zero()


def test_wedge_is_antisymmetric():
    w = wedge([((T0, "1"), (T1, "0"), 2)])
    assert wedge_coefficient(w, (T0, "1"), (T1, "0")) == 2
    assert wedge_coefficient(w, (T1, "0"), (T0, "1")) == -2
    assert wedge([((T0, "1"), (T0, "1"), 5)]).is_zero()


def test_cobracket_pairs_with_structure_constants():
    tables = structure_tables(4)
    words = lyndon_words(4)
    for w in words:
        dx = d_cy(colie_basis((TX, w)))
        for u in words:
            for v in words:
                if len(u) + len(v) != len(w):
                    continue
                assert wedge_coefficient(dx, (TX, u), (T_AT_ONE, v)) == tables.beta.value(w, u, v)
                if u < v:
                    assert wedge_coefficient(dx, (TX, u), (TX, v)) == tables.alpha.value(w, u, v)


def test_co_jacobi_and_antisymmetry_on_all_tags():
    for w in lyndon_words(5):
        for kind in (TX, T_AT_ONE, T0, T1):
            t = colie_basis((kind, w))
            assert co_jacobi_defect(t).is_zero(), (kind, w)
            assert antisymmetry_defect(t).is_zero(), (kind, w)


def test_basis_change_round_trip():
    t = Combination({(TX, "01"): 2, (T_AT_ONE, "011"): -1, (TX, "1"): 3})
    t01 = change_basis(t, "t01")
    assert t01 == Combination({(T0, "01"): 2, (T0, "011"): -1, (T1, "011"): 1, (T0, "1"): 3})
    assert change_basis(t01, "x1") == t


def test_mixed_bases_rejected():
    with pytest.raises(InvalidInputError):
        d_cy(Combination({(TX, "01"): 1, (T0, "01"): 1}))


def test_ab_tables_in_weight_two():
    ab = ab_tables(2)
    assert ab.a.value("01", "0", "1") == 0
    assert ab.b.value("01", "0", "1") == 1
    assert ab.bp.value("01", "0", "1") == 1
    assert len(ab.ap) == 0


def test_ab_tables_relations():
    tables = structure_tables(5)
    ab = ab_tables(5)
    assert ab.a == tables.gamma
    for w, u, v, c in ab.a.entries():
        assert ab.ap.value(w, u, v) == -c
    for w in lyndon_words(5):
        for v in lyndon_words(5):
            assert ab.a.value(w, "0", v) == 0
            assert ab.a.value(w, v, "1") == 0
            assert ab.b.value(w, "1", v) == 0
            assert ab.b.value(w, v, "0") == 0


def test_tcl_parts():
    t01 = tcl_coalgebra(3, "t01")
    assert len(t01.tags) == 2 * len(lyndon_words(3))
    one = tcl_coalgebra(3, "one")
    assert all(kind == T_AT_ONE for kind, _ in one.tags)
    geom = tcl_coalgebra(3, "geom")
    assert all(kind == TX for kind, _ in geom.tags)
    assert geom.cobracket[(TX, "01")] == wedge([((TX, "0"), (TX, "1"), 1)])
    with pytest.raises(InvalidInputError):
        tcl_coalgebra(3, "other")


@pytest.mark.slow
def test_co_jacobi_on_all_tags_to_weight_six():
    for w in lyndon_words(6):
        if len(w) < 6:
            continue
        for kind in (TX, T_AT_ONE, T0, T1):
            assert co_jacobi_defect(colie_basis((kind, w))).is_zero(), (kind, w)
