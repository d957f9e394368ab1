import pytest

from superschur import catalog
from superschur.algebra_file import algebra_from_dict, algebra_to_dict
from superschur.core import center, commutator_subspace, nilpotency_class, validate
from superschur.homology import multiplier_dim


def ids(max_dim):
    return [e.id for e in catalog.enumerate_catalog(max_dim)]


def test_abelian_examples():
    assert catalog.abelian(0, 0).dim == 0
    assert multiplier_dim(catalog.abelian(2, 0))[0] == 1
    assert multiplier_dim(catalog.abelian(1, 1))[0] == 2


def test_heisenberg_lie_examples():
    assert multiplier_dim(catalog.heisenberg_lie(1))[0] == 2
    assert multiplier_dim(catalog.heisenberg_lie(2))[0] == 2 * 4 - 2 - 1
    for m in (1, 2, 3):
        H = catalog.heisenberg_lie(m)
        assert center(H).sdim == (1, 0)
        assert H.sdim == (2 * m + 1, 0)
    with pytest.raises(ValueError):
        catalog.heisenberg_lie(0)


def test_heisenberg_lie_is_even_family_at_n_zero():
    for m in (1, 2, 3):
        assert catalog.heisenberg_lie(m) == catalog.heisenberg_even(m, 0)


def test_heisenberg_even_examples():
    assert multiplier_dim(catalog.heisenberg_even(0, 1))[0] == 0
    assert multiplier_dim(catalog.heisenberg_even(1, 1))[0] == 3
    assert multiplier_dim(catalog.heisenberg_even(0, 2))[0] == 2
    assert catalog.heisenberg_even(2, 3).sdim == (5, 3)
    with pytest.raises(ValueError):
        catalog.heisenberg_even(0, 0)


def test_heisenberg_odd_examples():
    assert multiplier_dim(catalog.heisenberg_odd(1))[0] == 2
    assert multiplier_dim(catalog.heisenberg_odd(2))[0] == 7
    for n in (1, 2, 3):
        H = catalog.heisenberg_odd(n)
        assert H.sdim == (n, n + 1)
        assert nilpotency_class(H) == 2


def test_nonabelian_11_examples():
    S = catalog.nonabelian_11("solvable")
    assert nilpotency_class(S) is None and center(S).is_zero()
    H = catalog.nonabelian_11("heisenberg")
    assert multiplier_dim(H)[0] == 0
    L2 = commutator_subspace(H)
    assert L2 == center(H) and L2.sdim == (1, 0)
    assert H.same_structure(catalog.heisenberg_even(0, 1).relabel(["x"], ["y"]))
    with pytest.raises(ValueError):
        catalog.nonabelian_11("other")


def test_small_catalogs():
    small = ids(2)
    for want in ["abelian(2|0)", "abelian(1|1)", "abelian(0|2)", "Heven(0,1)", "solvable(1|1)"]:
        assert want in small
    three = ids(3)
    for want in ["H(1)", "Hodd(1)", "Heven(0,2)"]:
        assert want in three and want not in small
    assert any("+" in x for x in three)


def test_catalog_is_deterministic_and_unique():
    assert ids(6) == ids(6)
    assert len(set(ids(6))) == len(ids(6))
    with pytest.raises(ValueError):
        catalog.enumerate_catalog(0)


def test_every_entry_is_valid_and_within_budget():
    for e in catalog.enumerate_catalog(6):
        assert validate(e.algebra).ok, e.id
        assert e.dim <= 6


def test_expected_values_reproduce():
    for e in catalog.enumerate_catalog(6):
        if e.expected is not None:
            assert multiplier_dim(e.algebra)[0] == e.expected, e.id
            assert e.provenance


def test_heisenberg_entries_have_one_dim_derived_equal_to_center():
    for e in catalog.enumerate_catalog(6):
        if e.family.startswith("heisenberg"):
            L2 = commutator_subspace(e.algebra)
            assert L2.dim == 1 and L2 == center(e.algebra), e.id


def test_entries_serialize_round_trip():
    for e in catalog.enumerate_catalog(4):
        back, pair, name = algebra_from_dict(algebra_to_dict(e.algebra, e.id))
        assert back == e.algebra and pair is None and name == e.id


def test_build_family():
    assert catalog.build_family("heisenberg_even", 1, 1) == catalog.heisenberg_even(1, 1)
    assert catalog.build_family("nonabelian_11", kind="solvable") == catalog.nonabelian_11("solvable")
    with pytest.raises(ValueError):
        catalog.build_family("nope")
