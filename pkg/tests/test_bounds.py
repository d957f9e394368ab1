import pytest
from hypothesis import given
from hypothesis import strategies as st

from superschur import catalog
from superschur.bounds import (
    commutator_bound,
    heisenberg_multiplier_formula,
    moneyhun_bound,
    nayak_bound,
    pair_multiplier_bound,
)
from superschur.checks import (
    HypothesisUnmet,
    algebra_bound_report,
    check_defect_one_characterization,
    check_pair_defect_one,
    complemented_pairs,
    defect_t,
    defect_t_pair,
    is_heisenberg_1_0,
    pair_bound_report,
)
from superschur.core import GradedSubspace, center, commutator_subspace, is_nilpotent
from superschur.homology import multiplier_dim
from superschur.pairs import PairPresentation, UnsupportedPair

from conftest import valid_algebras


def test_nayak_examples():
    assert nayak_bound(3, 0) == 3 == moneyhun_bound(3)
    assert nayak_bound(1, 1) == 2
    assert nayak_bound(0, 1) == 1


@given(st.integers(0, 30))
def test_nayak_reduces_to_lie_case(m):
    assert nayak_bound(m, 0) == moneyhun_bound(m) == m * (m - 1) // 2


def test_commutator_bound_examples():
    H = catalog.heisenberg_lie(1)
    nz = (H.m - center(H).sdim[0], H.n - center(H).sdim[1])
    assert nz == (2, 0)
    assert commutator_bound(nz, 0) == 1 == commutator_subspace(H).dim
    assert commutator_bound((0, 0), (3, 2)) == 0
    assert commutator_bound((1, 1), 1) == 4


@given(st.integers(0, 10), st.integers(0, 10))
def test_commutator_bound_lie_case(m, d):
    assert commutator_bound((m, 0), d) * 2 == m * (m + 2 * d - 1)


def test_pair_multiplier_bound_examples():
    assert pair_multiplier_bound((3, 0), 0, 1, True) == 2 == multiplier_dim(catalog.heisenberg_lie(1))[0]
    assert pair_multiplier_bound((1, 1), (1, 0), include_commutator=False) == 4
    assert pair_multiplier_bound((0, 0), (2, 2), 0, True) == 0


def test_defect_examples():
    assert defect_t(catalog.abelian(2, 3)) == 0
    assert defect_t(catalog.heisenberg_lie(1)) == 1
    assert defect_t(catalog.heisenberg_even(0, 1)) == 2
    assert defect_t(catalog.heisenberg_odd(1)) == nayak_bound(1, 2) - 2 == 3


def test_pair_defect_needs_complement():
    H = catalog.heisenberg_lie(1)
    with pytest.raises(UnsupportedPair):
        defect_t_pair(PairPresentation.from_labels(H, ["z"]))


def test_heisenberg_formula_examples():
    assert heisenberg_multiplier_formula("even", 1, 2) == 7
    assert heisenberg_multiplier_formula("odd", n=3) == 17
    assert heisenberg_multiplier_formula("even", 1, 0) == 2
    assert heisenberg_multiplier_formula("even", 0, 1) == 0
    assert heisenberg_multiplier_formula("odd", n=1) == 2
    with pytest.raises(ValueError):
        heisenberg_multiplier_formula("even", 0, 0)
    with pytest.raises(ValueError):
        heisenberg_multiplier_formula("odd", n=0)
    with pytest.raises(ValueError):
        heisenberg_multiplier_formula("mixed", 1, 1)


def test_pair_defect_one_examples():
    H = catalog.heisenberg_lie(1)
    res = check_pair_defect_one(PairPresentation(H, GradedSubspace.whole(H)))
    assert res.passed and res.applicable
    assert "Z(N,L)" in res.detail
    A = catalog.abelian(2, 1)
    res = check_pair_defect_one(PairPresentation(A, GradedSubspace.whole(A)))
    assert res.passed and not res.applicable
    with pytest.raises(HypothesisUnmet):
        S = catalog.nonabelian_11("solvable")
        check_pair_defect_one(PairPresentation(S, GradedSubspace.whole(S)))


def test_pair_defect_one_over_nilpotent_catalog_pairs():
    hits = 0
    for e in catalog.enumerate_catalog(5):
        if not is_nilpotent(e.algebra):
            continue
        for p in complemented_pairs(e.algebra):
            res = check_pair_defect_one(p)
            assert res.passed, (e.id, res.detail)
            hits += res.applicable
    assert hits > 0


def test_defect_one_characterization_examples():
    res = check_defect_one_characterization(catalog.heisenberg_lie(1))
    assert res.passed and res.witnesses == {"t": 1, "match": True}
    res = check_defect_one_characterization(catalog.heisenberg_odd(1))
    assert res.passed and res.witnesses == {"t": 3, "match": False}
    res = check_defect_one_characterization(catalog.abelian(3, 0))
    assert res.passed and res.witnesses["t"] == 0
    with pytest.raises(HypothesisUnmet):
        check_defect_one_characterization(catalog.nonabelian_11("solvable"))


def test_heisenberg_recognizer():
    assert is_heisenberg_1_0(catalog.heisenberg_lie(1))
    assert not is_heisenberg_1_0(catalog.abelian(3, 0))
    assert not is_heisenberg_1_0(catalog.heisenberg_even(0, 1))


def test_defect_zero_exactly_for_abelian_catalog_entries():
    for e in catalog.enumerate_catalog(6):
        t = defect_t(e.algebra)
        assert t >= 0
        assert (t == 0) == e.algebra.is_abelian(), e.id


@given(valid_algebras())
def test_algebra_report_slack_nonnegative(A):
    rep = algebra_bound_report(A)
    assert all(s >= 0 for s in rep.slack.values())
    assert rep.t == defect_t(A)
    d = rep.as_dict()
    assert set(d) == {"subject", "dims", "bounds", "t", "slack", "checks"}


@given(valid_algebras())
def test_pair_report_slack_nonnegative(A):
    for p in complemented_pairs(A):
        rep = pair_bound_report(p)
        assert all(s >= 0 for s in rep.slack.values())
        assert rep.t == defect_t_pair(p)
