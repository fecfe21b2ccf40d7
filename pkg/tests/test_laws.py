import pytest

from adjfx.faults import broken_list_mult, broken_option_map, swapped_strength
from adjfx.finite import BOOL, UNIT, Z2, Z3, Z4
from adjfx.laws import (
    LawReport, MAX_COUNTEREXAMPLES, check_functor_laws, check_monad_laws,
    check_monoid_laws, check_strength_laws, law,
)
from adjfx.monads import (
    BASE_MONADS, BOOL_AND, IDENTITY, LIST3, OPTION, WRITER_BOOL_AND, Z4_ADD,
    Monoid, canonical_strength,
)


def test_report_passes_only_with_cases_and_no_counterexamples():
    ok = law("x", [(1,)], lambda a: True)
    empty = law("y", [], lambda a: True)
    bad = law("z", [(i,) for i in range(20)], lambda a: False)
    assert ok.passed and not empty.passed and not bad.passed
    assert len(bad.counterexamples) == MAX_COUNTEREXAMPLES and bad.cases == 20
    assert not LawReport("r", [ok, empty]).passed
    assert LawReport("r", [ok]).passed


def test_raising_case_is_a_failure():
    c = law("boom", [(0,)], lambda a: 1 / a)
    assert not c.passed and "ZeroDivisionError" in c.counterexamples[0]


class TestFunctorLaws:
    def test_option_over_bool(self):
        assert check_functor_laws(OPTION, [BOOL]).passed

    def test_broken_map_fails_identity(self):
        r = check_functor_laws(broken_option_map(), [BOOL])
        assert r["identity"].counterexamples
        assert "identity" in r.failing()

    def test_identity_functor(self):
        r = check_functor_laws(IDENTITY, [UNIT])
        assert r.passed and all(c.cases >= 1 for c in r.checks)


class TestMonadLaws:
    def test_list_over_bool(self):
        assert check_monad_laws(LIST3, [BOOL]).passed

    def test_drop_first_join_breaks_associativity(self):
        r = check_monad_laws(broken_list_mult(), [BOOL])
        assert r["associativity"].counterexamples
        # the join is still natural
        assert r["multiplication naturality"].passed

    def test_identity_over_z3(self):
        assert check_monad_laws(IDENTITY, [Z3]).passed


@pytest.mark.parametrize("key", list(BASE_MONADS))
@pytest.mark.parametrize("pair", [(UNIT, BOOL), (BOOL, Z3), (Z2, Z3)])
def test_every_base_monad_is_lawful(key, pair):
    m = BASE_MONADS[key]
    assert check_functor_laws(m, list(pair)).passed
    assert check_monad_laws(m, list(pair)).passed


class TestStrength:
    def test_option_canonical(self):
        assert check_strength_laws(OPTION, canonical_strength(OPTION), [BOOL, Z3]).passed

    def test_list_canonical(self):
        assert check_strength_laws(LIST3, canonical_strength(LIST3), [BOOL]).passed

    @pytest.mark.parametrize("key", list(BASE_MONADS))
    def test_canonical_strength_for_every_base(self, key):
        m = BASE_MONADS[key]
        assert check_strength_laws(m, canonical_strength(m), [UNIT, BOOL]).passed

    def test_swapped_strength_fails_naturality(self):
        r = check_strength_laws(OPTION, swapped_strength(OPTION), [BOOL, Z3])
        assert r["naturality in X"].counterexamples
        assert not r.passed

    def test_owner_must_match(self):
        with pytest.raises(ValueError):
            check_strength_laws(LIST3, canonical_strength(OPTION), [BOOL])

    def test_canonical_strength_values(self):
        t = canonical_strength(WRITER_BOOL_AND)
        assert t.apply(BOOL, Z2, (True, False), 1) == ((True, 1), False)


class TestMonoids:
    @pytest.mark.parametrize("mon", [Z4_ADD, BOOL_AND])
    def test_registered(self, mon):
        assert check_monoid_laws(mon).passed

    def test_subtraction_is_not_a_monoid(self):
        sub = Monoid("(Z4,-)", Z4, lambda a, b: (a - b) % 4, 0)
        r = check_monoid_laws(sub)
        assert "left unit" in r.failing() and "associativity" in r.failing()
