import pytest

from adjfx.finite import BOOL, NOTHING, STAR, UNIT, Z2, FiniteFunction, Inl, Inr, Seq, Some, product
from adjfx.laws import check_monad_laws
from adjfx.monads import BASE_MONADS, IDENTITY, LIST3, OPTION, WRITER_BOOL_AND, Z4_ADD
from adjfx.oracles import (
    check_agreement, oracle_error, oracle_reader, oracle_state, oracle_writer,
)
from adjfx.suites import SuiteConfig, oracle_for, translation_pairs
from adjfx.translation import translate

ORACLES = {
    "state": lambda m: oracle_state(m, Z2),
    "writer": lambda m: oracle_writer(m, Z4_ADD),
    "reader": lambda m: oracle_reader(m, Z2),
    "error": lambda m: oracle_error(m, Z2),
}


@pytest.mark.parametrize("base", list(BASE_MONADS))
@pytest.mark.parametrize("kind", list(ORACLES))
def test_oracle_is_a_monad(kind, base, small_universe):
    r = check_monad_laws(ORACLES[kind](BASE_MONADS[base]), small_universe)
    assert r.passed, r.summary()


def test_state_unit():
    g = oracle_state(OPTION, Z2).unit(BOOL, True)
    assert g.items() == [(0, Some((True, 0))), (1, Some((True, 1)))]


def test_state_join_threads_the_state():
    o = oracle_state(IDENTITY, Z2)
    sx = o.lift_type(BOOL)
    inner = FiniteFunction.tabulate(Z2, product(BOOL, Z2), lambda s: (s == 1, 1 - s))
    outer = FiniteFunction.tabulate(Z2, product(sx, Z2), lambda s: (inner, s))
    assert o.mult(BOOL, outer).items() == [(0, (False, 1)), (1, (True, 0))]


def test_writer_join_combines_logs():
    o = oracle_writer(OPTION, Z4_ADD)
    assert o.mult(BOOL, Some((Some((True, 2)), 3))) == Some((True, 1))
    assert o.mult(BOOL, Some((NOTHING, 3))) == NOTHING


def test_reader_identity_is_diagonal():
    o = oracle_reader(IDENTITY, Z2)
    rows = [FiniteFunction.tabulate(Z2, BOOL, lambda e2, e=e: e == e2) for e in Z2]
    h = FiniteFunction.tabulate(Z2, o.lift_type(BOOL), lambda e: rows[e])
    assert o.mult(BOOL, h).items() == [(0, True), (1, True)]


def test_error_join():
    o = oracle_error(LIST3, Z2)
    assert o.unit(BOOL, True) == Seq((Inr(True),))
    z = Seq((Inl(1), Inr(Seq((Inr(False),)))))
    assert o.mult(BOOL, z) == Seq((Inl(1), Inr(False)))


def test_writer_identity_is_plain_writer():
    o = oracle_writer(IDENTITY, Z4_ADD)
    assert o.mult(UNIT, ((STAR, 1), 2)) == (STAR, 3)


CFG = SuiteConfig()
PAIRS = [(adj, m, tbar) for adj, m, tbar in translation_pairs(CFG)]


@pytest.mark.parametrize("pair", PAIRS, ids=lambda p: f"{p[0].name}-{p[1].name}")
def test_derived_matches_oracle(pair, small_universe):
    adj, m, tbar = pair
    r = check_agreement(translate(adj, tbar), oracle_for(adj, m), small_universe)
    assert r.passed, r.summary()
    assert set(r.names) == {"same object action", "unit agrees", "map agrees", "join agrees"}


def test_agreement_detects_a_mismatch(small_universe):
    r = check_agreement(oracle_writer(WRITER_BOOL_AND, Z4_ADD),
                        oracle_writer(OPTION, Z4_ADD), small_universe)
    assert not r.passed
