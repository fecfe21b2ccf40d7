import pytest

from adjfx.adjunction import ShapeError, check_triangle_identities, induced_monad
from adjfx.finite import (
    BOOL, NOTHING, Z2, Z3, FiniteFunction, Some, exponential,
    option_type, product,
)
from adjfx.instances.state import (
    derived_state_join, lift_monad_trivially, make_state_adjunction,
)
from adjfx.monads import BASE_MONADS, IDENTITY, LIST3, OPTION
from adjfx.oracles import check_agreement, oracle_state
from adjfx.translation import translate

X3 = Z3  # values 7 do not fit Z3, so the join example uses a wider carrier


def tab(dom, cod, fn):
    return FiniteFunction.tabulate(dom, cod, fn)


def test_triangles(triangle_universe):
    assert check_triangle_identities(make_state_adjunction(Z2), triangle_universe).passed


def test_induced_unit_and_join():
    m = induced_monad(make_state_adjunction(Z2))
    assert m.unit(BOOL, False).items() == [(0, (False, 0)), (1, (False, 1))]


class TestTrivialLifting:
    def test_keeps_the_monad(self):
        adj = make_state_adjunction(Z2)
        tbar = lift_monad_trivially(OPTION, adj)
        y = adj.object(BOOL)
        assert tbar.lift_obj(y).carrier == option_type(BOOL)
        f = FiniteFunction.lazy(BOOL, BOOL, lambda b: not b)
        k = tbar.map_mor(adj.morphism(y, y, f))
        assert k.payload(Some(True)) == Some(False) and k.payload(NOTHING) == NOTHING

    @pytest.mark.parametrize("m", [LIST3, IDENTITY])
    def test_structure_is_unchanged(self, m):
        adj = make_state_adjunction(Z2)
        tbar = lift_monad_trivially(m, adj)
        y = adj.object(BOOL)
        assert tbar.base is m
        assert tbar.unit_at(y).payload(True) == m.unit(BOOL, True)


class TestDerivedJoin:
    def setup_method(self):
        from adjfx.finite import integer_range
        self.x = integer_range("0..7", 0, 8)

    def test_option_example(self):
        x = self.x
        inner = tab(Z2, option_type(product(x, Z2)), lambda s2: Some((7, s2)))
        px = exponential(option_type(product(x, Z2)), Z2)
        g = tab(Z2, option_type(product(px, Z2)), lambda s: Some((inner, s)))
        out = derived_state_join(OPTION, Z2, g, x)
        assert out.items() == [(0, Some((7, 0))), (1, Some((7, 1)))]

    def test_failure_propagates(self):
        x = self.x
        px = exponential(option_type(product(x, Z2)), Z2)
        g = tab(Z2, option_type(product(px, Z2)), lambda s: NOTHING)
        assert derived_state_join(OPTION, Z2, g, x).items() == [(0, NOTHING), (1, NOTHING)]

    def test_identity_let_formula(self):
        # g = s ↦ (s' ↦ (s', 1−s'), 1−s)  gives  s ↦ (1−s, s)
        inner = tab(Z2, product(Z2, Z2), lambda s2: (s2, 1 - s2))
        g = tab(Z2, product(exponential(product(Z2, Z2), Z2), Z2), lambda s: (inner, 1 - s))
        assert derived_state_join(IDENTITY, Z2, g, Z2).items() == [(0, (1, 0)), (1, (0, 1))]

    def test_shape_errors(self):
        with pytest.raises(ShapeError):
            derived_state_join(OPTION, Z2, Some(1), BOOL)
        bad = tab(Z2, BOOL, lambda s: True)
        with pytest.raises(ShapeError):
            derived_state_join(OPTION, Z2, bad, BOOL)


@pytest.mark.parametrize("key", list(BASE_MONADS))
def test_matches_oracle(key, small_universe):
    m = BASE_MONADS[key]
    adj = make_state_adjunction(Z2)
    p = translate(adj, lift_monad_trivially(m, adj))
    r = check_agreement(p, oracle_state(m, Z2), small_universe)
    assert r.passed, r.summary()


def test_unit_formula():
    adj = make_state_adjunction(Z2)
    p = translate(adj, lift_monad_trivially(OPTION, adj))
    for x in BOOL:
        assert p.unit(BOOL, x).items() == [(s, Some((x, s))) for s in Z2]
