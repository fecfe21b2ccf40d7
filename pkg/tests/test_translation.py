import pytest

from adjfx.faults import broken_list_mult
from adjfx.finite import BOOL, UNIT, Z2, Inl, Inr, Some
from adjfx.instances import (
    lift_monad_to_coslice, lift_monad_to_mset, lift_monad_trivially,
    make_error_adjunction, make_state_adjunction, make_writer_adjunction,
)
from adjfx.laws import check_functor_laws, check_monad_laws
from adjfx.monads import BOOL_AND, IDENTITY, LIST3, OPTION, Z4_ADD, canonical_strength
from adjfx.translation import (
    CELL_NAMES, EXTERIOR_NAMES, Layer, OwnerMismatch, check_translation_diagrams,
    stack, translate,
)


def state_layer(s=Z2):
    return Layer(make_state_adjunction(s), lift_monad_trivially)


def writer_layer(mon):
    return Layer(make_writer_adjunction(mon),
                 lambda m, a: lift_monad_to_mset(m, canonical_strength(m), a))


def error_layer(e=Z2):
    return Layer(make_error_adjunction(e), lift_monad_to_coslice)


class TestTranslate:
    def test_state_over_option(self):
        adj = make_state_adjunction(Z2)
        p = translate(adj, lift_monad_trivially(OPTION, adj))
        assert p.lift_type(BOOL).name == "Option((Bool×Z2))^Z2"

    def test_writer_over_option(self):
        adj = make_writer_adjunction(Z4_ADD)
        p = translate(adj, lift_monad_to_mset(OPTION, canonical_strength(OPTION), adj))
        assert p.lift_type(BOOL).name == "Option((Bool×Z4))"

    def test_error_over_list(self):
        adj = make_error_adjunction(Z2)
        p = translate(adj, lift_monad_to_coslice(LIST3, adj))
        assert p.lift_type(BOOL).name == "List≤3((Z2+Bool))"

    def test_owner_mismatch(self):
        a, b = make_state_adjunction(Z2), make_state_adjunction(Z2)
        with pytest.raises(OwnerMismatch):
            translate(a, lift_monad_trivially(OPTION, b))

    def test_translated_monad_is_lawful(self, small_universe):
        adj = make_error_adjunction(Z2)
        p = translate(adj, lift_monad_to_coslice(OPTION, adj))
        assert check_functor_laws(p, small_universe).passed
        assert check_monad_laws(p, small_universe).passed


class TestDiagrams:
    def test_state_option_every_cell(self, small_universe):
        adj = make_state_adjunction(Z2)
        r = check_translation_diagrams(adj, lift_monad_trivially(OPTION, adj), small_universe)
        assert r.names == list(CELL_NAMES + EXTERIOR_NAMES)
        assert len(CELL_NAMES) == 10
        assert r.passed, r.summary()

    def test_writer_list_every_cell(self, small_universe):
        adj = make_writer_adjunction(BOOL_AND)
        tbar = lift_monad_to_mset(LIST3, canonical_strength(LIST3), adj)
        r = check_translation_diagrams(adj, tbar, small_universe)
        assert r.passed, r.summary()

    def test_broken_mult_localises_to_its_cells(self):
        adj = make_state_adjunction(Z2)
        r = check_translation_diagrams(adj, lift_monad_trivially(broken_list_mult(), adj), [UNIT])
        failing = set(r.failing())
        assert {"identity diagram: left identity triangle",
                "identity diagram: right identity triangle",
                "associativity diagram: associativity square"} <= failing
        for cell in ("identity diagram: unit naturality square",
                     "identity diagram: counit naturality square",
                     "associativity diagram: counit naturality square (upper)",
                     "associativity diagram: counit naturality square (lower)",
                     "associativity diagram: multiplication naturality square",
                     "identity diagram: counit-unit triangle (U side)",
                     "identity diagram: counit-unit triangle (F side)"):
            assert r[cell].passed, cell

    def test_cells_report_anchors(self):
        adj = make_state_adjunction(Z2)
        r = check_translation_diagrams(adj, lift_monad_trivially(IDENTITY, adj), [UNIT])
        assert all(c.anchor for c in r.checks)


class TestStack:
    def test_single_error_layer_over_identity(self):
        p = stack([error_layer()], IDENTITY)
        assert p.lift_type(BOOL).name == "(Z2+Bool)"
        assert p.unit(BOOL, True) == Inr(True)
        assert p.mult(BOOL, Inr(Inl(0))) == Inl(0)

    def test_writer_then_state_over_option(self, small_universe):
        p = stack([writer_layer(BOOL_AND), state_layer()], OPTION)
        assert p.lift_type(BOOL).name == "Option(((Bool×Bool)×Z2))^Z2"
        assert check_monad_laws(p, [UNIT]).passed

    def test_empty_chain(self):
        assert stack([], LIST3) is LIST3

    def test_plain_tuples_are_accepted(self):
        adj = make_state_adjunction(Z2)
        p = stack([(adj, lift_monad_trivially)], OPTION)
        assert p.unit(UNIT, "*")(1) == Some(("*", 1))

    def test_lifting_errors_propagate(self):
        class NoStrength(Exception):
            pass

        def refuse(m, adj):
            raise NoStrength(m.name)

        with pytest.raises(NoStrength):
            stack([Layer(make_state_adjunction(Z2), refuse)], OPTION)
