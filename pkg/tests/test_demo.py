import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from adjfx.demo.interpreter import derived_stack, error_type, eval_program, oracle_stack, wrap
from adjfx.demo.parser import (
    Ask, BinOp, Get, Let, Log, Num, ParseError, Put, Var, parse_program, pretty,
)
from adjfx.finite import BOOL

CORPUS = json.loads((Path(__file__).parent / "data" / "demo_corpus.json").read_text())


class TestParser:
    def test_precedence(self):
        assert parse_program("1 + 2 * 3").ast == BinOp("+", Num(1), BinOp("*", Num(2), Num(3)))

    def test_left_associative(self):
        assert parse_program("8 - 2 - 1").ast == BinOp("-", BinOp("-", Num(8), Num(2)), Num(1))

    def test_let_ask(self):
        assert parse_program("let x = ask a in x / 0").ast == \
            Let("x", Ask("a"), BinOp("/", Var("x"), Num(0)))

    def test_effects(self):
        assert parse_program("let _ = log(get) in put(5)").ast == \
            Let("_", Log(Get()), Put(Num(5)))

    def test_truncated(self):
        with pytest.raises(ParseError) as info:
            parse_program("put(")
        assert info.value.offset == 4

    @pytest.mark.parametrize("src,offset", [("1 +", 3), ("let in", 4), ("1 $ 2", 2),
                                            ("(1", 2), ("1 2", 2), ("", 0)])
    def test_error_offsets(self, src, offset):
        with pytest.raises(ParseError) as info:
            parse_program(src)
        assert info.value.offset == offset

    def test_comments(self):
        assert parse_program("1 # one\n+ 2").ast == BinOp("+", Num(1), Num(2))


names = st.sampled_from(["a", "b", "x", "_"])
exprs = st.recursive(
    st.one_of(st.integers(0, 40000).map(Num), names.map(Var), names.map(Ask),
              st.just(Get())),
    lambda sub: st.one_of(
        st.builds(BinOp, st.sampled_from("+-*/"), sub, sub),
        st.builds(Let, names, sub, sub),
        st.builds(Log, sub),
        st.builds(Put, sub),
    ),
    max_leaves=12,
)


@settings(max_examples=200, deadline=None)
@given(exprs)
def test_pretty_round_trips(e):
    assert parse_program(pretty(e)).ast == e


def test_pretty_is_minimal():
    assert pretty(parse_program("(1 + 2) * 3 - (4 - 5)").ast) == "(1 + 2) * 3 - (4 - 5)"
    assert pretty(parse_program("((1 * 2)) + 3").ast) == "1 * 2 + 3"


class TestEval:
    def test_pure(self):
        r = eval_program(parse_program("1 + 2"))
        assert (r.value, r.error, r.log, r.final_state) == (3, None, [], 0)

    def test_log_and_put(self):
        r = eval_program(parse_program("let _ = log(get) in put(5)"), init_state=7)
        assert (r.log, r.final_state) == ([7], 5)

    def test_division_by_zero(self):
        r = eval_program(parse_program("1 / 0"))
        assert (r.value, r.error, r.log, r.final_state) == (None, "division by zero", [], 0)

    def test_effects_before_failure_survive(self):
        r = eval_program(parse_program("let _ = put(2) in let _ = log(1) in 1 / 0"))
        assert (r.error, r.log, r.final_state) == ("division by zero", [1], 2)

    def test_unbound(self):
        assert eval_program(parse_program("ask k")).error == "unbound identifier: k"
        assert eval_program(parse_program("ask k"), {"k": 4}).value == 4

    def test_wraps(self):
        assert eval_program(parse_program("32767 + 1")).value == -32768
        assert wrap(65536 + 5) == 5

    def test_floor_division(self):
        assert eval_program(parse_program("(0 - 7) / 2")).value == -4

    def test_unknown_stack(self):
        with pytest.raises(ValueError):
            eval_program(parse_program("1"), stack_kind="nosuch")


@pytest.mark.parametrize("case", CORPUS, ids=lambda c: c["source"][:30])
def test_corpus(case):
    p = parse_program(case["source"])
    derived = eval_program(p, case["env"], case["init_state"], "derived").as_dict()
    oracle = eval_program(p, case["env"], case["init_state"], "oracle").as_dict()
    assert derived == oracle == case["expected"]


def test_corpus_size():
    assert len(CORPUS) >= 20


def test_derived_stack_has_the_transformer_shape():
    errs = error_type({"a"})
    d, o = derived_stack(errs), oracle_stack(errs)
    for layer in ("state", "writer", "error"):
        assert getattr(d, layer).lift_type(BOOL) == getattr(o, layer).lift_type(BOOL)
