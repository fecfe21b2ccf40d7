"""A small expression language run on a translated effect stack."""

from .interpreter import DemoResult, derived_stack, eval_program, oracle_stack
from .parser import DemoProgram, ParseError, parse_program, pretty

__all__ = [
    "DemoProgram", "ParseError", "parse_program", "pretty", "DemoResult",
    "eval_program", "derived_stack", "oracle_stack",
]
