"""The four adjunctions the transformers are translated along."""

from .error import (
    ErrorAdjunction, PointednessError, derived_error_join,
    lift_monad_to_coslice, make_error_adjunction,
)
from .reader import (
    ReaderAdjunction, derived_reader_join, lift_monad_to_reader,
    make_reader_adjunction, reader_compose,
)
from .state import (
    StateAdjunction, derived_state_join, lift_monad_trivially,
    make_state_adjunction,
)
from .writer import (
    EquivarianceError, MonoidLawError, WriterAdjunction, derived_writer_join,
    induced_action, lift_monad_to_mset, make_writer_adjunction,
)

__all__ = [
    "StateAdjunction", "make_state_adjunction", "lift_monad_trivially",
    "derived_state_join",
    "WriterAdjunction", "make_writer_adjunction", "induced_action",
    "lift_monad_to_mset", "derived_writer_join", "EquivarianceError",
    "MonoidLawError",
    "ReaderAdjunction", "make_reader_adjunction", "reader_compose",
    "lift_monad_to_reader", "derived_reader_join",
    "ErrorAdjunction", "make_error_adjunction", "lift_monad_to_coslice",
    "derived_error_join", "PointednessError",
]
