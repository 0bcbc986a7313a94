"""Bindings for the c2cat library. Bit strings are passed as '0'/'1' text."""

from ._core import (
    C2Error,
    apply_operator,
    boolean_table,
    chain_to_string,
    compose,
    decompress,
    demo,
    detect_cycle,
    fold_chain,
    independence_test,
    iterate_bernoulli,
    lz76_complexity,
    morphic_compress,
    pi,
    prefix_metric,
    sample_random_string,
    shift,
    string_to_chain,
    transitions,
    validate_chain,
)

__all__ = [
    "C2Error",
    "apply_operator",
    "boolean_table",
    "chain_to_string",
    "compose",
    "decompress",
    "demo",
    "detect_cycle",
    "fold_chain",
    "independence_test",
    "iterate_bernoulli",
    "lz76_complexity",
    "morphic_compress",
    "pi",
    "prefix_metric",
    "sample_random_string",
    "shift",
    "string_to_chain",
    "transitions",
    "validate_chain",
]
