"""Exact arithmetic in nearrings built on towers of HNN extensions."""

import json

from ._nrt import (
    Element,
    ExprSyntaxError,
    NrtError,
    Variant,
    add,
    conjugator,
    cyclic_reduce,
    equal,
    f_eval,
    in_H,
    in_W,
    level,
    make_int,
    make_omega,
    make_pi,
    make_stable,
    mu,
    mul,
    neg,
    parse,
    power_of,
    preimage,
    render,
    run_suite_json,
    scalar,
    size,
    suite_names,
    unit,
)


def run_suite(name, variant, seed=0, count=100, depth=3, zeta1=2, zeta2=3):
    """Run a verification suite and return its report as a dict."""
    return json.loads(run_suite_json(name, variant, seed, count, depth, zeta1, zeta2))


__all__ = [n for n in dir() if not n.startswith("_") and n != "json"]
