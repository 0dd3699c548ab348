"""Apolar algebras, higher order Jacobians and Milnor algebras of forms."""

import json

from ._core import (  # noqa: F401
    ConeError,
    ParseError,
    Poly,
    PreconditionError,
    __version__,
    apply_op,
    catalecticant_rank,
    fixture,
    fixture_names,
    hess_k_is_zero,
    hilbert_A,
    is_cone,
    multiplicity_at,
)
from . import _core


def _poly_args(f):
    return str(f), f.nvars


def hilbert(f):
    return json.loads(_core._hilbert(*_poly_args(f)))


def milnor(f, k=1, cap=-1):
    return json.loads(_core._milnor(*_poly_args(f), k, cap))


def hessian(f, k=1, l=1, seed=0, trials=3):
    return json.loads(_core._hessian(*_poly_args(f), k, l, seed, trials))


def lefschetz(f, quotient="apolar", order=1, seed=0, trials=3):
    return json.loads(_core._lefschetz(*_poly_args(f), quotient, order, seed, trials))


def betti(f):
    """Betti table of A(f) as {(i, j): beta}."""
    table = json.loads(_core._betti(*_poly_args(f)))["table"]
    return {(e["i"], e["j"]): e["beta"] for e in table}


def hessian_in_jacobian(f):
    return json.loads(_core._membership(*_poly_args(f)))["member"]


def report(example, seed=0, trials=3, verify=False):
    return json.loads(_core._report(example, seed, trials, verify))
