"""Exact q-deformed formal group laws and their lambda-ring companions."""

from fractions import Fraction

from ._qfgl import (
    MathError,
    ParseError,
    Scalar,
    cartier_selected,
    cp_image,
    hodge,
    lambda_k_verdict,
    q_binom,
    q_fact,
    q_int,
    run,
    suites,
    verify,
)
from . import _qfgl


def _fractions(coeffs):
    return [Fraction(c) for c in coeffs]


def euler_phi(q_order):
    return _fractions(_qfgl.euler_phi(q_order))


def discriminant(q_order):
    return _fractions(_qfgl.discriminant(q_order))


def thom_class(q_order):
    return _fractions(_qfgl.thom_class(q_order))


# Coefficients are scalars in Q(s); index k holds the T^k coefficient.
def log_chi(order):
    return [Scalar(c) for c in _qfgl.log_chi(order)]


def exp_chi(order):
    return [Scalar(c) for c in _qfgl.exp_chi(order)]


__all__ = [
    "MathError",
    "ParseError",
    "Scalar",
    "cartier_selected",
    "cp_image",
    "discriminant",
    "euler_phi",
    "exp_chi",
    "hodge",
    "lambda_k_verdict",
    "log_chi",
    "q_binom",
    "q_fact",
    "q_int",
    "run",
    "suites",
    "thom_class",
    "verify",
]
