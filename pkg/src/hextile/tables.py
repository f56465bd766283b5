"""Golden reference values used by the self-test and the test-suite.

Polynomials are stored as text over ``s1 s2 t`` and parsed on demand.
"""

from __future__ import annotations

from .polynomial import ST, parse

TRIBONE_GENERATORS = (
    "-3*s1 + 2*s2^2",
    "3*s1 - s2^2 + s1*t",
    "s1^2*s2 - s2^2 - s1*t",
    "-s1^2*s2 + 2*s2^2 - s1*t + s2^2*t",
    "-3*s1 + s1^2*s2 - s2^2",
    "3*s1 - 2*s1^2*s2 - s2^2 + s1*s2^3 + s1*t - s2^2*t",
)

THETA = "t^2 - s1*s2*t + 3*t + s1^3 + s2^3 - 6*s1*s2 + 9"

# lex s1 > s2 > t
TRIBONE_BASIS = (
    "27 + 9*t + 3*t^2",
    "-27 + t^3",
    "9*s2 + 3*s2*t + s2*t^2",
    "3*s2^2",
    "s2^2*t",
    "s2^4",
    "3*s1 + s2^2",
    "s2^2 + s1*t",
    "s1*s2^3",
    "s1^2*s2",
    "9 + s1^3 + s2^3 + 3*t + t^2",
)

TRIBONE_BASIS_LEADING = (
    "3*t^2", "t^3", "s2*t^2", "3*s2^2", "s2^2*t", "s2^4",
    "3*s1", "s1*t", "s1*s2^3", "s1^2*s2", "s1^3",
)

# Delta(A_k) = P + d Q, keyed by (family, case index)
DECOMPOSITIONS = {
    ("3k-1", 0): ("0", "3*s1 - 3*s1^2*s2 + s1*s2^3"),
    ("3k-1", 1): ("s1", "9*s1 - 6*s1^2*s2 + s1^3*s2^2 + 4*s1*t - 2*s1^2*s2*t + s1*t^2"),
    ("3k-1", 2): (
        "11*s1 + s1^4 - 9*s1^2*s2 + 5*s2^2 + s1^3*s2^2 - s1*s2^3 + 4*s1*t"
        " - 2*s1^2*s2*t + s2^2*t + s1*t^2",
        "24*s1 + s1^4 - 11*s1^2*s2 + s1^5*s2 - 3*s1^3*s2^2 + 4*s1*s2^3 + 8*s1*t"
        " - s1^4*t - s1^2*s2*t + 3*s1*t^2",
    ),
    ("3k", 0): ("0", "s1^2*s2 - 2*s2^2"),
    ("3k", 1): ("-s1 + s2^2", "-s1^2*s2 - 2*s2^2 + s1*s2^3 - s2^2*t"),
    ("3k", -1): (
        "7*s1 - 5*s1^2*s2 + 3*s2^2 + s1^3*s2^2 - s1*s2^3 + 4*s1*t"
        " - 2*s1^2*s2*t + s2^2*t + s1*t^2",
        "2*s1^2*s2 + 4*s2^2 - 4*s1*s2^3 + s2^5",
    ),
}

# remainders of P and Q on division by the tribone basis
REMAINDERS = {
    ("3k-1", 0): ("0", "-s2^2"),
    ("3k-1", 1): ("s1", "-s2^2"),
    ("3k-1", 2): ("-s1", "-s2^2"),
    ("3k", 0): ("0", "s2^2"),
    ("3k", 1): ("-s1 + s2^2", "s2^2"),
    ("3k", -1): ("s1", "s2^2"),
}


def st(text: str):
    return parse(text, ST)


def tribone_generators():
    return [st(s) for s in TRIBONE_GENERATORS]


def tribone_basis():
    return [st(s) for s in TRIBONE_BASIS]
