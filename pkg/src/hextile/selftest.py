"""Recompute the golden tables and compare them with :mod:`hextile.tables`."""

from __future__ import annotations

from dataclasses import dataclass

from . import tables
from .engine import basis_trib
from .groebner import ideal_equal, reduce_full
from .invariants import congruent_mod_theta, region_delta_st, tribone_triplet_generators
from .polynomial import ST, format_poly, lex

# one representative N per (family, case)
CASE_SAMPLES = {
    ("3k-1", 0): 8,    # k = 3
    ("3k-1", 1): 11,   # k = 4
    ("3k-1", 2): 14,   # k = 5
    ("3k", 0): 9,      # k = 3
    ("3k", 1): 12,     # k = 4
    ("3k", -1): 6,     # k = 2
}


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def check_generators() -> list:
    got = tribone_triplet_generators()
    want = tables.tribone_generators()
    out = []
    for i, (g, w) in enumerate(zip(got, want)):
        out.append(CheckResult(f"triplet generator {i + 1}", congruent_mod_theta(g, w),
                               format_poly(g)))
    return out


def check_basis() -> list:
    G = basis_trib()
    golden = tables.tribone_basis()
    order = lex(ST)
    lead = sorted(format_poly(ST.monomial(m, c)) for m, c in G.leading_terms())
    want_lead = sorted(tables.TRIBONE_BASIS_LEADING)
    return [
        CheckResult("basis ideal equality", ideal_equal(G.elements, golden, order),
                    f"{len(G)} elements"),
        CheckResult("basis leading terms", lead == want_lead, ", ".join(lead)),
    ]


def check_remainders() -> list:
    G = basis_trib()
    out = []
    for key, n in CASE_SAMPLES.items():
        dec = region_delta_st(n)
        if (dec.family, dec.case_index) != key:
            out.append(CheckResult(f"case {key}", False, f"N={n} maps to {dec.family, dec.case_index}"))
            continue
        P_want, Q_want = (tables.st(s) for s in tables.DECOMPOSITIONS[key])
        rP_want, rQ_want = (tables.st(s) for s in tables.REMAINDERS[key])
        rP, rQ = reduce_full(dec.P, G), reduce_full(dec.Q, G)
        out.append(CheckResult(f"decomposition {key}",
                               congruent_mod_theta(dec.P, P_want) and congruent_mod_theta(dec.Q, Q_want)))
        same = reduce_full(rP - rP_want, G).is_zero() and reduce_full(rQ - rQ_want, G).is_zero()
        out.append(CheckResult(f"remainders {key}", same,
                               f"P -> {format_poly(rP)}, Q -> {format_poly(rQ)}"))
    return out


def run_all() -> list:
    return check_generators() + check_basis() + check_remainders()
