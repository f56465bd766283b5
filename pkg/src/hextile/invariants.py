"""Rotation-invariant polynomials and their coordinates s1, s2, t.

In ``Q = Z[a,b,c]/<abc-1>`` the invariants of the cyclic rotation form the
ring ``Z[s1, s2, t]/<Theta>`` with ``s1 = a+b+c``, ``s2 = ab+bc+ca`` and
``t = a^2b + b^2c + c^2a``.  The same statements hold verbatim in
``P = Z[x,y,z]/<xyz-1>`` with sigma1, sigma2 and theta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .hexlattice import (
    ABC_RELATION,
    Cell,
    TriboneType,
    rotate120,
    sector_form,
    tribone_poly,
)
from .polynomial import ABC, ST, Polynomial, VariableSet, normalize_quotient

S1, S2, T = ST.gens()


class NotInvariantError(ValueError):
    pass


def delta(f: Polynomial) -> Polynomial:
    """``f + rho(f) + rho^2(f)``, normalized modulo the product relation."""
    return normalize_quotient(f, ABC_RELATION) + rotate120(f, 1) + rotate120(f, 2)


delta_symmetrize = delta


def delta_monomial(exps, varset: VariableSet = ABC) -> Polynomial:
    return delta(varset.monomial(exps))


def theta_relation() -> Polynomial:
    return T**2 - (S1 * S2 - 3) * T + (S1**3 + S2**3 - 6 * S1 * S2 + 9)


def basic_invariants(varset: VariableSet = ABC) -> tuple:
    """Expansions of ``(s1, s2, t)`` in a three-variable ring."""
    a, b, c = varset.gens()
    return a + b + c, a * b + b * c + c * a, a**2 * b + b**2 * c + c**2 * a


def expand_st(g: Polynomial, varset: VariableSet = ABC) -> Polynomial:
    """Substitute the invariant expansions for s1, s2, t and normalize."""
    return normalize_quotient(g.substitute(basic_invariants(varset), varset), ABC_RELATION)


def canonical(g: Polynomial) -> Polynomial:
    """Representative of ``g`` modulo Theta with t-degree at most one."""
    ti = ST.index("t")
    low = (S1 * S2 - 3)
    const = (S1**3 + S2**3 - 6 * S1 * S2 + 9)
    terms = dict(g.items())
    while True:
        high = [(m, c) for m, c in terms.items() if m[ti] >= 2]
        if not high:
            return Polynomial(terms, ST)
        acc = Polynomial(terms, ST)
        for m, c in high:
            rest = list(m)
            rest[ti] -= 2
            mono = ST.monomial(rest, c)
            # t^2 = (s1 s2 - 3) t - (s1^3 + s2^3 - 6 s1 s2 + 9)
            acc = acc - ST.monomial(m, c) + mono * (low * T - const)
        terms = dict(acc.items())


def congruent_mod_theta(f: Polynomial, g: Polynomial) -> bool:
    return canonical(f - g).is_zero()


# ---------------------------------------------------------------------------
# rewriting Delta(a^p b^q) into s1, s2, t
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def delta_st(p: int, q: int) -> Polynomial:
    """Coordinates of ``Delta(a^p b^q)``; ``Delta(1) = 3``.

    Uses the product identities for the cyclic symmetrization; every call
    either lowers the total degree p+q or moves towards a case that does.
    """
    if p == 0:
        p, q = q, 0
    if (p, q) == (0, 0):
        return ST.constant(3)
    if (p, q) == (1, 0):
        return S1
    if (p, q) == (1, 1):
        return S2
    if (p, q) == (2, 1):
        return T
    if (p, q) == (1, 2):
        return S1 * S2 - 3 - T
    if p >= 2 and q >= 2:
        return S2 * delta_st(p - 1, q - 1) - delta_st(p - 1, q - 2) - delta_st(p - 2, q - 1)
    if q == 1:  # p >= 3
        return S1 * delta_st(p - 1, 1) - delta_st(p - 1, 2) - delta_st(p - 2, 0)
    if p == 1:  # q >= 3
        return S1 * delta_st(1, q - 1) - delta_st(2, q - 1) - delta_st(0, q - 2)
    # q == 0, p >= 2
    return S1 * delta_st(p - 1, 0) - delta_st(p - 1, 1) - delta_st(1, p - 1)


def _orbit_rep(m: tuple) -> tuple:
    shifts = [m, (m[2], m[0], m[1]), (m[1], m[2], m[0])]
    zeros = [s for s in shifts if s[2] == 0]
    zeros.sort(key=lambda s: (s[0] == 0, s))
    return zeros[0]


def is_invariant(f: Polynomial) -> bool:
    return normalize_quotient(f, ABC_RELATION) == rotate120(f)


def to_st_coords(f: Polynomial) -> Polynomial:
    """Write a rotation-invariant element of ``Q`` (or ``P``) in s1, s2, t."""
    f = normalize_quotient(f, ABC_RELATION)
    if f != rotate120(f):
        raise NotInvariantError("polynomial is not invariant under the 120 degree rotation")
    result = ST.zero()
    for m, c in f.items():
        if m == (0, 0, 0):
            result = result + c
        elif _orbit_rep(m) == m:
            result = result + delta_st(m[0], m[1]) * c
    return result


def from_st_coords(g: Polynomial, varset: VariableSet = ABC) -> Polynomial:
    return expand_st(g, varset)


# ---------------------------------------------------------------------------
# tribone triplets and triangular regions
# ---------------------------------------------------------------------------

_A = Cell(0, 0, 0)
_AX = Cell(1, 0, 0)


def tribone_triplet_generators() -> tuple:
    """Coordinates of the six symmetrized tribone triplets centred at ``a`` and ``a x``."""
    out = []
    for center in (_A, _AX):
        for kind in TriboneType:
            out.append(to_st_coords(delta(tribone_poly(kind, center))))
    return tuple(out)


def tribone_ideal_generators() -> tuple:
    """The six triplets plus Theta: generators of the ideal in ``Z[s1, s2, t]``."""
    return tribone_triplet_generators() + (theta_relation(),)


@dataclass(frozen=True)
class RegionDecomposition:
    """``Delta(A_k) = P + d Q`` for the sector ``A_k`` of T_N."""

    n: int
    family: str
    k: int
    d: int
    case_index: int
    P: Polynomial
    Q: Polynomial

    def total(self) -> Polynomial:
        return self.P + self.Q * self.d


def region_delta_st(n: int) -> RegionDecomposition:
    form = sector_form(n)
    P = to_st_coords(delta(form.base))
    Q = to_st_coords(delta(form.step))
    return RegionDecomposition(n, form.family, form.k, form.d, form.case_index, P, Q)
