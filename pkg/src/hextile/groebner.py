"""Strong Groebner bases over the integers.

Buchberger completion with S-polynomials and GCD-polynomials, keeping a
cofactor matrix so every basis element (and every membership witness) can
be written over the original generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .polynomial import (
    MonomialOrder,
    Polynomial,
    VariableSet,
    deglex,
    lex,
    mono_divides,
    mono_lcm,
    polys_from_lines,
    reduce_terms,
)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: MonomialOrder
    cofactor_matrix: tuple  # cofactor_matrix[i][j] multiplies generators[j]
    generators: tuple

    @property
    def varset(self) -> VariableSet:
        return self.order.varset

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_terms(self) -> list:
        return [g.leading_term(self.order) for g in self.elements]

    def combine(self, coefficients: Sequence[Polynomial]) -> list:
        """Translate coefficients on basis elements into coefficients on generators."""
        out = [self.varset.zero() for _ in self.generators]
        for q, row in zip(coefficients, self.cofactor_matrix):
            if q.is_zero():
                continue
            for j, h in enumerate(row):
                if not h.is_zero():
                    out[j] = out[j] + q * h
        return out


@dataclass(frozen=True)
class MembershipCertificate:
    member: bool
    cofactors: tuple | None
    remainder: Polynomial


def bezout(a: int, b: int) -> tuple:
    """``(u, v, g)`` with ``u*a + v*b == g == gcd(a, b) > 0``.

    When ``a`` divides ``b`` the answer is ``(sign(a), 0, |a|)``; otherwise the
    extended Euclidean algorithm, which yields the minimal solution.
    """
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    if a and b % a == 0:
        return (1 if a > 0 else -1), 0, abs(a)
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_s, old_t, old_r


def _lcm_int(a: int, b: int) -> int:
    return abs(a * b) // math.gcd(a, b)


def _pair_data(f: Polynomial, g: Polynomial, order: MonomialOrder):
    if f.is_zero() or g.is_zero():
        raise ValueError("S/GCD-polynomials need nonzero inputs")
    m1, c1 = f.leading_term(order)
    m2, c2 = g.leading_term(order)
    L = mono_lcm(m1, m2)
    u1 = tuple(a - b for a, b in zip(L, m1))
    u2 = tuple(a - b for a, b in zip(L, m2))
    return c1, c2, u1, u2


def _s_coeffs(c1, c2):
    ell = _lcm_int(c1, c2)
    return ell // c1, -(ell // c2)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """``(l/c1)(L/m1) f - (l/c2)(L/m2) g`` for leading terms ``c1 m1``, ``c2 m2``."""
    c1, c2, u1, u2 = _pair_data(f, g, order)
    k1, k2 = _s_coeffs(c1, c2)
    return f.mul_term(u1, k1) + g.mul_term(u2, k2)


def gcd_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Bezout combination whose leading term is ``gcd(c1, c2) * lcm(m1, m2)``."""
    c1, c2, u1, u2 = _pair_data(f, g, order)
    a, b, _ = bezout(c1, c2)
    return f.mul_term(u1, a) + g.mul_term(u2, b)


# ---------------------------------------------------------------------------
# completion
# ---------------------------------------------------------------------------

class _Element:
    __slots__ = ("poly", "cof", "lm", "lc")

    def __init__(self, poly, cof, order):
        lm, lc = poly.leading_term(order)
        if lc < 0:
            poly, cof, lc = -poly, [-h for h in cof], -lc
        self.poly, self.cof, self.lm, self.lc = poly, cof, lm, lc


def _combine(cofs: Sequence, quotients: Sequence, zero: Polynomial, width: int) -> list:
    out = [zero] * width
    for q, cof in zip(quotients, cofs):
        if q.is_zero():
            continue
        for j in range(width):
            if not cof[j].is_zero():
                out[j] = out[j] + q * cof[j]
    return out


def _reduce_tracked(h, h_cof, elems, order, track, exact=True):
    rem, quotients = reduce_terms(h, [e.poly for e in elems], order, exact=exact, track=track)
    if not track:
        return rem, None
    sub = _combine([e.cof for e in elems], quotients, h.varset.zero(), len(h_cof))
    return rem, [a - b for a, b in zip(h_cof, sub)]


def buchberger_z(generators: Sequence[Polynomial], order: MonomialOrder,
                 track_cofactors: bool = True) -> GroebnerBasis:
    """Strong Groebner basis of the ideal generated over the integers."""
    gens = tuple(generators)
    if not gens:
        raise ValueError("need at least one generator")
    varset = order.varset
    zero = varset.zero()
    width = len(gens)
    for g in gens:
        if g.varset != varset:
            raise ValueError("generator over a different variable set")

    elems: list = []
    pairs: list = []  # (sort key, sequence number, i, j)
    seq = 0

    def add(poly, cof):
        nonlocal seq
        e = _Element(poly, cof, order)
        idx = len(elems)
        elems.append(e)
        for i in range(idx):
            pairs.append((order.key(mono_lcm(elems[i].lm, e.lm)), seq, i, idx))
            seq += 1

    for j, g in enumerate(gens):
        if g.is_zero():
            continue
        unit = [varset.one() if k == j else zero for k in range(width)] if track_cofactors else []
        add(g, unit)

    while pairs:
        pairs.sort()
        _, _, i, j = pairs.pop(0)
        fi, fj = elems[i], elems[j]
        c1, c2 = fi.lc, fj.lc
        L = mono_lcm(fi.lm, fj.lm)
        u1 = tuple(a - b for a, b in zip(L, fi.lm))
        u2 = tuple(a - b for a, b in zip(L, fj.lm))
        candidates = []
        k1, k2 = _s_coeffs(c1, c2)
        candidates.append((k1, k2))
        if c2 % c1 and c1 % c2:
            a, b, _ = bezout(c1, c2)
            candidates.append((a, b))
        for a, b in candidates:
            h = fi.poly.mul_term(u1, a) + fj.poly.mul_term(u2, b)
            if h.is_zero():
                continue
            if track_cofactors:
                h_cof = [x.mul_term(u1, a) + y.mul_term(u2, b) for x, y in zip(fi.cof, fj.cof)]
            else:
                h_cof = []
            rem, rem_cof = _reduce_tracked(h, h_cof, elems, order, track_cofactors)
            if not rem.is_zero():
                add(rem, rem_cof if track_cofactors else [])

    elems = _interreduce(elems, order, track_cofactors)
    elems.sort(key=lambda e: order.key(e.lm))
    return GroebnerBasis(
        elements=tuple(e.poly for e in elems),
        order=order,
        cofactor_matrix=tuple(tuple(e.cof) for e in elems) if track_cofactors else (),
        generators=gens,
    )


def _strongly_divides(a, b) -> bool:
    return mono_divides(a.lm, b.lm) and b.lc % a.lc == 0


def _interreduce(elems, order, track):
    kept = []
    for idx, e in enumerate(elems):
        redundant = False
        for jdx, o in enumerate(elems):
            if jdx == idx or not _strongly_divides(o, e):
                continue
            if (o.lm, o.lc) != (e.lm, e.lc) or jdx < idx:
                redundant = True
                break
        if not redundant:
            kept.append(e)
    out = []
    for idx, e in enumerate(kept):
        others = [o for jdx, o in enumerate(kept) if jdx != idx]
        lead = e.poly.varset.monomial(e.lm, e.lc)
        tail = e.poly - lead
        # balanced tails: keeps coefficients small and deterministic
        rem, rem_cof = _reduce_tracked(tail, e.cof, others, order, track, exact=False)
        out.append(_Element(lead + rem, rem_cof if track else [], order))
    return out


# ---------------------------------------------------------------------------
# queries
# ---------------------------------------------------------------------------

def _elements(basis) -> tuple:
    return basis.elements if isinstance(basis, GroebnerBasis) else tuple(basis)


def reduce_full(f: Polynomial, basis, order: MonomialOrder | None = None) -> Polynomial:
    """Normal form using balanced integer quotients on every term."""
    if isinstance(basis, GroebnerBasis):
        order = basis.order
    elif order is None:
        raise ValueError("order required when basis is a plain sequence")
    elems = _elements(basis)
    if not elems:
        return f
    rem, _ = reduce_terms(f, elems, order, exact=False, track=False)
    return rem


def is_member(f: Polynomial, basis: GroebnerBasis) -> MembershipCertificate:
    rem, quotients = reduce_terms(f, basis.elements, basis.order, exact=False,
                                  track=bool(basis.cofactor_matrix))
    if not rem.is_zero():
        return MembershipCertificate(False, None, rem)
    if not basis.cofactor_matrix:
        raise ValueError("basis was built without cofactor tracking")
    return MembershipCertificate(True, tuple(basis.combine(quotients)), rem)


def is_strong_basis(basis: GroebnerBasis) -> bool:
    """Every S- and GCD-polynomial of every pair reduces to zero (exact rule)."""
    elems = basis.elements
    order = basis.order
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            for h in (s_polynomial(elems[i], elems[j], order),
                      gcd_polynomial(elems[i], elems[j], order)):
                rem, _ = reduce_terms(h, elems, order, exact=True, track=False)
                if not rem.is_zero():
                    return False
    return True


def cofactors_sound(basis: GroebnerBasis) -> bool:
    for g, row in zip(basis.elements, basis.cofactor_matrix):
        total = basis.varset.zero()
        for h, gen in zip(row, basis.generators):
            total = total + h * gen
        if total != g:
            return False
    return True


def ideal_equal(gens1: Sequence[Polynomial], gens2: Sequence[Polynomial],
                order: MonomialOrder) -> bool:
    g1 = [g for g in gens1 if not g.is_zero()]
    g2 = [g for g in gens2 if not g.is_zero()]
    if not g1 or not g2:
        return not g1 and not g2
    b1 = buchberger_z(g1, order, track_cofactors=False)
    b2 = buchberger_z(g2, order, track_cofactors=False)
    return (all(reduce_full(f, b2).is_zero() for f in g1)
            and all(reduce_full(f, b1).is_zero() for f in g2))


def order_by_name(name: str, varset: VariableSet) -> MonomialOrder:
    if name == "lex":
        return lex(varset)
    if name == "deglex":
        return deglex(varset)
    raise ValueError(f"unknown order {name!r}")


def parse_ideal(text: str) -> tuple:
    """Ideal file body -> ``(varset, generators)``.

    First non-comment line is ``vars: s1 s2 t``; then one polynomial per line.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("vars:"):
        raise ValueError("ideal file must start with a 'vars:' line")
    varset = VariableSet.of(lines[0][len("vars:"):])
    return varset, polys_from_lines(lines[1:], varset)


def load_ideal(path) -> tuple:
    return parse_ideal(Path(path).read_text())
