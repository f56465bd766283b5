"""Sparse multivariate polynomials with integer coefficients.

A polynomial is a mapping from exponent tuples to nonzero ``int``
coefficients, bound to a :class:`VariableSet`.  Values are treated as
immutable; every operation returns a new object.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

Monomial = tuple  # tuple[int, ...]


class VariableSetMismatch(ValueError):
    pass


class ParseError(ValueError):
    """Syntax error in polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class VariableSet:
    """Ordered variable names.  Order defines lexicographic precedence."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise ValueError(f"invalid variable name {name!r}")

    @classmethod
    def of(cls, text: str) -> "VariableSet":
        return cls(tuple(text.replace(",", " ").split()))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}; expected one of {self.names}") from None

    def zero(self) -> "Polynomial":
        return Polynomial({}, self)

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return Polynomial({(0,) * len(self.names): c}, self)

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != len(self.names) or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps} for {self.names}")
        return Polynomial({exps: coeff}, self)

    def gens(self) -> tuple:
        n = len(self.names)
        return tuple(self.monomial(tuple(int(i == j) for j in range(n))) for i in range(n))

    def parse(self, text: str) -> "Polynomial":
        return parse(text, self)

    def __str__(self):
        return " ".join(self.names)


XY = VariableSet(("x", "y"))
XYZ = VariableSet(("x", "y", "z"))
ABC = VariableSet(("a", "b", "c"))
ST = VariableSet(("s1", "s2", "t"))


# ---------------------------------------------------------------------------
# monomial helpers
# ---------------------------------------------------------------------------

def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m1, m2))


def mono_divides(m1: Monomial, m2: Monomial) -> bool:
    """True when ``m1`` divides ``m2``."""
    return all(a <= b for a, b in zip(m1, m2))


def mono_div(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(m1, m2))


def mono_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m1, m2))


@dataclass(frozen=True)
class MonomialOrder:
    """``lex`` or ``deglex`` with variable precedence taken from ``varset``."""

    kind: str
    varset: VariableSet

    def __post_init__(self):
        if self.kind not in ("lex", "deglex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, m: Monomial) -> tuple:
        if self.kind == "lex":
            return m
        return (sum(m),) + m

    def neg_key(self, m: Monomial) -> tuple:
        # min-heap key that pops the largest monomial first
        return tuple(-e for e in self.key(m))

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)


def lex(varset: VariableSet) -> MonomialOrder:
    return MonomialOrder("lex", varset)


def deglex(varset: VariableSet) -> MonomialOrder:
    return MonomialOrder("deglex", varset)


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    if len(m1) != len(order.varset) or len(m2) != len(order.varset):
        raise VariableSetMismatch("monomial length does not match the order's variables")
    return order.compare(tuple(m1), tuple(m2))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    __slots__ = ("_terms", "varset", "_hash")

    def __init__(self, terms: Mapping[Monomial, int], varset: VariableSet):
        n = len(varset)
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"monomial {m} does not fit variables {varset.names}")
            if c:
                clean[m] = clean.get(m, 0) + int(c)
                if not clean[m]:
                    del clean[m]
        self._terms = clean
        self.varset = varset
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, varset: VariableSet) -> "Polynomial":
        # trusted constructor: terms already canonical and owned by the result
        p = object.__new__(cls)
        p._terms = terms
        p.varset = varset
        p._hash = None
        return p

    # -- inspection -----------------------------------------------------

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coeff(self, m: Monomial) -> int:
        return self._terms.get(tuple(m), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        zero = (0,) * len(self.varset)
        return all(m == zero for m in self._terms)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def degree(self, var: str) -> int:
        i = self.varset.index(var)
        return max((m[i] for m in self._terms), default=-1)

    def sorted_terms(self, order: MonomialOrder | None = None) -> list:
        """Terms in descending monomial order (lex on the varset by default)."""
        order = order or lex(self.varset)
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder) -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder) -> int:
        return self.leading_term(order)[1]

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.varset != self.varset:
                raise VariableSetMismatch(
                    f"variable sets differ: {self.varset.names} vs {other.varset.names}")
            return other
        if isinstance(other, int):
            return self.varset.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(terms, self.varset)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.varset)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.varset.zero()
            return Polynomial._raw({m: c * other for m, c in self._terms.items()}, self.varset)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in terms.items() if c}, self.varset)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = self.varset.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, m: Monomial, c: int) -> "Polynomial":
        if not c:
            return self.varset.zero()
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(k, m)): v * c for k, v in self._terms.items()},
            self.varset)

    def exact_div(self, c: int) -> "Polynomial":
        """Divide every coefficient by ``c``; raises if any division is inexact."""
        terms = {}
        for m, v in self._terms.items():
            q, r = divmod(v, c)
            if r:
                raise ValueError(f"coefficient {v} not divisible by {c}")
            terms[m] = q
        return Polynomial._raw(terms, self.varset)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.varset.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.varset == other.varset and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, {' '.join(self.varset.names)!r})"

    def __str__(self):
        return format_poly(self)

    # -- maps -----------------------------------------------------------

    def evaluate_all_ones(self) -> int:
        return evaluate_all_ones(self)

    def substitute(self, values: Sequence["Polynomial"], target: VariableSet | None = None) -> "Polynomial":
        """Replace variable i by ``values[i]`` (all in ring ``target``)."""
        if len(values) != len(self.varset):
            raise ValueError("need one value per variable")
        if target is None:
            target = values[0].varset if values else self.varset
        cache: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                cache[key] = values[i] ** e
            return cache[key]

        result = target.zero()
        for m, c in self._terms.items():
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def map_monomials(self, fn, varset: VariableSet | None = None) -> "Polynomial":
        """Apply ``fn`` to every exponent tuple, merging like terms."""
        varset = varset or self.varset
        terms: dict = {}
        for m, c in self._terms.items():
            nm = tuple(fn(m))
            terms[nm] = terms.get(nm, 0) + c
        return Polynomial(terms, varset)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + f._coerce(g)


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * f._coerce(g)


def evaluate_all_ones(f: Polynomial) -> int:
    """Sum of coefficients: the number of points of a finite set from its transform."""
    return sum(c for _, c in f.items())


def normalize_quotient(f: Polynomial, relation_monomial) -> Polynomial:
    """Canonical representative of ``f`` modulo ``<m - 1>``.

    ``relation_monomial`` is an exponent tuple (or a monomial polynomial)
    with positive entries on the variables it involves, e.g. ``xyz``.  Each
    term is divided by the largest power of ``m`` it contains.
    """
    if isinstance(relation_monomial, Polynomial):
        if len(relation_monomial) != 1:
            raise ValueError("relation must be a single monomial")
        (rel, _), = relation_monomial.items()
    else:
        rel = tuple(relation_monomial)
    support = [i for i, e in enumerate(rel) if e]
    if not support:
        raise ValueError("relation monomial must be non-constant")

    def reduce(m):
        k = min(m[i] // rel[i] for i in support)
        if not k:
            return m
        return tuple(e - k * r for e, r in zip(m, rel))

    return f.map_monomials(reduce)


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivisionResult:
    cofactors: tuple
    remainder: Polynomial


def balanced_quotient(c: int, d: int) -> int:
    """``q`` with ``c - q*d`` of minimal absolute value, ties toward positive."""
    ad = abs(d)
    r = c % ad
    if 2 * r > ad:
        r -= ad
    return (c - r) // d


def reduce_terms(f: Polynomial, divisors: Sequence, order: MonomialOrder,
                 exact: bool = True, track: bool = True):
    """Fully reduce ``f`` by ``divisors``; returns ``(remainder, quotients)``.

    ``divisors`` holds nonzero polynomials.  The first divisor able to act on
    the current largest term is used.  With ``exact`` a term ``c*m`` is reduced
    by leading term ``c'*m'`` only when ``m' | m`` and ``c' | c``; otherwise
    the coefficient is replaced by its balanced remainder mod ``c'`` whenever
    that changes it (so ``2*m`` becomes ``-m`` against ``3*m``).  ``quotients`` is a list of polynomials (or ``None``
    entries when ``track`` is off).
    """
    varset = f.varset
    lts = []
    for g in divisors:
        if g.varset != varset:
            raise VariableSetMismatch("divisor over a different variable set")
        if g.is_zero():
            raise ValueError("zero divisor")
        lm, lc = g.leading_term(order)
        tail = [(m, c) for m, c in g.items() if m != lm]
        lts.append((lm, lc, tail))

    p = dict(f.items())
    heap = [(order.neg_key(m), m) for m in p]
    heapq.heapify(heap)
    remainder: dict = {}
    quotients = [dict() for _ in divisors] if track else None

    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, 0)
        if not c:
            continue
        i = 0
        while i < len(lts) and c:
            lm, lc, tail = lts[i]
            if not all(a <= b for a, b in zip(lm, m)):
                i += 1
                continue
            if exact:
                if c % lc:
                    i += 1
                    continue
                q = c // lc
            else:
                q = balanced_quotient(c, lc)
                if not q:
                    i += 1
                    continue
            shift = tuple(a - b for a, b in zip(m, lm))
            for tm, tc in tail:
                nm = tuple(a + b for a, b in zip(tm, shift))
                v = p.get(nm, 0) - q * tc
                if v:
                    if nm not in p:
                        heapq.heappush(heap, (order.neg_key(nm), nm))
                    p[nm] = v
                else:
                    p.pop(nm, None)
            if track:
                qd = quotients[i]
                qd[shift] = qd.get(shift, 0) + q
            c -= q * lc
            i = 0  # restart: the first applicable divisor wins
        if c:
            remainder[m] = c

    rem = Polynomial._raw(remainder, varset)
    if track:
        return rem, [Polynomial(q, varset) for q in quotients]
    return rem, None


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder) -> DivisionResult:
    """Multi-divisor division over the integers with exact-divisibility reduction."""
    if not divisors:
        return DivisionResult((), f)
    rem, quotients = reduce_terms(f, divisors, order, exact=True, track=True)
    return DivisionResult(tuple(quotients), rem)


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:
            break
        if mt.group(0).strip() == "":
            break
        start = mt.start(mt.lastindex)
        if mt.group(1) is not None:
            tokens.append(("int", int(mt.group(1)), start))
        elif mt.group(2) is not None:
            tokens.append(("name", mt.group(2), start))
        else:
            ch = mt.group(3)
            if ch not in "+-*^":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = mt.end()
    tokens.append(("end", None, len(text)))
    return tokens


def parse(text: str, varset: VariableSet) -> Polynomial:
    """Parse ``3*s1^2*t - s2 + 7`` style text into a polynomial over ``varset``."""
    tokens = _tokenize(text)
    pos = 0
    n = len(varset)
    terms: dict = {}

    def peek():
        return tokens[pos]

    def take(kind):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            want = "a number" if kind == "int" else repr(kind)
            raise ParseError(f"expected {want}, found {tok[1]!r}" if tok[0] != "end"
                             else f"expected {want}, found end of input", tok[2])
        pos += 1
        return tok

    def factor(exps, coeff):
        tok = peek()
        if tok[0] == "int":
            take("int")
            return exps, coeff * tok[1]
        if tok[0] == "name":
            take("name")
            if tok[1] not in varset.names:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
            i = varset.names.index(tok[1])
            e = 1
            if peek()[0] == "^":
                take("^")
                e = take("int")[1]
            exps[i] += e
            return exps, coeff
        if tok[0] == "end":
            raise ParseError("unexpected end of input", tok[2])
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])

    if peek()[0] == "end":
        raise ParseError("empty polynomial", 0)
    first = True
    while True:
        sign = 1
        tok = peek()
        if tok[0] in "+-" and len(tok[0]) == 1:
            take(tok[0])
            sign = -1 if tok[0] == "-" else 1
        elif not first:
            raise ParseError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
        first = False
        exps, coeff = factor([0] * n, sign)
        while peek()[0] == "*":
            take("*")
            exps, coeff = factor(exps, coeff)
        m = tuple(exps)
        terms[m] = terms.get(m, 0) + coeff
        if peek()[0] == "end":
            break
    return Polynomial(terms, varset)


def format_poly(f: Polynomial, order: MonomialOrder | None = None) -> str:
    """Text form, terms in descending order; ``parse`` inverts it."""
    if f.is_zero():
        return "0"
    parts = []
    for m, c in f.sorted_terms(order):
        factors = []
        for name, e in zip(f.varset.names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def polys_from_lines(lines: Iterable[str], varset: VariableSet) -> list:
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse(line, varset))
    return out
