"""Polynomial rings: monomials, term orders, sparse exact polynomials, text I/O.

Monomials are dense exponent tuples.  A polynomial stores its term list
sorted strictly decreasing under a fixed monomial order, so canonical forms
are unique per (ring, order) and the leading term is O(1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .fields import QQ, PrimeField, RationalField

Monomial = tuple  # dense exponent vector, one entry per ring variable


# ---------------------------------------------------------------------------
# monomial helpers

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# monomial orders

@dataclass(frozen=True)
class GrevLex:
    """Graded reverse lexicographic order.

    Ties in total degree are broken scanning variables from last to first;
    the monomial with the smaller exponent at the first difference wins.
    """

    def key(self, m: Monomial):
        return (sum(m), tuple(-e for e in reversed(m)))

    def __repr__(self):
        return "grevlex"


@dataclass(frozen=True)
class Lex:
    """Pure lexicographic order with earlier variables dominant."""

    def key(self, m: Monomial):
        return m

    def __repr__(self):
        return "lex"


@dataclass(frozen=True)
class Block:
    """Elimination order: grevlex on the first `eliminated` variables,
    ties broken by `inner` on the remaining ones.

    Any monomial containing an eliminated variable exceeds any that does not.
    """

    eliminated: int
    inner: object

    def key(self, m: Monomial):
        k = self.eliminated
        head = m[:k]
        masked = (0,) * k + m[k:]
        return (sum(head), tuple(-e for e in reversed(head)), self.inner.key(masked))

    def __repr__(self):
        return f"block({self.eliminated},{self.inner!r})"


GREVLEX = GrevLex()
LEX = Lex()

LESS, EQUAL, GREATER = -1, 0, 1


def compare_monomials(order, a: Monomial, b: Monomial) -> int:
    """Total multiplicative comparison; returns -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError("monomials from different rings")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return LESS
    if ka > kb:
        return GREATER
    return EQUAL


# ---------------------------------------------------------------------------
# rings

@dataclass(frozen=True)
class PolynomialRing:
    """An ordered tuple of variable names over an exact coefficient field."""

    variables: tuple
    field: object

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self, order=GREVLEX) -> "Polynomial":
        return Polynomial(self, order, ())

    def one(self, order=GREVLEX) -> "Polynomial":
        return self.constant(self.field.one, order)

    def constant(self, c, order=GREVLEX) -> "Polynomial":
        c = self.field.normalize(c)
        if self.field.is_zero(c):
            return self.zero(order)
        return Polynomial(self, order, (((0,) * self.nvars, c),))

    def variable(self, name_or_index, order=GREVLEX) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        expo = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, order, ((expo, self.field.one),))

    def gens(self, order=GREVLEX):
        return tuple(self.variable(i, order) for i in range(self.nvars))

    def monomial(self, expo: Monomial, c=None, order=GREVLEX) -> "Polynomial":
        c = self.field.one if c is None else self.field.normalize(c)
        if self.field.is_zero(c):
            return self.zero(order)
        return Polynomial(self, order, ((tuple(expo), c),))

    def monomials_of_degree(self, d: int):
        """All exponent tuples of total degree d, in no particular order."""
        n = self.nvars

        def rec(i, rem):
            if i == n - 1:
                yield (rem,)
                return
            for e in range(rem + 1):
                for tail in rec(i + 1, rem - e):
                    yield (e,) + tail

        if n == 0:
            if d == 0:
                yield ()
            return
        yield from rec(0, d)

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.variables)}]"


def canonical_ring(genus: int, field=QQ) -> PolynomialRing:
    """Coordinate ring of P^(g-1) with the conventional variable precedence.

    Genus 5 uses (x1,x2,x3,x4,x0); genus 6 uses (x1,...,x5,x0).
    """
    if genus == 5:
        return PolynomialRing(("x1", "x2", "x3", "x4", "x0"), field)
    if genus == 6:
        return PolynomialRing(("x1", "x2", "x3", "x4", "x5", "x0"), field)
    raise ValueError("genus must be 5 or 6")


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Sparse multivariate polynomial in canonical form.

    ``terms`` is a tuple of (monomial, coefficient) pairs, strictly
    decreasing in ``order`` with no zero coefficients.  Instances are
    immutable; all arithmetic returns new canonical polynomials.
    """

    __slots__ = ("ring", "order", "terms")

    def __init__(self, ring, order, terms):
        self.ring = ring
        self.order = order
        self.terms = terms

    @staticmethod
    def from_dict(ring, order, coeffs: dict) -> "Polynomial":
        is_zero = ring.field.is_zero
        items = [(m, c) for m, c in coeffs.items() if not is_zero(c)]
        items.sort(key=lambda t: order.key(t[0]), reverse=True)
        return Polynomial(ring, order, tuple(items))

    # -- predicates and accessors

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(mono_deg(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {mono_deg(m) for m, _ in self.terms}
        return len(degs) == 1

    def coefficient(self, mono: Monomial):
        for m, c in self.terms:
            if m == mono:
                return c
        return self.ring.field.zero

    def as_dict(self) -> dict:
        return dict(self.terms)

    # -- arithmetic

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")
        if self.order != other.order:
            raise ValueError("polynomials with different term orders")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other, self.order)
        self._check(other)
        field = self.ring.field
        res = dict(self.terms)
        for m, c in other.terms:
            acc = field.add(res.get(m, field.zero), c)
            if field.is_zero(acc):
                res.pop(m, None)
            else:
                res[m] = acc
        return Polynomial.from_dict(self.ring, self.order, res)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other, self.order)
        return self + (-other)

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, self.order, tuple((m, neg(c)) for m, c in self.terms))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        field = self.ring.field
        res = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                acc = field.add(res.get(m, field.zero), field.mul(c1, c2))
                if field.is_zero(acc):
                    res.pop(m, None)
                else:
                    res[m] = acc
        return Polynomial.from_dict(self.ring, self.order, res)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one(self.order)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        c = field.normalize(c)
        if field.is_zero(c):
            return self.ring.zero(self.order)
        return Polynomial(self.ring, self.order,
                          tuple((m, field.mul(cc, c)) for m, cc in self.terms))

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        """Multiply by the single term c*mono (order keys are shift-stable)."""
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero(self.order)
        return Polynomial(self.ring, self.order,
                          tuple((mono_mul(m, mono), field.mul(cc, c)) for m, cc in self.terms))

    def primitive(self) -> "Polynomial":
        """Strip rational content (no-op over F_p); sign of the lead kept positive."""
        if not self.terms or not isinstance(self.ring.field, RationalField):
            return self
        num = 0
        den = 1
        for _, c in self.terms:
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        factor = Fraction(den, num) if self.lc() > 0 else Fraction(-den, num)
        return self.scale(factor)

    def with_order(self, order) -> "Polynomial":
        if order == self.order:
            return self
        return Polynomial.from_dict(self.ring, order, dict(self.terms))

    # -- structural maps

    def substitute(self, images: dict, target_ring=None, order=None) -> "Polynomial":
        """Ring homomorphism sending each variable to the given polynomial.

        Keys are variable names or indices of self.ring; unmapped variables
        go to the same-named variable of the target ring.
        """
        ring = target_ring or self.ring
        order = order or self.order
        table = {}
        for key, img in images.items():
            i = key if isinstance(key, int) else self.ring.index(key)
            if img.ring != ring:
                raise ValueError("substitution image in wrong ring")
            table[i] = img.with_order(order)
        for i in range(self.ring.nvars):
            if i not in table:
                table[i] = ring.variable(self.ring.variables[i], order)
        result = ring.zero(order)
        for m, c in self.terms:
            part = ring.constant(c, order)
            for i, e in enumerate(m):
                if e:
                    part = part * table[i] ** e
            result = result + part
        return result

    def evaluate(self, point):
        """Value at a point given as one field element per variable."""
        field = self.ring.field
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong length")
        point = [field.normalize(v) for v in point]
        total = field.zero
        for m, c in self.terms:
            v = c
            for x, e in zip(point, m):
                for _ in range(e):
                    v = field.mul(v, x)
            total = field.add(total, v)
        return total

    # -- comparisons

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if self.order == other.order:
            return self.terms == other.terms
        return dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms)))

    # -- text form (see parse_poly for the grammar)

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        names = self.ring.variables
        rational = isinstance(field, RationalField)
        parts = []
        for k, (m, c) in enumerate(self.terms):
            if rational and c < 0:
                sign = "-" if k == 0 else " - "
                c = -c
            else:
                sign = "" if k == 0 else " + "
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            if not factors:
                parts.append(f"{sign}{c}")
            elif c == field.one:
                parts.append(sign + "*".join(factors))
            else:
                parts.append(f"{sign}{c}*" + "*".join(factors))
        return "".join(parts)

    def __repr__(self):
        return f"<poly {self}>"


# ---------------------------------------------------------------------------
# parsing
#
# poly   := ['-'] term (('+'|'-') term)* ;  term := factor ('*' factor)* ;
# factor := coeff | var ['^' uint] | '(' poly ')' ;
# coeff  := uint ['/' uint] ;  var := name uint?
# Whitespace is insignificant.

class PolyParseError(ValueError):
    """Syntax or semantic error in polynomial text, with line/column info."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class _Parser:
    def __init__(self, text, ring, order):
        self.text = text
        self.ring = ring
        self.order = order
        self.pos = 0

    def error(self, message):
        line = self.text.count("\n", 0, self.pos) + 1
        column = self.pos - (self.text.rfind("\n", 0, self.pos) + 1) + 1
        raise PolyParseError(message, line, column)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def read_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an unsigned integer")
        return int(self.text[start:self.pos])

    def parse_poly(self):
        negate = self.take("-")
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                result = result + self.parse_term()
            elif ch == "-":
                self.pos += 1
                result = result - self.parse_term()
            else:
                return result

    def parse_term(self):
        result = self.parse_factor()
        while self.take("*"):
            result = result * self.parse_factor()
        return result

    def parse_factor(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.parse_poly()
            if not self.take(")"):
                self.error("expected ')'")
            return inner
        if ch.isdigit():
            num = self.read_uint()
            if self.take("/"):
                at = self.pos
                den = self.read_uint()
                if den == 0:
                    self.pos = at
                    self.error("zero denominator")
                if isinstance(self.ring.field, PrimeField) and den % self.ring.field.p == 0:
                    self.pos = at
                    self.error("zero denominator")
                coeff = self.ring.field.div(self.ring.field.from_int(num),
                                            self.ring.field.from_int(den))
                return self.ring.constant(coeff, self.order)
            return self.ring.constant(self.ring.field.from_int(num), self.order)
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.ring.variables:
                self.pos = start
                self.error(f"unknown variable {name!r}")
            var = self.ring.variable(name, self.order)
            if self.take("^"):
                return var ** self.read_uint()
            return var
        self.error("expected a coefficient, variable or '('")


def parse_poly(text: str, ring: PolynomialRing, order=GREVLEX) -> Polynomial:
    """Parse the text grammar into a canonical polynomial."""
    parser = _Parser(text, ring, order)
    result = parser.parse_poly()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("unexpected trailing input")
    return result
