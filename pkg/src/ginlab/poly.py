"""Sparse exact-coefficient polynomials.

A polynomial is a mapping {exponent tuple: nonzero coefficient} plus its ring
context.  Values are immutable by convention: no operation mutates an
existing polynomial, so sharing across threads is safe.

Text grammar (used by every file input): terms joined by ``+``/``-``; a term
is ``coeff*x<i>^<e>*...`` with ``*`` separating factors and ``^`` introducing
exponents, coefficient optional (default 1).  Example: ``x0^2*x1 - 3*x2^3``.
"""

from __future__ import annotations

import re

from .orders import Lex
from .rings import mono_degree, mono_mul

_LEX = Lex()


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # dict exps -> nonzero coefficient; not to be mutated

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def constant(cls, ring, c):
        c = ring.field.of(c)
        if c == ring.field.zero:
            return cls(ring, {})
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def variable(cls, ring, i):
        if not 0 <= i < ring.nvars:
            raise ValueError(f"variable index {i} out of range")
        exps = tuple(1 if j == i else 0 for j in range(ring.nvars))
        return cls(ring, {exps: ring.field.one})

    @classmethod
    def monomial(cls, ring, exps, coeff=None):
        coeff = ring.field.one if coeff is None else ring.field.of(coeff)
        if coeff == ring.field.zero:
            return cls(ring, {})
        return cls(ring, {tuple(exps): coeff})

    @classmethod
    def from_terms(cls, ring, items):
        """Build from (exps, coeff) pairs, collecting and purging zeros."""
        field = ring.field
        terms = {}
        for exps, c in items:
            exps = tuple(exps)
            acc = field.add(terms.get(exps, field.zero), field.of(c))
            if acc == field.zero:
                terms.pop(exps, None)
            else:
                terms[exps] = acc
        return cls(ring, terms)

    # ------------------------------------------------------------------
    # structure

    @property
    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """Maximum term degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(mono_degree(m) for m in self.terms)

    def homogeneous_degree(self):
        """The common degree of all terms, or None if inhomogeneous/zero."""
        degs = {mono_degree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    @property
    def is_homogeneous(self):
        return len({mono_degree(m) for m in self.terms}) <= 1

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # ------------------------------------------------------------------
    # arithmetic

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials belong to different ring contexts")

    def __add__(self, other):
        self._check_ring(other)
        field = self.ring.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = field.add(terms.get(m, field.zero), c)
            if acc == field.zero:
                terms.pop(m, None)
            else:
                terms[m] = acc
        return Polynomial(self.ring, terms)

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {m: field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        field = self.ring.field
        c = field.of(c)
        if c == field.zero:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {m: field.mul(v, c) for m, v in self.terms.items()})

    def term_mul(self, exps, coeff=None):
        """Multiply by a single term coeff*x^exps."""
        field = self.ring.field
        coeff = field.one if coeff is None else field.of(coeff)
        if coeff == field.zero:
            return Polynomial.zero(self.ring)
        exps = tuple(exps)
        return Polynomial(
            self.ring, {mono_mul(m, exps): field.mul(c, coeff) for m, c in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_ring(other)
        field = self.ring.field
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = field.add(acc.get(m, field.zero), field.mul(c1, c2))
                if v == field.zero:
                    acc.pop(m, None)
                else:
                    acc[m] = v
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # ------------------------------------------------------------------
    # order-dependent views

    def leading_term(self, order):
        """The order-greatest (monomial, coefficient) pair; errors on zero."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = min(self.terms, key=order.sort_key)
        return m, self.terms[m]

    def leading_monomial(self, order):
        return self.leading_term(order)[0]

    def monic(self, order):
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    def sorted_terms(self, order=None):
        key = (order or _LEX).sort_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]))

    # ------------------------------------------------------------------
    # ring maps

    def substitute(self, images):
        """Substitute x_i -> images[i] (a ring homomorphism on choosing
        polynomial images in a common ring)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = images[0].ring
        powers = [{0: Polynomial.constant(target, 1)} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        out = Polynomial.zero(target)
        for m, c in self.terms.items():
            prod = Polynomial.constant(target, c)
            for i, e in enumerate(m):
                if e:
                    prod = prod * power(i, e)
            out = out + prod
        return out

    def evaluate(self, point):
        """Evaluate at a tuple of field scalars."""
        field = self.ring.field
        total = field.zero
        for m, c in self.terms.items():
            v = c
            for coord, e in zip(point, m):
                for _ in range(e):
                    v = field.mul(v, coord)
            total = field.add(total, v)
        return total

    # ------------------------------------------------------------------
    # text form

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


def format_polynomial(f):
    """Canonical text form: terms in descending (degree, lex) order."""
    if f.is_zero:
        return "0"
    field = f.ring.field
    pieces = []
    for m, c in f.sorted_terms():
        text = field.format(c)
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        mono = f.ring.monomial_str(m)
        if mono == "1":
            body = text
        elif text == "1":
            body = mono
        else:
            body = f"{text}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)


_TERM_SPLIT = re.compile(r"(?<!^)(?<![*^/])\s*([+-])\s*")
_VAR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_NUM_RE = re.compile(r"^\d+(?:/\d+)?$")


class PolynomialParseError(ValueError):
    pass


def parse_polynomial(text, ring):
    """Parse the text grammar into a polynomial over ``ring``."""
    text = text.strip()
    if not text:
        raise PolynomialParseError("empty polynomial text")
    chunks = _TERM_SPLIT.split(text)
    # chunks alternate: term, sign, term, sign, ...
    items = []
    sign = 1
    first = chunks[0].strip()
    if first.startswith("-"):
        sign, first = -1, first[1:].strip()
    elif first.startswith("+"):
        first = first[1:].strip()
    pending = [(sign, first)]
    for i in range(1, len(chunks), 2):
        pending.append((1 if chunks[i] == "+" else -1, chunks[i + 1].strip()))
    for sign, term in pending:
        if not term:
            raise PolynomialParseError("dangling sign in polynomial text")
        items.append(_parse_term(term, ring, sign))
    return Polynomial.from_terms(ring, items)


def _parse_term(term, ring, sign):
    field = ring.field
    coeff = field.one
    exps = [0] * ring.nvars
    for factor in term.split("*"):
        factor = factor.strip()
        if not factor:
            raise PolynomialParseError(f"empty factor in term {term!r}")
        if _NUM_RE.match(factor):
            coeff = field.mul(coeff, field.parse(factor))
            continue
        m = _VAR_RE.match(factor)
        if not m:
            raise PolynomialParseError(f"cannot parse factor {factor!r}")
        exps[_variable_index(ring, m.group(1))] += int(m.group(2) or 1)
    if sign < 0:
        coeff = field.neg(coeff)
    return tuple(exps), coeff


def _variable_index(ring, digits):
    """Resolve a variable token: a declared name wins (so polynomials from
    derived rings round-trip), otherwise the digits are the position."""
    name = f"x{digits}"
    if name in ring.names:
        return ring.names.index(name)
    idx = int(digits)
    if idx >= ring.nvars:
        raise PolynomialParseError(
            f"variable {name} outside ring with variables {', '.join(ring.names)}"
        )
    return idx


def parse_ideal_file(text, ring):
    """One polynomial per line; blank lines and ``#`` comments ignored."""
    polys = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        polys.append(parse_polynomial(line, ring))
    return polys


def random_form(ring, degree, rng):
    """A random homogeneous form of the given degree (dense, nonzero)."""
    field = ring.field
    while True:
        terms = {}
        for m in ring.monomials_of_degree(degree):
            c = field.random(rng)
            if c != field.zero:
                terms[m] = c
        if terms:
            return Polynomial(ring, terms)
