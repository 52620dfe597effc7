"""Ring contexts and exponent-tuple monomial utilities.

Monomials are bare tuples of non-negative ints of length ``ring.nvars``; the
degree is the tuple sum.  The ring context caches the canonical (lex
descending) enumeration of each graded piece, which every dense computation
indexes into.
"""

from __future__ import annotations

from math import comb


def mono_degree(m):
    return sum(m)


def mono_mul(m, n):
    return tuple(a + b for a, b in zip(m, n))


def mono_divides(m, n):
    """True if x^m divides x^n."""
    return all(a <= b for a, b in zip(m, n))


def mono_div(m, n):
    """Exponent tuple of x^m / x^n; requires divisibility."""
    out = tuple(a - b for a, b in zip(m, n))
    if any(e < 0 for e in out):
        raise ValueError("monomial division with negative exponent")
    return out


def mono_lcm(m, n):
    return tuple(a if a > b else b for a, b in zip(m, n))


def _enumerate_degree(nvars, d):
    """Degree-d exponent tuples in descending lex order."""
    if nvars == 0:
        return [()] if d == 0 else []
    if nvars == 1:
        return [(d,)]
    out = []
    for e in range(d, -1, -1):
        for rest in _enumerate_degree(nvars - 1, d - e):
            out.append((e,) + rest)
    return out


class RingContext:
    """A polynomial ring k[x0..x{n-1}]: variable count, names, and the
    coefficient field.  Immutable after creation; every polynomial refers to
    exactly one context."""

    __slots__ = ("nvars", "field", "names", "_graded", "_graded_index", "_small")

    def __init__(self, nvars, field, names=None):
        if nvars < 1:
            raise ValueError("ring needs at least one variable")
        if names is None:
            names = tuple(f"x{i}" for i in range(nvars))
        else:
            names = tuple(names)
        if len(names) != nvars or len(set(names)) != nvars:
            raise ValueError("variable names must be distinct and match nvars")
        self.nvars = nvars
        self.field = field
        self.names = names
        self._graded = {}
        self._graded_index = {}
        self._small = None

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and other.nvars == self.nvars
            and other.field == self.field
            and other.names == self.names
        )

    def __hash__(self):
        return hash((self.nvars, self.field, self.names))

    def __repr__(self):
        return f"RingContext({','.join(self.names)}; {self.field})"

    def monomial_count(self, d):
        return comb(self.nvars - 1 + d, self.nvars - 1)

    def monomials_of_degree(self, d):
        """All degree-d monomials in descending lex order (cached)."""
        cached = self._graded.get(d)
        if cached is None:
            cached = tuple(_enumerate_degree(self.nvars, d))
            self._graded[d] = cached
        return cached

    def monomial_index(self, d):
        """Map monomial -> position in ``monomials_of_degree(d)`` (cached)."""
        cached = self._graded_index.get(d)
        if cached is None:
            cached = {m: i for i, m in enumerate(self.monomials_of_degree(d))}
            self._graded_index[d] = cached
        return cached

    def drop_first_variable(self):
        """The context in one fewer variable (the image ring of projection
        from the first coordinate point); cached on the parent."""
        if self.nvars < 2:
            raise ValueError("cannot drop the only variable")
        if self._small is None:
            self._small = RingContext(self.nvars - 1, self.field, self.names[1:])
        return self._small

    def monomial_str(self, m):
        if not any(m):
            return "1"
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)
