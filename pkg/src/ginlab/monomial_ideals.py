"""Monomial ideals: minimal generators, Hilbert series, Borel property,
Eliahou-Kervaire Betti numbers, and saturation.

The Hilbert series of S/J is computed exactly as N(t)/(1-t)^n by the
standard splitting recursion; dimension and degree are read off the
numerator (pole order at t=1 and value of the reduced numerator there).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .orders import Lex
from .poly import Polynomial
from .rings import mono_degree, mono_divides

_LEX = Lex()


def minimalize_monomials(gens):
    """Drop generators divisible by another; deterministic canonical sort."""
    unique = sorted(set(tuple(g) for g in gens), key=_canon_key)
    out = []
    for m in unique:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


def _canon_key(m):
    return (mono_degree(m), tuple(-e for e in m))


class MonomialIdeal:
    """A monomial ideal held by its minimal generators, canonically sorted
    (degree, then descending lex)."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring, gens, *, _trusted=False):
        self.ring = ring
        self.gens = tuple(gens) if _trusted else minimalize_monomials(gens)
        for g in self.gens:
            if len(g) != ring.nvars:
                raise ValueError("generator length does not match ring")

    @classmethod
    def from_strings(cls, ring, texts):
        from .poly import parse_polynomial

        gens = []
        for t in texts:
            f = parse_polynomial(t, ring)
            if len(f.terms) != 1:
                raise ValueError(f"{t!r} is not a monomial")
            gens.append(next(iter(f.terms)))
        return cls(ring, gens)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and other.ring == self.ring
            and other.gens == self.gens
        )

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self})"

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(self.ring.monomial_str(g) for g in self.gens) + ")"

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return bool(self.gens) and not any(self.gens[0])

    def contains(self, m):
        return any(mono_divides(g, m) for g in self.gens)

    def monomials_of_degree(self, d):
        """Degree-d monomials inside the ideal, canonical order."""
        return tuple(m for m in self.ring.monomials_of_degree(d) if self.contains(m))

    def max_generator_degree(self):
        if not self.gens:
            return 0
        return max(mono_degree(g) for g in self.gens)

    def generator_strings(self):
        return tuple(self.ring.monomial_str(g) for g in self.gens)

    def generators_as_polynomials(self):
        return tuple(Polynomial.monomial(self.ring, g) for g in self.gens)


# ----------------------------------------------------------------------
# Borel property


def is_borel_fixed(J: MonomialIdeal) -> bool:
    """True if for every generator m, every x_i | m and every j < i the swap
    (m / x_i) * x_j stays inside the ideal."""
    for m in J.gens:
        for i in range(J.ring.nvars):
            if m[i] == 0:
                continue
            for j in range(i):
                swapped = list(m)
                swapped[i] -= 1
                swapped[j] += 1
                if not J.contains(tuple(swapped)):
                    return False
    return True


def borel_regularity(J: MonomialIdeal) -> int:
    """Regularity of a Borel-fixed ideal: its maximum generator degree.

    This shortcut is only valid for Borel-fixed ideals (characteristic zero
    or a large-prime surrogate), so non-Borel input is an error.
    """
    if not is_borel_fixed(J):
        raise ValueError("regularity from generator degrees requires a Borel-fixed ideal")
    return J.max_generator_degree()


def ek_betti(J: MonomialIdeal):
    """Graded Betti numbers of a Borel-fixed (stable) monomial ideal via the
    Eliahou-Kervaire resolution: each generator u of degree d contributes
    C(max(u), i) to beta_{i, i+d}, where max(u) is the largest variable
    index dividing u."""
    if not is_borel_fixed(J):
        raise ValueError("Eliahou-Kervaire Betti numbers require a Borel-fixed ideal")
    table = {}
    for u in J.gens:
        d = mono_degree(u)
        m = max(i for i, e in enumerate(u) if e > 0) if any(u) else 0
        for i in range(m + 1):
            key = (i, i + d)
            table[key] = table.get(key, 0) + comb(m, i)
    return table


def betti_regularity(table) -> int:
    """max(j - i) over nonzero entries of a graded Betti table."""
    return max(j - i for (i, j), v in table.items() if v)


# ----------------------------------------------------------------------
# Hilbert series


def hilbert_numerator(J: MonomialIdeal):
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^n of S/J, as a
    coefficient list over the integers."""
    acc = {}
    _hs_recurse(list(J.gens), 0, 1, acc, J.ring.nvars)
    if not acc:
        return [0]
    out = [0] * (max(acc) + 1)
    for k, v in acc.items():
        out[k] = v
    return out


def _hs_recurse(gens, shift, sign, acc, nvars):
    gens = list(minimalize_monomials(gens))
    if not gens:
        acc[shift] = acc.get(shift, 0) + sign
        return
    if not any(gens[0]):  # unit ideal
        return
    if _supports_disjoint(gens):
        # N = prod (1 - t^deg)
        poly = {0: 1}
        for g in gens:
            d = mono_degree(g)
            nxt = {}
            for k, v in poly.items():
                nxt[k] = nxt.get(k, 0) + v
                nxt[k + d] = nxt.get(k + d, 0) - v
            poly = nxt
        for k, v in poly.items():
            if v:
                acc[shift + k] = acc.get(shift + k, 0) + sign * v
        return
    # pivot on the most frequent variable among non-pure-power generators
    counts = [0] * nvars
    for g in gens:
        if sum(1 for e in g if e) > 1:
            for i, e in enumerate(g):
                if e:
                    counts[i] += 1
    var = counts.index(max(counts))
    # J + (x): generators not divisible by x survive, plus x itself
    plus = [g for g in gens if g[var] == 0]
    plus.append(tuple(1 if i == var else 0 for i in range(nvars)))
    # J : x, shifted by t
    colon = [tuple(e - 1 if i == var and e > 0 else e for i, e in enumerate(g)) for g in gens]
    _hs_recurse(plus, shift, sign, acc, nvars)
    _hs_recurse(colon, shift + 1, sign, acc, nvars)


def _supports_disjoint(gens):
    seen = set()
    for g in gens:
        sup = {i for i, e in enumerate(g) if e}
        if sup & seen:
            return False
        seen |= sup
    return True


def _divide_one_minus_t(numer):
    """Exact division of a coefficient list by (1 - t); None if not divisible."""
    if sum(numer) != 0:
        return None
    out = []
    run = 0
    for c in numer[:-1]:
        run += c
        out.append(run)
    return out or [0]


@dataclass(frozen=True)
class HilbertFunction:
    """Values h(d) = dim (S/I)_d for d = 0..bound, plus the eventual constant
    when the quotient has dimension <= 1 (None otherwise)."""

    dims: tuple
    bound: int
    stable_value: object = None

    def h(self, d):
        if d <= self.bound:
            return self.dims[d]
        if self.stable_value is not None and all(
            v == self.stable_value for v in self.dims[-2:]
        ):
            return self.stable_value
        raise ValueError(f"Hilbert function only computed up to degree {self.bound}")

    def ideal_dimension(self, ring, d):
        """dim I_d for the ideal this is the quotient Hilbert function of."""
        return ring.monomial_count(d) - self.h(d)


@dataclass(frozen=True)
class HilbertData:
    hf: HilbertFunction
    dimension: int
    degree: int
    numerator: tuple


def hilbert_data(J: MonomialIdeal, bound: int) -> HilbertData:
    """Exact Hilbert information of S/J: function values to ``bound``, Krull
    dimension (pole order at t=1), and degree (reduced numerator at t=1)."""
    numer = hilbert_numerator(J)
    n = J.ring.nvars
    reduced = list(numer)
    poles = 0
    while any(reduced):
        nxt = _divide_one_minus_t(reduced)
        if nxt is None:
            break
        reduced = nxt
        poles += 1
    if not any(numer):
        dimension = -1  # S/J = 0
        degree = 0
    else:
        dimension = n - poles
        degree = sum(reduced)
    dims = _series_values(numer, n, bound)
    stable = None
    if dimension <= 0:
        stable = 0
    elif dimension == 1:
        stable = degree
    return HilbertData(HilbertFunction(tuple(dims), bound, stable), dimension, degree, tuple(numer))


def _series_values(numer, nvars, bound):
    return [
        sum(numer[j] * comb(nvars - 1 + d - j, nvars - 1) for j in range(min(d, len(numer) - 1) + 1))
        for d in range(bound + 1)
    ]


def monomial_hilbert(J: MonomialIdeal, bound: int):
    """(HilbertFunction, dimension, degree, numerator) of S/J."""
    data = hilbert_data(J, bound)
    return data.hf, data.dimension, data.degree, data.numerator


# ----------------------------------------------------------------------
# saturation


def saturate_variable(J: MonomialIdeal, var_index: int):
    """Saturation J : x_i^infinity (strip all powers of x_i from the
    generators) together with the saturation degree: the least d from which
    J and its saturation agree, computed from the exact Hilbert series."""
    if not 0 <= var_index < J.ring.nvars:
        raise ValueError("variable index out of range")
    stripped = [
        tuple(0 if i == var_index else e for i, e in enumerate(g)) for g in J.gens
    ]
    sat = MonomialIdeal(J.ring, stripped)
    diff = _numer_difference(hilbert_numerator(J), hilbert_numerator(sat))
    # (N_J - N_sat)/(1-t)^n is the generating polynomial of dim (sat/J)_d,
    # which has finite support
    for _ in range(J.ring.nvars):
        nxt = _divide_one_minus_t(diff)
        if nxt is None:
            raise RuntimeError("saturation series difference is not finitely supported")
        diff = nxt
    support = [d for d, c in enumerate(diff) if c]
    sat_degree = (max(support) + 1) if support else 0
    return sat, sat_degree


def saturate_borel(J: MonomialIdeal):
    """Saturation with respect to the maximal ideal.  For a Borel-fixed
    ideal this equals saturation with respect to the last variable; calling
    it on anything else is an error."""
    if not is_borel_fixed(J):
        raise ValueError("maximal-ideal saturation shortcut requires a Borel-fixed ideal")
    return saturate_variable(J, J.ring.nvars - 1)


def saturate_monomial(J: MonomialIdeal, var_index: int):
    """Raw x_i-saturation; see :func:`saturate_borel` for m-saturation."""
    return saturate_variable(J, var_index)


def _numer_difference(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
