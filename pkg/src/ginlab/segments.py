"""Segment spaces and segment ideals, Macaulay lex ideals, Borel-fixed
enumeration by Hilbert function, and weight-order segment witnesses.

The degree-d segment for an order is the span of the top dim I_d monomials;
taking it in every degree gives a graded monomial space that is an ideal
for lex (Macaulay) but not in general.  Whether a monomial ideal is a
segment for *some* degree-compatible weight order reduces to an exact
strict-inequality feasibility problem solved by Fourier-Motzkin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .fourier_motzkin import feasible_point
from .monomial_ideals import HilbertFunction, MonomialIdeal, hilbert_data, is_borel_fixed, minimalize_monomials
from .orders import Lex


@dataclass(frozen=True)
class SegmentSpace:
    """The u order-greatest monomials of one degree (a down-set within the
    degree: anything larger than a member is a member)."""

    degree: int
    monomials: tuple


def segment_space(d, u, order, ring) -> SegmentSpace:
    mons = ring.monomials_of_degree(d)
    if not 0 <= u <= len(mons):
        raise ValueError(f"segment size {u} out of range for degree {d}")
    ranked = sorted(mons, key=order.sort_key)
    return SegmentSpace(d, tuple(ranked[:u]))


@dataclass
class SegmentIdealResult:
    """Per-degree segments of a Hilbert function plus whether they close
    under multiplication by linear forms (then they really are the graded
    pieces of a monomial ideal)."""

    spaces: list
    is_ideal: bool
    ring: object
    order: object

    def monomial_ideal(self) -> MonomialIdeal:
        if not self.is_ideal:
            raise ValueError("segment spaces do not form an ideal")
        gens = []
        prev = set()
        for space in self.spaces:
            expanded = _expand(prev, self.ring) if space.degree else set()
            gens.extend(m for m in space.monomials if m not in expanded)
            prev = set(space.monomials)
        return MonomialIdeal(self.ring, gens)


def _expand(monomials, ring):
    out = set()
    for m in monomials:
        for i in range(ring.nvars):
            out.add(tuple(e + (1 if k == i else 0) for k, e in enumerate(m)))
    return out


def segment_ideal_of(hf: HilbertFunction, order, ring, bound) -> SegmentIdealResult:
    """Segments Seg(d, dim I_d) for d <= bound and the ideal-closure verdict
    (S_1 * Seg(d) inside Seg(d+1) for every d < bound)."""
    spaces = []
    for d in range(bound + 1):
        u = hf.ideal_dimension(ring, d)
        if not 0 <= u <= ring.monomial_count(d):
            raise ValueError(f"inconsistent Hilbert function at degree {d}")
        spaces.append(segment_space(d, u, order, ring))
    is_ideal = True
    for low, high in zip(spaces, spaces[1:]):
        expanded = _expand(set(low.monomials), ring)
        if not expanded <= set(high.monomials):
            is_ideal = False
            break
    return SegmentIdealResult(spaces, is_ideal, ring, order)


def lex_ideal_of_hf(hf: HilbertFunction, ring, bound) -> MonomialIdeal:
    """The lex-segment ideal with the given Hilbert function (generators
    collected up to ``bound``).  Failure of segment closure certifies the
    input is not an achievable Hilbert function."""
    result = segment_ideal_of(hf, Lex(), ring, bound)
    if not result.is_ideal:
        raise ValueError("lex segments fail ideal closure: not an O-sequence")
    return result.monomial_ideal()


# ----------------------------------------------------------------------
# Borel-fixed enumeration


def enumerate_borel_by_hf(hf: HilbertFunction, ring, bound):
    """All Borel-fixed monomial ideals with the given Hilbert function,
    found by exhaustive degree-by-degree search over Borel-closed monomial
    sets of the required dimension.

    Small instances only (guarded); every returned ideal is verified to be
    Borel-fixed and to reproduce the Hilbert function exactly."""
    if ring.nvars > 3 or bound > 10:
        raise ValueError("enumeration is restricted to <= 3 variables, bound <= 10")
    # branches: (frozen degree-d monomial set, generators found so far)
    branches = [(frozenset(), ())]
    for d in range(1, bound + 1):
        want = hf.ideal_dimension(ring, d)
        mons = ring.monomials_of_degree(d)
        nxt = {}
        for space, gens in branches:
            base = frozenset(m for m in _expand(space, ring) if len(m) == ring.nvars)
            if len(base) > want:
                continue
            for filled in _borel_closed_fills(base, want, mons):
                new_gens = tuple(sorted(filled - base))
                key = (filled, gens + new_gens)
                nxt[key] = None
        branches = list(nxt)
        if not branches:
            return []
    out = {}
    for space, gens in branches:
        J = MonomialIdeal(ring, minimalize_monomials(gens))
        if J in out:
            continue
        if not is_borel_fixed(J):
            continue
        data = hilbert_data(J, bound)
        if tuple(data.hf.dims) != tuple(hf.dims[: bound + 1]):
            continue
        if hf.stable_value is not None and data.hf.stable_value != hf.stable_value:
            continue
        out[J] = None
    return sorted(out, key=lambda J: J.gens)


def _borel_parents(m):
    """Monomials forced into any Borel-closed set containing m."""
    out = []
    for i, e in enumerate(m):
        if e == 0:
            continue
        for j in range(i):
            parent = list(m)
            parent[i] -= 1
            parent[j] += 1
            out.append(tuple(parent))
    return out


def _borel_closed_fills(base, size, mons):
    """All Borel-closed supersets of ``base`` of exactly ``size`` monomials
    within one degree."""
    if len(base) == size:
        return [base]
    current = {base}
    for _ in range(size - len(base)):
        nxt = set()
        for s in current:
            for m in mons:
                if m in s:
                    continue
                if all(p in s for p in _borel_parents(m)):
                    nxt.add(s | {m})
        current = nxt
        if not current:
            return []
    return sorted(current, key=sorted)


# ----------------------------------------------------------------------
# weight-order segment witnesses


@dataclass(frozen=True)
class WeightWitness:
    """A positive weight vector certifying that an ideal is a segment in all
    degrees of the certified range."""

    weights: tuple
    certified_degrees: tuple


def segment_witness(J: MonomialIdeal, degree_range=None):
    """A weight vector making J a segment degreewise over ``degree_range``
    (default: degrees 1 through max generator degree + 1), or None when the
    strict system is infeasible (certified by Fourier-Motzkin).

    The witness satisfies w . (m - n) > 0 for every in/out monomial pair
    (m, n) per degree, with strictly positive entries."""
    if degree_range is None:
        degree_range = (1, J.max_generator_degree() + 1)
    lo, hi = degree_range
    nvars = J.ring.nvars
    constraints = []
    for i in range(nvars):
        unit = tuple(1 if k == i else 0 for k in range(nvars))
        constraints.append((unit, True))
    for d in range(lo, hi + 1):
        inside = set(J.monomials_of_degree(d))
        if not inside:
            continue
        outside = [m for m in J.ring.monomials_of_degree(d) if m not in inside]
        if not outside:
            continue
        diffs = {tuple(a - b for a, b in zip(m, n)) for m in inside for n in outside}
        constraints.extend((diff, True) for diff in diffs)
    point = feasible_point(constraints, nvars)
    if point is None:
        return None
    weights = _scale_to_integers(point)
    witness = WeightWitness(weights, (lo, hi))
    assert verify_weight_witness(J, weights, (lo, hi))
    return witness


def verify_weight_witness(J: MonomialIdeal, weights, degree_range) -> bool:
    """Check w . (m - n) > 0 for every in/out pair in the degree range."""
    lo, hi = degree_range
    if len(weights) != J.ring.nvars or any(w <= 0 for w in weights):
        return False
    for d in range(lo, hi + 1):
        inside = set(J.monomials_of_degree(d))
        if not inside:
            continue
        outside = [m for m in J.ring.monomials_of_degree(d) if m not in inside]
        if not outside:
            continue
        min_in = min(sum(w * e for w, e in zip(weights, m)) for m in inside)
        max_out = max(sum(w * e for w, e in zip(weights, m)) for m in outside)
        if not min_in > max_out:
            return False
    return True


def _scale_to_integers(point):
    denom = 1
    for value in point:
        f = Fraction(value)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(Fraction(v) * denom) for v in point]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)
