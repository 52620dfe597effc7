"""Partial elimination ideals K_p.

K_p collects the initial coefficients (with respect to the first variable)
of ideal elements of x0-degree p; it lives in the small ring without x0 and,
set-theoretically, cuts out the points of the projection whose fiber has
length > p.  One Groebner basis under an elimination order yields the whole
ascending tower: the initial coefficients of basis elements of x0-degree
<= p form a Groebner basis of K_p.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .gin import apply_change, random_coordinate_change
from .groebner import DEFAULT_DEGREE_CAP, Ideal, reduce_groebner_basis
from .monomial_ideals import MonomialIdeal, minimalize_monomials
from .orders import Revlex, canonical, elimination_order
from .poly import Polynomial


@dataclass(frozen=True)
class X0Profile:
    """x0-degree of a polynomial and its initial coefficient, written in the
    small ring (f = f0*x0^p + lower x0-degree, f0 != 0)."""

    x0_degree: int
    initial_coefficient: Polynomial


def x0_profile(f):
    if f.is_zero:
        raise ValueError("the zero polynomial has no x0-profile")
    small = f.ring.drop_first_variable()
    p = max(m[0] for m in f.terms)
    coeff_terms = {m[1:]: c for m, c in f.terms.items() if m[0] == p}
    return X0Profile(p, Polynomial(small, coeff_terms))


@dataclass
class PartialElimTower:
    """Levels K_0 <= K_1 <= ... <= K_{p_max} as ideals of the small ring,
    each carrying its certified reduced Groebner basis under ``inner_order``,
    plus the big-ring basis they were harvested from."""

    levels: list
    inner_order: object
    source_basis: tuple
    ring: object


def partial_elim_ideals(I, p_max, inner_order=None, degree_cap=DEFAULT_DEGREE_CAP):
    """Compute the tower K_0..K_{p_max} from one elimination-order basis."""
    inner = inner_order if inner_order is not None else Revlex()
    elim = elimination_order(I.ring.nvars, inner)
    G = I.groebner_basis(elim, degree_cap)
    small = I.ring.drop_first_variable()
    profiles = [x0_profile(g) for g in G]
    levels = []
    for p in range(p_max + 1):
        gens = [prof.initial_coefficient for prof in profiles if prof.x0_degree <= p]
        level = Ideal(gens, ring=small)
        # the harvested generators are a Groebner basis for K_p; installing
        # the reduced form avoids ever rerunning Buchberger on a level
        level.set_groebner_basis(inner, reduce_groebner_basis(gens, canonical(inner)))
        levels.append(level)
    return PartialElimTower(levels, inner, G, small)


def monomial_partial_elim(J: MonomialIdeal, p: int) -> MonomialIdeal:
    """K_p of a monomial ideal: strip x0 from generators of x0-degree <= p."""
    small = J.ring.drop_first_variable()
    gens = [g[1:] for g in J.gens if g[0] <= p]
    return MonomialIdeal(small, gens)


def tower_decomposition(tower):
    """The monomial ideal sum over p of x0^p * in(K_p), which must equal the
    initial ideal of the source under the elimination order."""
    if not tower.source_basis:
        raise ValueError("empty tower has no decomposition")
    big_ring = tower.source_basis[0].ring
    inner = tower.inner_order
    gens = []
    for p, level in enumerate(tower.levels):
        for g in level.groebner_basis(inner):
            gens.append((p,) + g.leading_monomial(inner))
    return MonomialIdeal(big_ring, minimalize_monomials(gens))


# ----------------------------------------------------------------------
# definition-level oracle (per-degree linear algebra)


def pei_oracle(I, p, degree_bound, inner_order=None):
    """Graded pieces of K_p straight from the definition.

    For each d <= degree_bound, assemble a spanning set of I_{d+p}, row
    reduce against the degree-(d+p) monomials sorted by decreasing
    x0-degree (then the inner order), and harvest the initial coefficients
    of rows whose leading monomial has x0-degree exactly p.  Returns
    {d: list of small-ring polynomials spanning (K_p)_d}.

    This is a small-instance verification tool, independent of the
    Groebner path.
    """
    ring = I.ring
    if ring.nvars > 4 or degree_bound > 10:
        raise ValueError("oracle is restricted to small instances (<= 4 vars, bound <= 10)")
    inner = inner_order if inner_order is not None else Revlex()
    elim = elimination_order(ring.nvars, inner)
    small = ring.drop_first_variable()
    field = ring.field
    out = {}
    for d in range(degree_bound + 1):
        total = d + p
        columns = sorted(ring.monomials_of_degree(total), key=elim.sort_key)
        col_index = {m: i for i, m in enumerate(columns)}
        rows = []
        for g in I.generators:
            gdeg = g.homogeneous_degree()
            if gdeg > total:
                continue
            for m in ring.monomials_of_degree(total - gdeg):
                shifted = g.term_mul(m)
                row = [field.zero] * len(columns)
                for mm, c in shifted.terms.items():
                    row[col_index[mm]] = c
                rows.append(row)
        if not rows:
            out[d] = []
            continue
        red, pivots = linalg.rref(field, rows)
        pieces = []
        for r, pc in enumerate(pivots):
            lead = columns[pc]
            if lead[0] != p:
                continue
            coeff_terms = {}
            for j in range(pc, len(columns)):
                if red[r][j] != field.zero and columns[j][0] == p:
                    coeff_terms[columns[j][1:]] = red[r][j]
            pieces.append(Polynomial(small, coeff_terms))
        out[d] = pieces
    return out


# ----------------------------------------------------------------------
# distinct-point counting for K_1 (projection to a line)


class PointCountError(Exception):
    pass


def count_distinct_points(J, seed=0, degree_cap=DEFAULT_DEGREE_CAP):
    """Number of distinct points of a finite subscheme of the projective
    plane, by generic projection to a line.

    Requires dim(S/J) = 1 (checked via the Hilbert series of an initial
    ideal).  A random coordinate change is applied, the first variable is
    eliminated, and the degree of the squarefree part of the resulting
    principal generator is returned.  Two seeds must agree, guarding the
    genericity assumption.
    """
    if J.ring.nvars != 3:
        raise PointCountError("point counting expects an ideal in 3 variables")
    data = J.hilbert_data(Revlex(), bound=4, degree_cap=degree_cap)
    if data.dimension != 1:
        raise PointCountError(
            f"expected a finite point set (dimension 1), got dimension {data.dimension}"
        )
    counts = []
    for s in (seed, seed + 1):
        counts.append(_projected_distinct_count(J, s, degree_cap))
    if counts[0] != counts[1]:
        raise PointCountError(f"projection counts disagree across seeds: {counts}")
    return counts[0]


def _projected_distinct_count(J, seed, degree_cap):
    moved = apply_change(J, random_coordinate_change(J.ring, seed))
    elim = elimination_order(3, Revlex())
    basis = moved.groebner_basis(elim, degree_cap)
    eliminated = [g for g in basis if all(m[0] == 0 for m in g.terms)]
    if not eliminated:
        raise PointCountError("elimination produced no binary form (dimension too large?)")
    # the eliminated ideal is principal up to irrelevant-ideal noise; its
    # vanishing locus is cut out by the gcd of the binary forms
    return _squarefree_degree_binary(eliminated)


def _squarefree_degree_binary(forms):
    """Distinct roots in P^1 cut out by binary forms in the last two
    variables of their ring (the squarefree degree of their gcd)."""
    field = forms[0].ring.field
    gcd_u = None
    min_inf = None
    for h in forms:
        degree = h.homogeneous_degree()
        if any(m[0] != 0 for m in h.terms):
            raise PointCountError("form is not binary in the last two variables")
        coeffs = [field.zero] * (degree + 1)
        for m, c in h.terms.items():
            coeffs[m[-2]] = c  # exponent of the next-to-last variable
        dprime = max(i for i, c in enumerate(coeffs) if c != field.zero)
        inf_mult = degree - dprime  # multiplicity of the point [1:0]
        u = coeffs[: dprime + 1]
        gcd_u = u if gcd_u is None else _poly_gcd(field, gcd_u, u)
        min_inf = inf_mult if min_inf is None else min(min_inf, inf_mult)
    du = [field.mul(field.of(i), gcd_u[i]) for i in range(1, len(gcd_u))]
    g = _poly_gcd(field, gcd_u, du)
    return (1 if min_inf > 0 else 0) + (len(gcd_u) - 1) - (len(g) - 1)


def _poly_gcd(field, a, b):
    a, b = list(a), list(b)
    while any(c != field.zero for c in b):
        a = _poly_mod(field, a, b)
        a, b = b, a
    while a and a[-1] == field.zero:
        a.pop()
    return a or [field.zero]


def _poly_mod(field, a, b):
    a = list(a)
    while a and a[-1] == field.zero:
        a.pop()
    db = len(b) - 1
    while len(b) and b[-1] == field.zero:
        b = b[:-1]
        db -= 1
    lead_inv = field.inv(b[-1])
    while len(a) - 1 >= db and any(c != field.zero for c in a):
        shift = len(a) - 1 - db
        q = field.mul(a[-1], lead_inv)
        for i in range(db + 1):
            a[shift + i] = field.sub(a[shift + i], field.mul(q, b[i]))
        while a and a[-1] == field.zero:
            a.pop()
    return a
