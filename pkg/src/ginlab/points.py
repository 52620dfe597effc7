"""Finite point sets, their vanishing ideals, and evaluation matrices.

Vanishing ideals are assembled from per-degree kernels of the evaluation
matrix X_d (rows = points, columns = degree-d monomials in descending lex
order): exact, simple, and independently checkable; the regularity bound
reg <= s keeps the needed degrees small.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .groebner import Ideal
from .poly import Polynomial
from .rings import RingContext


@dataclass(frozen=True)
class PointSet:
    """s projective points given by coordinate tuples of length r+1; no zero
    tuples, pairwise distinct projectively."""

    field: object
    points: tuple
    seed: object = None

    def __post_init__(self):
        if not self.points:
            raise ValueError("point set is empty")
        length = len(self.points[0])
        for pt in self.points:
            if len(pt) != length:
                raise ValueError("points have inconsistent coordinate length")
            if all(c == self.field.zero for c in pt):
                raise ValueError("the zero tuple is not a projective point")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points are not pairwise distinct")
        for a, b in combinations(self.points, 2):
            if _proportional(self.field, a, b):
                raise ValueError("points are not projectively distinct")

    @property
    def size(self):
        return len(self.points)

    @property
    def r(self):
        return len(self.points[0]) - 1

    def ring(self):
        return RingContext(self.r + 1, self.field)


def _proportional(field, a, b):
    lead = next(i for i, c in enumerate(a) if c != field.zero)
    if b[lead] == field.zero:
        return False
    ratio = field.div(b[lead], a[lead])
    return all(field.mul(x, ratio) == y for x, y in zip(a, b))


def random_points(s, r, seed, field):
    """s distinct points with uniform coordinates, normalized to last
    coordinate 1 (so distinct tuples are distinct projectively);
    deterministic in the seed."""
    rng = random.Random(seed)
    pts = set()
    while len(pts) < s:
        pts.add(tuple(field.random(rng) for _ in range(r)) + (field.one,))
    return PointSet(field, tuple(sorted(pts, key=str)), seed)


def explicit_points(field, coords, seed=None):
    """Wrap explicit integer coordinates as a PointSet over the field."""
    pts = tuple(tuple(field.of(c) for c in pt) for pt in coords)
    return PointSet(field, pts, seed)


#: Seven points of P^3 whose quadrics all share a linear factor even though
#: the Hilbert function is the generic one; pins the boundary of the
#: segment-ideal theorem.
SEVEN_POINTS_SHARED_FACTOR = (
    (0, 0, 0, 1),
    (0, 0, 1, 1),
    (0, 0, 2, 1),
    (0, 1, 0, 1),
    (0, 1, 1, 1),
    (0, 2, 0, 1),
    (1, 0, 0, 1),
)

#: The ten lattice points (a, b, c, 1) with a+b+c <= 2 in P^3: generic
#: Hilbert function, but every generic projection lands on a plane cubic.
TEN_POINTS_LATTICE_SIMPLEX = tuple(
    (a, b, c, 1)
    for a in range(3)
    for b in range(3)
    for c in range(3)
    if a + b + c <= 2
)


def evaluation_matrix(P: PointSet, d, ring=None):
    """The s x C(r+d, r) matrix of degree-d monomials (descending lex order)
    evaluated at the points."""
    ring = ring if ring is not None else P.ring()
    field = P.field
    mons = ring.monomials_of_degree(d)
    rows = []
    for pt in P.points:
        row = []
        for m in mons:
            v = field.one
            for coord, e in zip(pt, m):
                for _ in range(e):
                    v = field.mul(v, coord)
            row.append(v)
        rows.append(row)
    return rows


class DegeneratePointsError(Exception):
    pass


def vanishing_ideal(P: PointSet, degree_bound=None, ring=None):
    """The homogeneous ideal of the point set, generated by a minimal basis
    of its graded pieces up to ``degree_bound`` (default s, which covers all
    generators since reg <= s).

    Raises DegeneratePointsError if the Hilbert function fails to stabilize
    at the number of points by the bound."""
    ring = ring if ring is not None else P.ring()
    s = P.size
    bound = degree_bound if degree_bound is not None else s
    if bound < s:
        raise ValueError("degree_bound below the point count cannot certify generators")
    field = P.field
    gens = []
    prev_kernel = []
    hf = [1]
    for d in range(1, bound + 1):
        mons = ring.monomials_of_degree(d)
        index = {m: i for i, m in enumerate(mons)}
        x_d = evaluation_matrix(P, d, ring)
        kernel = linalg.kernel_basis(field, x_d, len(mons))
        hf.append(len(mons) - len(kernel))
        # seed an echelon with the span of S_1 * I_{d-1}; kernel vectors that
        # still enlarge it are the new minimal generators in degree d
        echelon = linalg.Echelon(field, len(mons))
        for vec in prev_kernel:
            poly = _vector_to_poly(ring, ring.monomials_of_degree(d - 1), vec)
            for i in range(ring.nvars):
                shifted = poly.term_mul(tuple(1 if k == i else 0 for k in range(ring.nvars)))
                row = [field.zero] * len(mons)
                for m, c in shifted.terms.items():
                    row[index[m]] = c
                echelon.add(row)
        for vec in kernel:
            if echelon.add(vec):
                gens.append(_vector_to_poly(ring, mons, vec))
        prev_kernel = kernel
    if hf[min(s - 1, bound)] != s or hf[bound] != s:
        raise DegeneratePointsError(
            f"Hilbert function {hf} fails to stabilize at {s} points"
        )
    return Ideal(gens, ring=ring)


def _vector_to_poly(ring, mons, vec):
    field = ring.field
    return Polynomial(ring, {m: c for m, c in zip(mons, vec) if c != field.zero})


@dataclass
class SpotCheckReport:
    """Outcome of sampling maximal minors of the evaluation matrices."""

    tested: int
    failures: list  # (degree, column tuple) with vanishing maximal minor
    skipped_degrees: list

    @property
    def all_nonzero(self):
        return not self.failures


def genericity_spot_check(P: PointSet, d_max, samples, seed=0, ring=None):
    """Sample s-column subsets of each X_d (d <= d_max) and test the maximal
    minors for nonvanishing; full verification is exponential, so this is a
    Monte-Carlo spot check.  ``samples='all'`` enumerates every subset."""
    ring = ring if ring is not None else P.ring()
    rng = random.Random(seed)
    s = P.size
    failures = []
    skipped = []
    tested = 0
    for d in range(1, d_max + 1):
        n_cols = ring.monomial_count(d)
        if n_cols < s:
            skipped.append(d)
            continue
        x_d = evaluation_matrix(P, d, ring)
        if samples == "all":
            subsets = combinations(range(n_cols), s)
        else:
            subsets = (
                tuple(sorted(rng.sample(range(n_cols), s))) for _ in range(samples)
            )
        for cols in subsets:
            minor = [[row[c] for c in cols] for row in x_d]
            tested += 1
            if linalg.det(P.field, minor) == P.field.zero:
                failures.append((d, tuple(cols)))
    return SpotCheckReport(tested, failures, skipped)


def load_points(text, field):
    """Point-file format: one point per line, comma-separated integers."""
    coords = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        coords.append(tuple(int(x) for x in line.split(",")))
    if not coords:
        raise ValueError("no points in file")
    return explicit_points(field, coords)
