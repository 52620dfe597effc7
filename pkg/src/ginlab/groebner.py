"""Division, Buchberger's algorithm, initial ideals, and Hilbert functions.

The algorithm is plain Buchberger with the normal selection strategy and the
two classical pruning criteria (coprime leading terms and the chain
criterion, installed Gebauer-Moeller style).  Since all input is homogeneous
and the order is degree compatible, pairs are processed by increasing degree
and a degree cap aborts runaway runs soundly.

Reductions dominate the cost, so over a prime field they run on dense
per-degree coefficient vectors (numpy int64, entries < 2**31, products safe
in int64); the structural algorithm is identical to the exact sparse path
used for rational coefficients.
"""

from __future__ import annotations

import heapq

import numpy as np

from .monomial_ideals import MonomialIdeal, hilbert_data
from .orders import Revlex, canonical
from .poly import Polynomial
from .rings import mono_div, mono_divides, mono_lcm, mono_mul

DEFAULT_DEGREE_CAP = 60

# dense vectors are only worth it while a graded piece fits comfortably in memory
_DENSE_PIECE_LIMIT = 400_000


class DegreeCapExceeded(Exception):
    """Raised when an S-polynomial would exceed the degree cap; carries the
    degree reached so callers can report or retry with a larger cap."""

    def __init__(self, degree, cap):
        super().__init__(f"S-polynomial of degree {degree} exceeds degree cap {cap}")
        self.degree = degree
        self.cap = cap


# ----------------------------------------------------------------------
# reduction engines


class _DenseEngine:
    """Homogeneous reduction arithmetic on order-sorted dense vectors."""

    def __init__(self, ring, order):
        self.ring = ring
        self.order = order
        self.p = ring.field.p
        self._mons = {}
        self._index = {}
        self._exps = {}
        self._maps = {}
        self.basis = []  # (degree, vector) with monic leading coefficient
        self.lts = []  # leading exponent tuples
        self._lt_mat = None

    def _degree_tables(self, d):
        if d not in self._mons:
            mons = sorted(self.ring.monomials_of_degree(d), key=self.order.sort_key)
            self._mons[d] = mons
            self._index[d] = {m: i for i, m in enumerate(mons)}
            self._exps[d] = np.array(mons, dtype=np.int64)
        return self._mons[d]

    def prepare(self, f):
        """Polynomial -> (degree, vector), or None for zero."""
        if f.is_zero:
            return None
        d = f.homogeneous_degree()
        if d is None:
            raise ValueError("dense engine requires homogeneous polynomials")
        self._degree_tables(d)
        idx = self._index[d]
        v = np.zeros(len(idx), dtype=np.int64)
        for m, c in f.terms.items():
            v[idx[m]] = c
        return d, v

    def to_polynomial(self, d, v):
        mons = self._degree_tables(d)
        nz = np.flatnonzero(v)
        return Polynomial(self.ring, {mons[i]: int(v[i]) for i in nz})

    def _mulmap(self, src_deg, delta):
        key = (src_deg, delta)
        cached = self._maps.get(key)
        if cached is None:
            dst = src_deg + sum(delta)
            self._degree_tables(dst)
            idx = self._index[dst]
            src = self._mons[src_deg]
            cached = np.fromiter(
                (idx[mono_mul(m, delta)] for m in src), dtype=np.int64, count=len(src)
            )
            self._maps[key] = cached
        return cached

    def add_basis(self, d, v):
        lead = int(np.flatnonzero(v)[0])
        inv = pow(int(v[lead]), -1, self.p)
        v = v * inv % self.p
        self.basis.append((d, v))
        self.lts.append(self._mons[d][lead])
        self._lt_mat = None
        return len(self.basis) - 1

    def _lt_matrix(self):
        if self._lt_mat is None or len(self._lt_mat) != len(self.lts):
            self._lt_mat = np.array(self.lts, dtype=np.int64)
        return self._lt_mat

    def reduce(self, d, v, full=True, mask=None):
        """Reduce v against the basis, greatest monomial first, first listed
        divisor.  ``full=False`` stops once the leading monomial is
        irreducible.  Returns None when the result is zero."""
        if not self.basis:
            return None if not v.any() else v
        p = self.p
        lt_mat = self._lt_matrix()
        exps = self._exps[d]
        mons = self._mons[d]
        v = v % p
        n = len(v)
        i = 0
        while i < n:
            if v[i] == 0:
                i += 1
                continue
            hits = np.flatnonzero((lt_mat <= exps[i]).all(axis=1))
            if mask is not None and hits.size:
                hits = hits[mask[hits]]
            if hits.size == 0:
                if not full:
                    break
                i += 1
                continue
            g = int(hits[0])
            gd, gv = self.basis[g]
            delta = mono_div(mons[i], self.lts[g])
            mp = self._mulmap(gd, delta)
            v[mp] = (v[mp] - int(v[i]) * gv) % p
        return v if v.any() else None

    def spair(self, i, j):
        """S-polynomial vector of two (monic) basis elements."""
        lcm = mono_lcm(self.lts[i], self.lts[j])
        d = sum(lcm)
        self._degree_tables(d)
        out = np.zeros(len(self._mons[d]), dtype=np.int64)
        di, vi = self.basis[i]
        dj, vj = self.basis[j]
        out[self._mulmap(di, mono_div(lcm, self.lts[i]))] += vi
        out[self._mulmap(dj, mono_div(lcm, self.lts[j]))] -= vj
        return d, out % self.p


class _SparseEngine:
    """Exact dict-based reduction; handles any field and inhomogeneous input."""

    def __init__(self, ring, order):
        self.ring = ring
        self.order = order
        self.field = ring.field
        self.key = order.sort_key
        self.basis = []  # monic term dicts
        self.lts = []

    def prepare(self, f):
        if f.is_zero:
            return None
        return f.total_degree(), dict(f.terms)

    def to_polynomial(self, d, terms):
        return Polynomial(self.ring, dict(terms))

    def add_basis(self, d, terms):
        lt = min(terms, key=self.key)
        inv = self.field.inv(terms[lt])
        monic = {m: self.field.mul(c, inv) for m, c in terms.items()}
        self.basis.append((d, monic))
        self.lts.append(lt)
        return len(self.basis) - 1

    def _divisor(self, m, mask):
        for g, lt in enumerate(self.lts):
            if mask is not None and not mask[g]:
                continue
            if mono_divides(lt, m):
                return g
        return None

    def reduce(self, d, terms, full=True, mask=None):
        field = self.field
        work = dict(terms)
        out = {}
        heap = [(self.key(m), m) for m in work]
        heapq.heapify(heap)
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m, field.zero)
            if c == field.zero:
                continue
            g = self._divisor(m, mask)
            if g is None:
                if not full:
                    out[m] = c
                    out.update(work)
                    break
                out[m] = c
                continue
            delta = mono_div(m, self.lts[g])
            for mg, cg in self.basis[g][1].items():
                if mg == self.lts[g]:
                    continue
                mm = mono_mul(mg, delta)
                fresh = mm not in work
                acc = field.sub(work.get(mm, field.zero), field.mul(c, cg))
                if acc == field.zero:
                    work.pop(mm, None)
                else:
                    work[mm] = acc
                    if fresh:
                        heapq.heappush(heap, (self.key(mm), mm))
        return out if out else None

    def spair(self, i, j):
        field = self.field
        lcm = mono_lcm(self.lts[i], self.lts[j])
        terms = {}
        for src, sign in ((i, 1), (j, -1)):
            delta = mono_div(lcm, self.lts[src])
            for m, c in self.basis[src][1].items():
                mm = mono_mul(m, delta)
                val = c if sign > 0 else field.neg(c)
                acc = field.add(terms.get(mm, field.zero), val)
                if acc == field.zero:
                    terms.pop(mm, None)
                else:
                    terms[mm] = acc
        return sum(lcm), terms


def _make_engine(ring, order, max_degree):
    if ring.field.is_prime_field and ring.monomial_count(max_degree) <= _DENSE_PIECE_LIMIT:
        return _DenseEngine(ring, order)
    return _SparseEngine(ring, order)


# ----------------------------------------------------------------------
# Buchberger


def _gm_add(engine, pairs, d, v, order):
    """Add a reduced element, installing new pairs with Gebauer-Moeller
    bookkeeping of the coprime and chain criteria."""
    idx = engine.add_basis(d, v)
    lts = engine.lts
    t = lts[idx]
    for key in list(pairs):
        i, j = key
        l = pairs[key]
        if mono_divides(t, l) and mono_lcm(lts[i], t) != l and mono_lcm(lts[j], t) != l:
            del pairs[key]
    classes = {}
    for i in range(idx):
        classes.setdefault(mono_lcm(lts[i], t), []).append(i)
    kept = []
    for lcm in sorted(classes, key=lambda m: (sum(m), order.sort_key(m))):
        if any(mono_divides(k, lcm) for k in kept):
            continue
        kept.append(lcm)
        if any(mono_lcm(lts[i], t) == mono_mul(lts[i], t) for i in classes[lcm]):
            continue  # a coprime pair witnesses this lcm reduces to zero
        pairs[(min(classes[lcm]), idx)] = lcm


def _select(pairs, order):
    return min(
        pairs.items(), key=lambda kv: (sum(kv[1]), order.sort_key(kv[1]), kv[0])
    )


def _validate_input(gens, ring):
    polys = []
    for g in gens:
        if g.is_zero:
            continue
        if g.ring != ring:
            raise ValueError("generators belong to different ring contexts")
        if g.homogeneous_degree() is None:
            raise ValueError("Groebner computation requires homogeneous generators")
        polys.append(g)
    return polys


def buchberger(gens, order, degree_cap=DEFAULT_DEGREE_CAP):
    """Reduced Groebner basis of homogeneous generators.

    Raises :class:`DegreeCapExceeded` if any surviving S-polynomial would
    exceed ``degree_cap``.  The result is monic, interreduced, and sorted by
    (degree, order), so it is canonical for the ideal and order.
    """
    gens = list(gens)
    if not gens:
        return []
    ring = gens[0].ring
    polys = _validate_input(gens, ring)
    if not polys:
        return []
    if max(f.homogeneous_degree() for f in polys) > degree_cap:
        raise ValueError("degree_cap is below a generator degree")
    engine = _make_engine(ring, order, degree_cap)
    pairs = {}
    for f in polys:
        d, v = engine.prepare(f)
        _gm_add(engine, pairs, d, v, order)
    while pairs:
        (i, j), lcm = _select(pairs, order)
        d = sum(lcm)
        if d > degree_cap:
            raise DegreeCapExceeded(d, degree_cap)
        del pairs[(i, j)]
        sd, sv = engine.spair(i, j)
        red = engine.reduce(sd, sv, full=False)
        if red is not None:
            _gm_add(engine, pairs, sd, red, order)
    return _finalize(engine, order)


def _finalize(engine, order):
    """Minimalize and tail-reduce the engine basis; canonical output order."""
    picked = []
    for i in sorted(
        range(len(engine.basis)),
        key=lambda i: (sum(engine.lts[i]), order.sort_key(engine.lts[i])),
    ):
        if not any(mono_divides(engine.lts[j], engine.lts[i]) for j in picked):
            picked.append(i)
    mask = np.zeros(len(engine.basis), dtype=bool)
    mask[picked] = True
    out = []
    for i in picked:
        mask[i] = False
        d, v = engine.basis[i]
        red = engine.reduce(d, v.copy(), full=True, mask=mask)
        mask[i] = True
        f = engine.to_polynomial(d, red)
        out.append(f.monic(order))
    out.sort(key=lambda f: (f.homogeneous_degree(), order.sort_key(f.leading_monomial(order))))
    return out


def reduce_groebner_basis(basis, order):
    """Turn a (possibly redundant) Groebner basis into the reduced one
    without running any S-pairs."""
    basis = [g for g in basis if not g.is_zero]
    if not basis:
        return []
    ring = basis[0].ring
    maxdeg = max(g.total_degree() for g in basis)
    engine = _make_engine(ring, order, maxdeg)
    for g in basis:
        d, v = engine.prepare(g)
        engine.add_basis(d, v)
    return _finalize(engine, order)


def normal_form(f, basis, order):
    """Remainder of f on division by ``basis`` (greatest reducible monomial
    first, first listed divisor).  Zero input gives zero; the result has no
    monomial divisible by a leading monomial of the basis."""
    if f.is_zero:
        return f
    basis = list(basis)
    if any(g.is_zero for g in basis):
        raise ValueError("division by a zero polynomial")
    if not basis:
        return f
    ring = f.ring
    homog = f.is_homogeneous and all(g.is_homogeneous for g in basis)
    if homog and ring.field.is_prime_field and ring.monomial_count(
        f.total_degree()
    ) <= _DENSE_PIECE_LIMIT:
        engine = _DenseEngine(ring, order)
    else:
        engine = _SparseEngine(ring, order)
    for g in basis:
        d, v = engine.prepare(g)
        engine.add_basis(d, v)
    fd, fv = engine.prepare(f)
    red = engine.reduce(fd, fv, full=True)
    if red is None:
        return Polynomial.zero(ring)
    return engine.to_polynomial(fd, red)


# ----------------------------------------------------------------------
# ideals


class Ideal:
    """A homogeneous ideal: generator list plus per-order reduced Groebner
    caches.  Cache insertion is a single atomic dict store, so concurrent
    readers are safe; computations themselves run single-threaded."""

    __slots__ = ("ring", "generators", "gb_cache")

    def __init__(self, generators, ring=None):
        generators = tuple(generators)
        if ring is None:
            if not generators:
                raise ValueError("zero ideal needs an explicit ring")
            ring = generators[0].ring
        for g in generators:
            if g.is_zero:
                raise ValueError("ideal generators must be nonzero")
            if g.ring != ring:
                raise ValueError("generators belong to different ring contexts")
            if g.homogeneous_degree() is None:
                raise ValueError("ideal generators must be homogeneous")
        self.ring = ring
        self.generators = generators
        self.gb_cache = {}

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({inside})"

    @property
    def is_zero(self):
        return not self.generators

    def groebner_basis(self, order, degree_cap=DEFAULT_DEGREE_CAP):
        key = canonical(order)
        hit = self.gb_cache.get(key)
        if hit is None:
            hit = tuple(buchberger(self.generators, key, degree_cap))
            self.gb_cache[key] = hit
        return hit

    def set_groebner_basis(self, order, reduced_basis):
        """Install a known reduced basis (e.g. harvested from an elimination
        run certified by the Groebner property of initial coefficients)."""
        self.gb_cache[canonical(order)] = tuple(reduced_basis)

    def initial_ideal(self, order, degree_cap=DEFAULT_DEGREE_CAP):
        gb = self.groebner_basis(order, degree_cap)
        return MonomialIdeal(self.ring, [g.leading_monomial(order) for g in gb])

    def hilbert_data(self, order=None, bound=10, degree_cap=DEFAULT_DEGREE_CAP):
        order = order if order is not None else Revlex()
        return hilbert_data(self.initial_ideal(order, degree_cap), bound)

    def hilbert_function(self, order=None, bound=10, degree_cap=DEFAULT_DEGREE_CAP):
        return self.hilbert_data(order, bound, degree_cap).hf

    def normal_form(self, f, order, degree_cap=DEFAULT_DEGREE_CAP):
        return normal_form(f, self.groebner_basis(order, degree_cap), order)

    def contains(self, f, order=None, degree_cap=DEFAULT_DEGREE_CAP):
        order = order if order is not None else Revlex()
        return self.normal_form(f, order, degree_cap).is_zero

    def equals(self, other, order=None, degree_cap=DEFAULT_DEGREE_CAP):
        if self.ring != other.ring:
            raise ValueError("ideals live in different rings")
        order = order if order is not None else Revlex()
        return self.groebner_basis(order, degree_cap) == other.groebner_basis(
            order, degree_cap
        )


def initial_ideal(I, order, degree_cap=DEFAULT_DEGREE_CAP):
    return I.initial_ideal(order, degree_cap)


def hilbert_function(I, order, bound, degree_cap=DEFAULT_DEGREE_CAP):
    return I.hilbert_function(order, bound, degree_cap)


def ideal_equal(I, J, order=None, degree_cap=DEFAULT_DEGREE_CAP):
    return I.equals(J, order, degree_cap)
