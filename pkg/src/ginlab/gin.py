"""Generic initial ideals by randomized coordinate change.

A dense open subset of GL gives the same initial ideal, so two independent
random changes agreeing is overwhelming evidence of genericity over a large
field; a Borel-fixedness check certifies the outcome's shape independently.
Disagreement escalates to a third trial and then fails loudly rather than
silently reporting a non-generic result.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import linalg
from .groebner import DEFAULT_DEGREE_CAP, Ideal
from .monomial_ideals import MonomialIdeal, borel_regularity, is_borel_fixed
from .poly import Polynomial


class GinDisagreement(Exception):
    """All trials produced distinct initial ideals: no generic consensus."""


@dataclass(frozen=True)
class CoordinateChange:
    """An invertible (r+1)x(r+1) matrix of field scalars plus the seed that
    produced it."""

    ring: object
    matrix: tuple
    seed: int


def random_coordinate_change(ring, seed):
    """Draw an invertible matrix with uniform entries, deterministically from
    the seed (redrawn until the determinant is nonzero)."""
    rng = random.Random(seed)
    n = ring.nvars
    while True:
        rows = tuple(
            tuple(ring.field.random(rng) for _ in range(n)) for _ in range(n)
        )
        if linalg.det(ring.field, [list(r) for r in rows]) != ring.field.zero:
            return CoordinateChange(ring, rows, seed)


def apply_change(I, change):
    """The ideal generated by the generators with x_i replaced by the i-th
    row's linear form.  Homogeneity and Hilbert function are preserved."""
    ring = I.ring
    matrix = change.matrix if isinstance(change, CoordinateChange) else tuple(change)
    if len(matrix) != ring.nvars or any(len(row) != ring.nvars for row in matrix):
        raise ValueError("coordinate change shape does not match ring")
    if linalg.det(ring.field, [list(r) for r in matrix]) == ring.field.zero:
        raise ValueError("singular matrix is not a coordinate change")
    images = [
        Polynomial.from_terms(
            ring,
            (
                (tuple(1 if k == j else 0 for k in range(ring.nvars)), c)
                for j, c in enumerate(row)
            ),
        )
        for row in matrix
    ]
    return Ideal([g.substitute(images) for g in I.generators], ring=ring)


def inverse_change(change):
    inv = linalg.inverse(change.ring.field, [list(r) for r in change.matrix])
    return CoordinateChange(change.ring, tuple(tuple(r) for r in inv), -1)


@dataclass
class GinResult:
    """Outcome of a gin computation.  ``regularity`` is only populated when
    the result is Borel-fixed (the generator-degree shortcut is invalid
    otherwise); ``trial_ideals`` keeps the transformed ideals so callers can
    reuse their Groebner caches."""

    gin: MonomialIdeal
    trials_used: int
    agreed: bool
    borel: bool
    regularity: object
    trial_ideals: list = dc_field(default_factory=list, repr=False)


def gin(I, order, trials=2, seed=0, degree_cap=DEFAULT_DEGREE_CAP):
    """Generic initial ideal with a trial-agreement protocol.

    Runs ``trials`` independent random coordinate changes (trial t uses seed
    ``seed + t``).  If all initial ideals coincide the common one is returned
    with ``agreed=True``; otherwise one extra trial is run and a majority
    ideal is returned with ``agreed=False``; with no majority the computation
    fails loudly.
    """
    if trials < 2:
        raise ValueError("the agreement protocol needs at least 2 trials")
    results = []
    handles = []
    for t in range(trials):
        J, handle = _one_trial(I, order, seed + t, degree_cap)
        results.append(J)
        handles.append(handle)
    if not all(J == results[0] for J in results[1:]):
        J, handle = _one_trial(I, order, seed + trials, degree_cap)
        results.append(J)
        handles.append(handle)
    winner = _majority(results)
    if winner is None:
        raise GinDisagreement(
            f"{len(results)} gin trials produced no majority initial ideal"
        )
    agreed = all(J == winner for J in results)
    borel = is_borel_fixed(winner)
    regularity = borel_regularity(winner) if borel else None
    return GinResult(
        gin=winner,
        trials_used=len(results),
        agreed=agreed,
        borel=borel,
        regularity=regularity,
        trial_ideals=[h for h, J in zip(handles, results) if J == winner],
    )


def _one_trial(I, order, trial_seed, degree_cap):
    change = random_coordinate_change(I.ring, trial_seed)
    moved = apply_change(I, change)
    return moved.initial_ideal(order, degree_cap), moved


def _majority(results):
    for J in results:
        if sum(1 for K in results if K == J) * 2 > len(results):
            return J
    return None
