"""Exact anti-canonical degrees by weighted Bruhat-chain counting.

Multiplying by the first Chern class of the line bundle of a dominant
weight distributes over Bruhat covers, the cover through the transposition
of positions a < b picking up the coefficient d_a + ... + d_{b-1}.
Iterating this turns the degree of a Richardson variety (a Bruhat interval
[v, w]) into a sum over saturated chains of the products of their step
coefficients — an exact integer, computed here by dynamic programming.

The degree of the full variety attached to a Hessenberg function is the
sum of interval degrees [u, u o pivot] over the permutations u whose
length adds with the pivot's; its positivity for nef inputs is the
numerical shadow of the weak-Fano theorem.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import hessfn, weightlat
from .errors import (
    LengthMismatchError,
    NonDominantWeightError,
    NotComparableError,
    SizeMismatchError,
)
from .hessfn import HessFn
from .symgrp import Perm, bruhat_leq, compose, covers_up, length
from .weightlat import Weight


@dataclass(frozen=True)
class RichardsonSpec:
    """A Bruhat interval [v, w] standing for a Richardson variety."""

    v: Perm
    w: Perm

    def __post_init__(self) -> None:
        if len(self.v) != len(self.w):
            raise SizeMismatchError(f"mixed ranks {len(self.v)} and {len(self.w)}")

    @property
    def dimension(self) -> int:
        return length(self.w) - length(self.v)


def _check_weight(mu: Weight, n: int) -> None:
    if len(mu) != n - 1:
        raise LengthMismatchError(f"weight has {len(mu)} coefficients, need {n - 1}")
    if not weightlat.is_dominant(mu):
        raise NonDominantWeightError(f"weight {mu} is not dominant")


def _pairing(mu: Weight, a: int, b: int) -> int:
    """Coefficient of the cover through the transposition of a < b."""
    return sum(mu[a - 1 : b - 1])


def chevalley_expand(w: Perm, mu: Weight) -> list[tuple[Perm, int]]:
    """All covers of w with their chain weights under mu.

    Covers with weight zero are kept; they end every chain through them
    with total weight zero.

    >>> chevalley_expand((1, 3, 2), (1, 1))
    [((3, 1, 2), 1), ((2, 3, 1), 2)]
    """
    _check_weight(mu, len(w))
    return [(y, _pairing(mu, a, b)) for y, (a, b) in covers_up(w)]


def richardson_degree(spec: RichardsonSpec, mu: Weight) -> int:
    """Weighted count of saturated chains from spec.v to spec.w.

    Dynamic programming over the interval, one Bruhat level at a time;
    the accumulator dict is keyed by permutation and local to the query.
    Exact (arbitrary-precision) integer.

    >>> richardson_degree(RichardsonSpec((1, 2, 3), (2, 3, 1)), (1, 1))
    3
    """
    _check_weight(mu, len(spec.v))
    if not bruhat_leq(spec.v, spec.w):
        raise NotComparableError(f"{spec.v} is not below {spec.w} in Bruhat order")
    target = spec.w
    level: dict[Perm, int] = {spec.v: 1}
    for _ in range(spec.dimension):
        bumped: dict[Perm, int] = {}
        for x, count in level.items():
            for y, (a, b) in covers_up(x):
                c = _pairing(mu, a, b)
                if c and bruhat_leq(y, target):
                    bumped[y] = bumped.get(y, 0) + count * c
        level = bumped
    return level.get(target, 0)


def at_summands(h: HessFn) -> list[Perm]:
    """All u whose length adds with the pivot permutation's, in
    lexicographic order.

    These index the interval degrees whose sum is the full degree; the
    identity always qualifies.
    """
    hessfn.require_connected(h)
    w = hessfn.pivot_permutation(h)
    lw = length(w)
    return [
        u
        for u in itertools.permutations(range(1, h.n + 1))
        if length(compose(u, w)) == length(u) + lw
    ]


def hessenberg_degree(h: HessFn, mu: Weight | None = None) -> int:
    """The top self-intersection number of the weight mu on the variety
    attached to h, as an exact integer.

    With mu omitted, the anti-canonical weight of h is used, which
    requires h to be nef.  Summands whose interval is empty contribute 0.

    >>> hessenberg_degree(hessfn.validate([2, 3, 3]))
    6
    """
    hessfn.require_connected(h)
    if mu is None:
        mu = weightlat.anticanonical_weight(h)
    _check_weight(mu, h.n)
    w = hessfn.pivot_permutation(h)
    total = 0
    for u in at_summands(h):
        uw = compose(u, w)
        if bruhat_leq(u, uw):
            total += richardson_degree(RichardsonSpec(u, uw), mu)
    return total
