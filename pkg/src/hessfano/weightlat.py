"""Integer weights for SL_n and the Fano / weak Fano classifiers.

Weights are stored in fundamental-weight coordinates as plain tuples: the
tuple ``(d_1, ..., d_{n-1})`` stands for sum d_i * (x_1 + ... + x_i).  The
anti-canonical weight of the variety attached to a Hessenberg function h
has an explicit coefficient formula in terms of h and its transpose, and
every classification criterion reads off the signs of those coefficients:
all positive means Fano, all nonnegative means nef, and nef is equivalent
to weak Fano (nef and big) for these varieties.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from . import hessfn
from .errors import LengthMismatchError, ParseError
from .hessfn import HessFn

Weight = tuple[int, ...]


def weight_from_x_basis(coords: Sequence[int]) -> Weight:
    """Convert coordinates in the x-basis to fundamental coordinates.

    With x_i = (i-th fundamental weight) - ((i-1)-th), the i-th output
    coefficient is coords[i] - coords[i+1].  Adding a constant to every
    coordinate does not change the result, reflecting x_1 + ... + x_n = 0.

    >>> weight_from_x_basis([1, 0, 0])
    (1, 0)
    >>> weight_from_x_basis([1, -1, 0])
    (2, -1)
    """
    if len(coords) < 2:
        raise LengthMismatchError("need at least 2 x-coordinates")
    return tuple(coords[i] - coords[i + 1] for i in range(len(coords) - 1))


def weight_from_text(text: str) -> Weight:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse weight from {text!r}") from exc


def weight_to_text(weight: Weight) -> str:
    return ",".join(str(d) for d in weight)


@lru_cache(maxsize=None)
def anticanonical_weight(h: HessFn) -> Weight:
    """Fundamental coefficients of the anti-canonical weight of h.

    d_i = h(i) - h(i+1) + 2 - h*(n+1-i) + h*(n-i) where h* is the
    transpose.  Agrees with :func:`anticanonical_weight_by_roots`.
    """
    n = h.n
    hs = hessfn.transpose(h)
    return tuple(
        h(i) - h(i + 1) + 2 - hs(n + 1 - i) + hs(n - i) for i in range(1, n)
    )


def anticanonical_weight_by_roots(h: HessFn) -> Weight:
    """The same weight computed as the sum of the roots x_i - x_j over all
    pairs i < j <= h(i); an independent route used to cross-check the
    coefficient formula."""
    n = h.n
    coords = [0] * n
    for i in range(1, n):
        for j in range(i + 1, h(i) + 1):
            coords[i - 1] += 1
            coords[j - 1] -= 1
    return weight_from_x_basis(coords)


def is_dominant(weight: Weight) -> bool:
    return all(d >= 0 for d in weight)


def is_strictly_dominant(weight: Weight) -> bool:
    return all(d > 0 for d in weight)


@dataclass(frozen=True)
class ParabolicBlocks:
    """Maximal intervals of positions spanned by vanishing coefficients.

    Each maximal run of zero coefficients d_a = ... = d_b = 0 contributes
    the position interval {a, ..., b+1}, stored as an inclusive pair
    (a, b+1).  The permutations moving each interval only within itself
    form the block subgroup these intervals describe.
    """

    n: int
    intervals: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def positions(self) -> frozenset[int]:
        """All positions covered by some interval."""
        return frozenset(
            j for start, end in self.intervals for j in range(start, end + 1)
        )

    def interval_containing(self, j: int) -> tuple[int, int] | None:
        for start, end in self.intervals:
            if start <= j <= end:
                return (start, end)
        return None


def parabolic_blocks(weight: Weight) -> ParabolicBlocks:
    """Extract the block structure of a weight's zero coefficients.

    >>> parabolic_blocks((0, 0, 1, 0, 1, 1)).intervals
    ((1, 3), (4, 5))
    """
    n = len(weight) + 1
    intervals: list[tuple[int, int]] = []
    i = 0
    while i < n - 1:
        if weight[i] == 0:
            j = i
            while j + 1 < n - 1 and weight[j + 1] == 0:
                j += 1
            intervals.append((i + 1, j + 2))
            i = j + 1
        else:
            i += 1
    return ParabolicBlocks(n, tuple(intervals))


@dataclass(frozen=True)
class Classification:
    """Sign-based verdicts for one Hessenberg function.

    ``weak_fano`` always equals ``nef``: for these varieties a nef
    anti-canonical bundle is automatically big, a fact corroborated
    numerically by the degree computations in :mod:`hessfano.schubert`.
    ``fano_by_shape`` records the independent banded-shape criterion,
    which provably coincides with ``fano``.
    """

    nef: bool
    fano: bool
    weak_fano: bool
    fano_by_shape: bool


def classify(h: HessFn) -> Classification:
    """Classify a connected Hessenberg function by its coefficient signs.

    >>> classify(hessfn.validate([3, 3, 4, 4]))
    Classification(nef=True, fano=False, weak_fano=True, fano_by_shape=False)
    """
    hessfn.require_connected(h)
    weight = anticanonical_weight(h)
    nef = is_dominant(weight)
    fano = is_strictly_dominant(weight)
    by_shape = any(
        2 * k >= h.n - 1 and h == hessfn.banded(h.n, k) for k in range(1, h.n)
    )
    return Classification(nef=nef, fano=fano, weak_fano=nef, fano_by_shape=by_shape)


def is_nef(h: HessFn) -> bool:
    return is_dominant(anticanonical_weight(h))
