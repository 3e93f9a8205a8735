"""Hessenberg functions on {1, ..., n} and their staircase combinatorics.

A Hessenberg function is a weakly increasing h : [n] -> [n] with h(i) >= i
for all i.  We call h *connected* when additionally h(i) >= i + 1 for every
i < n; only connected functions are accepted by the classifiers, because a
repeated fixed point splits the associated variety into smaller pieces.

All public semantics are 1-indexed: ``h(i)`` is the value at position i,
matching the usual convention for these functions.  The text format is
comma-separated values, e.g. ``"3,4,4,5,5"``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    BadBandError,
    CapExceededError,
    DisconnectedError,
    IndexOutOfRangeError,
    NonTerminationError,
    NotIncreasingError,
    OutOfRangeError,
    ParseError,
    TooShortError,
)

DEFAULT_ENUMERATION_CAP = 12


@dataclass(frozen=True)
class HessFn:
    """An immutable, hashable Hessenberg function.

    Monotonicity and the bounds i <= h(i) <= n are enforced at construction.
    Connectedness is enforced by :func:`validate` and by every classifier
    entry point; ``enumerate_all(..., allow_disconnected=True)`` is the one
    place a disconnected instance may be produced, for counting purposes.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        n = len(self.values)
        if n < 2:
            raise TooShortError(f"need at least 2 values, got {n}")
        for i in range(1, n):
            if self.values[i] < self.values[i - 1]:
                raise NotIncreasingError(
                    f"h({i}) = {self.values[i - 1]} > {self.values[i]} = h({i + 1})"
                )
        for i, v in enumerate(self.values, start=1):
            if not i <= v <= n:
                raise OutOfRangeError(f"h({i}) = {v} outside [{i}, {n}]")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """The value h(i) for a 1-based position i."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRangeError(f"position {i} outside [1, {self.n}]")
        return self.values[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    @property
    def is_connected(self) -> bool:
        return all(self.values[i] >= i + 2 for i in range(self.n - 1))


def validate(values: Iterable[int]) -> HessFn:
    """Build a connected Hessenberg function, or raise a specific error.

    >>> validate([3, 4, 4, 5, 5]).values
    (3, 4, 4, 5, 5)
    >>> validate([2, 2, 3])
    Traceback (most recent call last):
        ...
    hessfano.errors.DisconnectedError: h(2) = 2 makes the function disconnected
    """
    h = HessFn(tuple(values))
    return require_connected(h)


def require_connected(h: HessFn) -> HessFn:
    if not h.is_connected:
        j = next(i for i in range(1, h.n) if h(i) == i)
        raise DisconnectedError(f"h({j}) = {j} makes the function disconnected")
    return h


def from_text(text: str) -> HessFn:
    """Parse the comma-separated text format, e.g. ``"3,4,4,5,5"``."""
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse Hessenberg function from {text!r}") from exc
    return validate(values)


def to_text(h: HessFn) -> str:
    return ",".join(str(v) for v in h.values)


def banded(n: int, k: int) -> HessFn:
    """The k-banded function h(i) = min(i + k, n).

    >>> banded(5, 1).values
    (2, 3, 4, 5, 5)
    """
    if not 1 <= k <= n - 1:
        raise BadBandError(f"band width {k} outside [1, {n - 1}]")
    return HessFn(tuple(min(i + k, n) for i in range(1, n + 1)))


@lru_cache(maxsize=None)
def transpose(h: HessFn) -> HessFn:
    """The transpose h*, with h*(i) = #{k : h(k) >= n + 1 - i}.

    The staircase diagram of h* is the matrix transpose of that of h.

    >>> transpose(validate([3, 4, 4, 5, 5])).values
    (2, 4, 5, 5, 5)
    """
    n = h.n
    return HessFn(
        tuple(sum(1 for v in h.values if v >= n + 1 - i) for i in range(1, n + 1))
    )


def dimension(h: HessFn) -> int:
    """The complex dimension of the associated variety: sum of h(i) - i."""
    return sum(v - i for i, v in enumerate(h.values, start=1))


def enumerate_all(
    n: int, allow_disconnected: bool = False, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[HessFn]:
    """All Hessenberg functions on [n] in lexicographic order.

    By default only connected functions are produced (there are
    Catalan(n-1) of them); with ``allow_disconnected`` every Hessenberg
    function appears (Catalan(n) of them).  Disconnected instances are for
    counting only: the classifiers reject them.
    """
    if n < 2:
        raise TooShortError(f"need n >= 2, got {n}")
    if n > cap:
        raise CapExceededError(f"n = {n} exceeds enumeration cap {cap}")

    out: list[HessFn] = []

    def extend(prefix: list[int]) -> None:
        i = len(prefix) + 1
        if i > n:
            out.append(HessFn(tuple(prefix)))
            return
        lo = i if (allow_disconnected or i == n) else i + 1
        if prefix:
            lo = max(lo, prefix[-1])
        for v in range(lo, n + 1):
            prefix.append(v)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def render_staircase(h: HessFn) -> str:
    """The staircase diagram as text: ``#`` for a box, ``.`` for none.

    Row i contains a box in column j exactly when i <= h(j).

    >>> print(render_staircase(validate([3, 4, 4, 5, 5])))
    #####
    #####
    #####
    .####
    ...##
    """
    n = h.n
    rows = []
    for i in range(1, n + 1):
        rows.append("".join("#" if i <= v else "." for v in h.values))
    return "\n".join(rows)


def parse_staircase(text: str) -> HessFn:
    """Inverse of :func:`render_staircase`."""
    rows = text.splitlines()
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ParseError("staircase grid is not square")
    if any(set(row) - {"#", "."} for row in rows):
        raise ParseError("staircase grid contains characters other than '#' and '.'")
    values = tuple(sum(1 for i in range(n) if rows[i][j] == "#") for j in range(n))
    return HessFn(values)


@lru_cache(maxsize=None)
def pivot_permutation(h: HessFn) -> tuple[int, ...]:
    """The permutation marking the inner corners of the staircase boundary.

    w(1) = h(1), and w(i) is the (n + 1 - h(i))-th largest element of [n]
    not used so far.  Its length always equals :func:`dimension`.

    >>> pivot_permutation(validate([3, 4, 4, 5, 5]))
    (3, 4, 2, 5, 1)
    """
    n = h.n
    out: list[int] = []
    remaining = list(range(n, 0, -1))
    for i in range(1, n + 1):
        v = h(1) if i == 1 else remaining[n + 1 - h(i) - 1]
        out.append(v)
        remaining.remove(v)
    return tuple(out)


def wall_distance(h: HessFn, i: int) -> int:
    """Horizontal distance from the left wall to the boundary on row i.

    Equals n - h*(n + 1 - i); zero exactly when row i is full.
    """
    n = h.n
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"row {i} outside [1, {n}]")
    return n - transpose(h)(n + 1 - i)


def is_stable_at(h: HessFn, i: int) -> bool:
    """Whether the function repeats at position i, i.e. h(i) = h(i-1)."""
    if not 2 <= i <= h.n:
        raise IndexOutOfRangeError(f"position {i} outside [2, {h.n}]")
    return h(i) == h(i - 1)


def _first_repeat(h: HessFn, i: int) -> int | None:
    """Least j >= i with h(j+1) = h(j), or None (never None for j <= n-1)."""
    for j in range(i, h.n):
        if h(j + 1) == h(j):
            return j
    return None


def _first_double_jump(h: HessFn, i: int) -> int | None:
    """Least j >= i with h(j+1) = h(j) + 2, or None."""
    for j in range(i, h.n):
        if h(j + 1) == h(j) + 2:
            return j
    return None


def plus_step(h: HessFn, i: int) -> int:
    """One step of the boundary-advance operation on 1 <= i <= n-1.

    If no double jump h(j+1) = h(j) + 2 occurs at or after i before the
    next repeat, i is already settled and is returned unchanged.
    Otherwise the step moves to the position where the pivot permutation
    takes the value just above the first double jump.  The result always
    lies in [i, n-1].
    """
    n = h.n
    if not 1 <= i <= n - 1:
        raise IndexOutOfRangeError(f"position {i} outside [1, {n - 1}]")
    jump = _first_double_jump(h, i)
    if jump is None:
        return i
    repeat = _first_repeat(h, i)
    if repeat is not None and repeat < jump:
        return i
    result = pivot_permutation(h).index(h(jump) + 1) + 1
    assert i <= result <= n - 1
    return result


def plus_closure(h: HessFn, i: int) -> int:
    """Iterate :func:`plus_step` until it stops moving."""
    for _ in range(h.n):
        j = plus_step(h, i)
        if j == i:
            return i
        i = j
    raise NonTerminationError("plus_step failed to settle; this is a bug")


def stable_limit(h: HessFn, i: int) -> int:
    """First position after the closure of i at which the function repeats.

    Defined as min{j >= plus_closure(i) : h(j) = h(j+1)} + 1; always exists
    because h(n-1) = h(n) is forced for connected functions.  The function
    is stable at the returned position.
    """
    start = plus_closure(h, i)
    repeat = _first_repeat(h, start)
    if repeat is None:
        raise NonTerminationError("no repeat above the closure; this is a bug")
    return repeat + 1
