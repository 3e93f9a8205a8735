"""The symmetric group on {1, ..., n} in one-line notation.

Permutations are plain tuples of distinct integers 1..n with ``w[i-1]``
the image of i.  The product convention is ``compose(u, w)(i) = u(w(i))``,
i.e. w acts first.  The text format is space-separated one-line notation,
e.g. ``"3 4 2 5 1"``.

Besides the basic group operations this module implements the Bruhat
order, its covers, factorization through a block subgroup, the induced
order on block cosets, and the stricter chain order (covers whose coset
projections strictly increase) used for the bigness certificates.
"""
from __future__ import annotations

import bisect
import itertools
from typing import Iterator, Sequence

from .errors import NotAPermutationError, ParseError, SizeMismatchError
from .weightlat import ParabolicBlocks

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def simple_transposition(n: int, i: int) -> Perm:
    """The adjacent transposition swapping i and i+1."""
    assert 1 <= i <= n - 1
    out = list(range(1, n + 1))
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def is_permutation(seq: Sequence[int]) -> bool:
    return sorted(seq) == list(range(1, len(seq) + 1))


def as_perm(seq: Sequence[int]) -> Perm:
    if not is_permutation(seq):
        raise NotAPermutationError(f"{tuple(seq)} is not a permutation of 1..{len(seq)}")
    return tuple(seq)


def from_text(text: str) -> Perm:
    """Parse space-separated one-line notation, e.g. ``"3 4 2 5 1"``."""
    try:
        seq = tuple(int(part) for part in text.split())
    except ValueError as exc:
        raise ParseError(f"cannot parse permutation from {text!r}") from exc
    return as_perm(seq)


def to_text(w: Perm) -> str:
    return " ".join(str(v) for v in w)


def all_permutations(n: int) -> Iterator[Perm]:
    """All of the symmetric group in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def _check_same_n(u: Perm, w: Perm) -> None:
    if len(u) != len(w):
        raise SizeMismatchError(f"mixed ranks {len(u)} and {len(w)}")


def compose(u: Perm, w: Perm) -> Perm:
    """The product u o w, applying w first: (u o w)(i) = u(w(i)).

    >>> compose((2, 1, 3), (2, 3, 1))
    (1, 3, 2)
    """
    _check_same_n(u, w)
    return tuple(u[v - 1] for v in w)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        out[v - 1] = i
    return tuple(out)


def length(w: Perm) -> int:
    """The number of inversions.

    >>> length((3, 4, 2, 5, 1))
    6
    """
    return sum(
        1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
    )


def bruhat_leq(u: Perm, w: Perm) -> bool:
    """Bruhat comparison by sorted-prefix dominance.

    u <= w exactly when, for every k, the sorted first k values of u are
    entrywise at most the sorted first k values of w.

    >>> bruhat_leq((1, 3, 2), (2, 3, 1))
    True
    >>> bruhat_leq((2, 1, 3), (1, 3, 2)), bruhat_leq((1, 3, 2), (2, 1, 3))
    (False, False)
    """
    _check_same_n(u, w)
    su: list[int] = []
    sw: list[int] = []
    for k in range(len(u) - 1):
        bisect.insort(su, u[k])
        bisect.insort(sw, w[k])
        if any(a > b for a, b in zip(su, sw)):
            return False
    return True


def covers_up(w: Perm) -> list[tuple[Perm, tuple[int, int]]]:
    """All Bruhat covers above w, with the transposition that realizes each.

    Swapping positions a < b raises the length by exactly one when
    w(a) < w(b) and no position strictly between them holds a value
    strictly between w(a) and w(b).  Results come in lexicographic order
    of the position pairs (a, b).
    """
    n = len(w)
    out: list[tuple[Perm, tuple[int, int]]] = []
    for a in range(n - 1):
        wa = w[a]
        for b in range(a + 1, n):
            wb = w[b]
            if wa < wb and not any(wa < w[c] < wb for c in range(a + 1, b)):
                lifted = list(w)
                lifted[a], lifted[b] = wb, wa
                out.append((tuple(lifted), (a + 1, b + 1)))
    return out


def min_coset_rep(w: Perm, blocks: ParabolicBlocks) -> Perm:
    """The shortest element of the coset w * (block subgroup).

    Obtained by sorting the values of w on each block interval.
    """
    out = list(w)
    for start, end in blocks:
        out[start - 1 : end] = sorted(out[start - 1 : end])
    return tuple(out)


def coset_factorize(w: Perm, blocks: ParabolicBlocks) -> tuple[Perm, Perm]:
    """Split w = rep o part with rep shortest in its coset and part in the
    block subgroup; the lengths add up.

    >>> blocks = ParabolicBlocks(3, ((1, 2),))
    >>> coset_factorize((3, 2, 1), blocks)
    ((2, 3, 1), (2, 1, 3))
    """
    if len(w) != blocks.n:
        raise SizeMismatchError(f"rank {len(w)} permutation against n={blocks.n} blocks")
    rep = min_coset_rep(w, blocks)
    part = compose(inverse(rep), w)
    return rep, part


def same_coset_part(u: Perm, w: Perm, blocks: ParabolicBlocks) -> bool:
    """Whether u and w order each block's positions the same way.

    This is exactly the statement that their block-subgroup factors agree.
    """
    _check_same_n(u, w)
    for start, end in blocks:
        for j1 in range(start, end + 1):
            for j2 in range(j1 + 1, end + 1):
                if (u[j1 - 1] < u[j2 - 1]) != (w[j1 - 1] < w[j2 - 1]):
                    return False
    return True


def coset_leq(u: Perm, w: Perm, blocks: ParabolicBlocks) -> bool:
    """Bruhat order on cosets, via minimal representatives."""
    _check_same_n(u, w)
    return bruhat_leq(min_coset_rep(u, blocks), min_coset_rep(w, blocks))


def p_bruhat_leq(
    v: Perm, w: Perm, blocks: ParabolicBlocks
) -> tuple[Perm, ...] | None:
    """A chain of Bruhat covers from v to w whose coset projections
    strictly increase at every step, or None if no such chain exists.

    The search walks :func:`covers_up` depth-first inside the interval
    [v, w], pruning permutations from which w was already found to be
    unreachable; trying cover transpositions in lexicographic order makes
    the returned chain the lexicographically least by cover labels.
    """
    _check_same_n(v, w)
    if v == w:
        return (v,)
    if not bruhat_leq(v, w):
        return None

    dead: set[Perm] = set()

    def options(x: Perm) -> Iterator[Perm]:
        x_rep = min_coset_rep(x, blocks)
        for y, _ in covers_up(x):
            if y in dead or not bruhat_leq(y, w):
                continue
            if min_coset_rep(y, blocks) == x_rep:
                continue  # projection must strictly increase
            yield y

    path: list[Perm] = [v]
    pending: list[Iterator[Perm]] = [options(v)]
    while path:
        step = next(pending[-1], None)
        if step is None:
            dead.add(path.pop())
            pending.pop()
            continue
        if step == w:
            return tuple(path) + (w,)
        path.append(step)
        pending.append(options(step))
    return None
