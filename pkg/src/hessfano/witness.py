"""Constructive bigness witnesses for nef Hessenberg functions.

For a nef connected h the anti-canonical weight determines a block
subgroup (see :mod:`hessfano.weightlat`), and bigness of the
anti-canonical bundle is certified by a permutation u inside that
subgroup satisfying four conditions against the pivot permutation w:

  (i)   the lengths add: len(u o w) = len(u) + len(w);
  (ii)  u and u o w order every block the same way;
  (iii) u is the identity on every block where h strictly increases;
  (iv)  (u o w)(i) < (u o w)(j) for i < j below the stable limit of i.

``construct_witness`` builds u by induction on n, peeling off the first
column and the row h(1) of the staircase at each step; ``verify_conditions``
checks the four conditions from scratch, independent of the construction;
``brute_force_witness`` is the exhaustive oracle; ``bigness_certificate``
packages u together with an explicit strictly-increasing cover chain from
u to u o w.
"""
from __future__ import annotations

import dataclasses
import itertools
from dataclasses import dataclass
from math import factorial, prod

from . import hessfn, symgrp, weightlat
from .errors import (
    CertificateFailureError,
    NotCase2bError,
    NotCase2Error,
    NotNefError,
    NotRestrictableError,
    SearchSpaceTooLargeError,
    SizeMismatchError,
)
from .hessfn import HessFn
from .symgrp import Perm, compose, identity, length
from .weightlat import ParabolicBlocks

DEFAULT_SEARCH_CAP = 10**6


def _require_nef(h: HessFn) -> None:
    hessfn.require_connected(h)
    if not weightlat.is_nef(h):
        raise NotNefError(f"{hessfn.to_text(h)} is not nef")


@dataclass(frozen=True)
class Case2Data:
    """How the lifted witness crosses the pivot on the block at h(1).

    Write p = h(1) and let y = (lifted witness) o (pivot permutation).
    The block around p splits into a lower arm {p-a, ..., p} and an upper
    arm {p+1, ..., p+b+1}.  Then:

      r[k]      value y(p - k); strictly decreasing in k,
      m[k]      how many upper-arm values y(p + q), 1 <= q <= b+1, lie
                below r[k]; weakly decreasing, with m[a+1] = 0 implied,
      q[l-1]    the l-th upper-arm offset ordered by increasing y-value,
                for the m[0] offsets whose value lies below r[0],
      delta[k]  m[k] - m[k+1],
      M         largest k with delta[k] >= 1, or None when every m[k]
                vanishes (then no correction is needed).
    """

    a: int
    b: int
    r: tuple[int, ...]
    m: tuple[int, ...]
    q: tuple[int, ...]
    delta: tuple[int, ...]
    M: int | None


@dataclass(frozen=True)
class LevelRecord:
    """One step of the inductive construction: rank and branch taken."""

    n: int
    case: str  # "base", "1", "2-a" or "2-b"
    data: Case2Data | None = None


@dataclass(frozen=True)
class WitnessReport:
    """A candidate witness with the verifier's verdict on each condition."""

    u: Perm
    in_block_subgroup: bool
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    case_trace: tuple[LevelRecord, ...] = ()

    @property
    def conditions(self) -> tuple[bool, bool, bool, bool]:
        return (self.cond_i, self.cond_ii, self.cond_iii, self.cond_iv)

    @property
    def all_conditions(self) -> bool:
        return all(self.conditions)


def verify_conditions(h: HessFn, u: Perm) -> WitnessReport:
    """Check conditions (i)-(iv) and block membership for the pair (h, u).

    Everything is recomputed from h and u alone so that the verifier stays
    independent of :func:`construct_witness`.
    """
    _require_nef(h)
    n = h.n
    if len(u) != n:
        raise SizeMismatchError(f"rank {len(u)} permutation against n = {n}")
    u = symgrp.as_perm(u)

    blocks = weightlat.parabolic_blocks(weightlat.anticanonical_weight(h))
    w = hessfn.pivot_permutation(h)
    uw = compose(u, w)

    covered = blocks.positions()
    member = all(u[j - 1] == j for j in range(1, n + 1) if j not in covered) and all(
        sorted(u[start - 1 : end]) == list(range(start, end + 1))
        for start, end in blocks
    )

    cond_i = length(uw) == length(u) + length(w)
    cond_ii = symgrp.same_coset_part(u, uw, blocks)

    cond_iii = True
    for start, end in blocks:
        if all(h(j) < h(j + 1) for j in range(start, end)):
            if any(u[j - 1] != j for j in range(start, end + 1)):
                cond_iii = False

    cond_iv = True
    for i in range(1, n):
        limit = hessfn.stable_limit(h, i)
        if any(uw[i - 1] >= uw[j - 1] for j in range(i + 1, limit)):
            cond_iv = False

    return WitnessReport(
        u=u,
        in_block_subgroup=member,
        cond_i=cond_i,
        cond_ii=cond_ii,
        cond_iii=cond_iii,
        cond_iv=cond_iv,
    )


def restrict_hessenberg(h: HessFn) -> HessFn:
    """The rank n-1 function h'(i) = h(i+1) - 1.

    Geometrically this deletes the first column and the h(1)-st row of the
    staircase.  Restriction preserves validity, connectedness and nefness.
    """
    if h.n == 2 or h(1) == h.n:
        raise NotRestrictableError("restriction needs n >= 3 and h(1) < n")
    return HessFn(tuple(h(i) - 1 for i in range(2, h.n + 1)))


def embed_shift(u_prime: Perm) -> Perm:
    """Embed a rank n-1 permutation into rank n by shifting everything up.

    The image fixes 1 and maps i to u_prime(i-1) + 1 for i >= 2.

    >>> embed_shift((2, 1))
    (1, 3, 2)
    """
    return (1,) + tuple(v + 1 for v in u_prime)


def case2_data(h: HessFn, u_bar: Perm) -> Case2Data:
    """Compute the crossing data of u_bar o pivot on the block at h(1).

    Requires the anti-canonical coefficient at h(1) to vanish, so that the
    block containing positions h(1) and h(1)+1 exists.
    """
    _require_nef(h)
    p = h(1)
    weight = weightlat.anticanonical_weight(h)
    if p > h.n - 1 or weight[p - 1] != 0:
        raise NotCase2Error(f"coefficient at position {p} does not vanish")
    if len(u_bar) != h.n:
        raise SizeMismatchError(f"rank {len(u_bar)} permutation against n = {h.n}")

    run_start = p
    while run_start > 1 and weight[run_start - 2] == 0:
        run_start -= 1
    run_end = p
    while run_end < h.n - 1 and weight[run_end] == 0:
        run_end += 1
    a = p - run_start
    b = run_end - p

    y = compose(u_bar, hessfn.pivot_permutation(h))
    r = tuple(y[p - k - 1] for k in range(a + 1))
    m = tuple(
        sum(1 for q in range(1, b + 2) if y[p + q - 1] < r[k]) for k in range(a + 1)
    )
    q = tuple(
        sorted(
            (q for q in range(1, b + 2) if y[p + q - 1] < r[0]),
            key=lambda q: y[p + q - 1],
        )
    )
    delta = tuple(m[k] - (m[k + 1] if k < a else 0) for k in range(a + 1))
    last = max((k for k in range(a + 1) if delta[k] >= 1), default=None)
    return Case2Data(a=a, b=b, r=r, m=m, q=q, delta=delta, M=last)


def _shift_cycle(n: int, start: int, width: int) -> Perm:
    """The cycle sending start to start + width and pulling the values in
    between down by one; the identity when width = 0."""
    out = list(range(1, n + 1))
    out[start - 1] = start + width
    for j in range(start + 1, start + width + 1):
        out[j - 1] = j - 1
    return tuple(out)


def case2b_transform(h: HessFn, u_bar: Perm, data: Case2Data) -> Perm:
    """Correct u_bar so its block order matches that of u_bar o pivot.

    Applies, for k = 0..M in this order, the cycle moving the value
    h(1) - k up past the m[k] smallest upper-arm values.  The length grows
    by exactly m[0] + ... + m[M].
    """
    if data.M is None:
        raise NotCase2bError("crossing data has no level to correct")
    p = h(1)
    u = u_bar
    for k in range(data.M + 1):
        u = compose(_shift_cycle(h.n, p - k, data.m[k]), u)
    return u


def construct_witness(h: HessFn) -> WitnessReport:
    """Build the witness for a nef connected h by induction on n.

    Base cases (n = 2, or h(1) = n) take the identity.  Otherwise the
    witness of the restriction is lifted by :func:`embed_shift`; if the
    coefficient at h(1) vanishes and the lift crosses the pivot on that
    block, :func:`case2b_transform` repairs the order.  The report carries
    the per-rank trace and the verifier's (always all-true) verdict.
    """
    _require_nef(h)
    u, trace = _construct(h)
    report = verify_conditions(h, u)
    return dataclasses.replace(report, case_trace=tuple(trace))


def _construct(h: HessFn) -> tuple[Perm, list[LevelRecord]]:
    n = h.n
    if n == 2 or h(1) == n:
        return identity(n), [LevelRecord(n, "base")]
    u_prime, trace = _construct(restrict_hessenberg(h))
    u_bar = embed_shift(u_prime)
    if weightlat.anticanonical_weight(h)[h(1) - 1] != 0:
        trace.append(LevelRecord(n, "1"))
        return u_bar, trace
    data = case2_data(h, u_bar)
    if data.M is None:
        trace.append(LevelRecord(n, "2-a", data))
        return u_bar, trace
    trace.append(LevelRecord(n, "2-b", data))
    return case2b_transform(h, u_bar, data), trace


def brute_force_witness(
    h: HessFn, require_iii_iv: bool, cap: int = DEFAULT_SEARCH_CAP
) -> list[Perm]:
    """All block-subgroup elements passing conditions (i) and (ii), and
    also (iii)-(iv) when requested, in lexicographic order.

    This is the exhaustive oracle for :func:`construct_witness`; it scans
    the block subgroup directly, which is far smaller than the whole
    symmetric group.
    """
    _require_nef(h)
    blocks = weightlat.parabolic_blocks(weightlat.anticanonical_weight(h))
    size = prod(factorial(end - start + 1) for start, end in blocks)
    if size > cap:
        raise SearchSpaceTooLargeError(f"block subgroup has {size} > {cap} elements")

    found: list[Perm] = []
    for u in _block_subgroup(h.n, blocks):
        report = verify_conditions(h, u)
        if report.cond_i and report.cond_ii and (
            not require_iii_iv or (report.cond_iii and report.cond_iv)
        ):
            found.append(u)
    return sorted(found)


def _block_subgroup(n: int, blocks: ParabolicBlocks):
    arrangements = [
        list(itertools.permutations(range(start, end + 1))) for start, end in blocks
    ]
    base = list(range(1, n + 1))
    for combo in itertools.product(*arrangements):
        u = base[:]
        for values, (start, end) in zip(combo, blocks):
            u[start - 1 : end] = values
        yield tuple(u)


def bigness_certificate(h: HessFn) -> tuple[Perm, tuple[Perm, ...]]:
    """The constructed witness u together with an explicit cover chain
    from u to u o pivot whose coset projections strictly increase.

    The chain exists for every nef h and has length equal to the
    dimension.  It is assembled by walking a saturated chain of minimal
    coset representatives from the identity up to the representative of
    u o pivot and then translating every element by the common block part
    (which is u itself); this scales to large ranks where a direct search
    with :func:`hessfano.symgrp.p_bruhat_leq` would not, and produces the
    same kind of chain.  The result is re-validated; failure signals a
    bug, not bad input.
    """
    _require_nef(h)
    u = construct_witness(h).u
    uw = compose(u, hessfn.pivot_permutation(h))
    blocks = weightlat.parabolic_blocks(weightlat.anticanonical_weight(h))
    chain = _chain_through_representatives(u, uw, blocks)
    if chain is None:
        raise CertificateFailureError(
            f"no strictly increasing chain for {hessfn.to_text(h)}; this is a bug"
        )
    _validate_chain(chain, u, uw, blocks)
    return u, chain


def _is_min_rep(w: Perm, blocks: ParabolicBlocks) -> bool:
    return all(
        w[j - 1] < w[j] for start, end in blocks for j in range(start, end)
    )


def _chain_through_representatives(
    u: Perm, uw: Perm, blocks: ParabolicBlocks
) -> tuple[Perm, ...] | None:
    """Lift a representative chain e -> (uw)^J to a chain u -> uw.

    Because u lies in the block subgroup and shares its block part with
    uw, right-translating a saturated chain of minimal representatives by
    u lands exactly on the requested endpoints, each step stays a cover,
    and the projections strictly increase.  Intervals of minimal
    representatives are graded, so the greedy walk below never dead-ends;
    the fallback depth-first search is sheer defensiveness.
    """
    target = symgrp.min_coset_rep(uw, blocks)

    def rep_covers(x: Perm):
        for y, _ in symgrp.covers_up(x):
            if _is_min_rep(y, blocks) and symgrp.bruhat_leq(y, target):
                yield y

    rep_chain: list[Perm] | None = [identity(len(u))]
    while rep_chain[-1] != target:
        step = next(rep_covers(rep_chain[-1]), None)
        if step is None:
            rep_chain = None
            break
        rep_chain.append(step)
    if rep_chain is None:
        full = symgrp.p_bruhat_leq(u, uw, blocks)
        return full
    return tuple(compose(x, u) for x in rep_chain)


def _validate_chain(
    chain: tuple[Perm, ...], u: Perm, uw: Perm, blocks: ParabolicBlocks
) -> None:
    ok = chain[0] == u and chain[-1] == uw
    for x, y in zip(chain, chain[1:]):
        if not ok:
            break
        ok = (
            length(y) == length(x) + 1
            and symgrp.bruhat_leq(x, y)
            and symgrp.min_coset_rep(x, blocks) != symgrp.min_coset_rep(y, blocks)
        )
    if not ok:
        raise CertificateFailureError("assembled chain failed validation; this is a bug")
