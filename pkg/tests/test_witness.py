import pytest

import golden
from oracles import is_cover
from hessfano.errors import (
    NotCase2bError,
    NotCase2Error,
    NotNefError,
    NotRestrictableError,
    SearchSpaceTooLargeError,
    SizeMismatchError,
)
from hessfano.hessfn import (
    enumerate_all,
    pivot_permutation,
    plus_step,
    stable_limit,
    transpose,
    validate,
    wall_distance,
)
from hessfano.symgrp import compose, identity, inverse, length, min_coset_rep
from hessfano.weightlat import anticanonical_weight, is_nef, parabolic_blocks
from hessfano.witness import (
    bigness_certificate,
    brute_force_witness,
    case2_data,
    case2b_transform,
    construct_witness,
    embed_shift,
    restrict_hessenberg,
    verify_conditions,
)

H20 = validate(golden.H20)
H19 = validate(golden.H19)


def nef_functions(n):
    return [h for h in enumerate_all(n) if is_nef(h)]


def restriction_levels(h):
    """The chain of restrictions from the base case up to h itself."""
    chain = [h]
    while not (chain[-1].n == 2 or chain[-1](1) == chain[-1].n):
        chain.append(restrict_hessenberg(chain[-1]))
    return list(reversed(chain))


class TestRestrict:
    def test_golden(self):
        assert restrict_hessenberg(H20) == H19

    def test_small(self):
        assert restrict_hessenberg(validate([2, 3, 3])).values == (2, 2)
        assert restrict_hessenberg(validate([3, 3, 4, 4])).values == (2, 3, 3)

    def test_not_restrictable(self):
        with pytest.raises(NotRestrictableError):
            restrict_hessenberg(validate([2, 2]))
        with pytest.raises(NotRestrictableError):
            restrict_hessenberg(validate([4, 4, 4, 4]))

    def test_transpose_relation(self):
        # restriction shaves one box count above the split row
        for n in range(3, 9):
            for h in enumerate_all(n):
                if h(1) == n:
                    continue
                hs = transpose(h)
                rs = transpose(restrict_hessenberg(h))
                for i in range(1, n):
                    expected = hs(i) if i < n + 1 - h(1) else hs(i) - 1
                    assert rs(i) == expected

    def test_weight_restriction_identity(self):
        # the restricted weight is the shifted weight plus one bump at h(1)-1
        for n in range(3, 10):
            for h in enumerate_all(n):
                if h(1) == n:
                    continue
                d = anticanonical_weight(h)
                expected = tuple(
                    d[i] + (1 if i == h(1) - 1 else 0) for i in range(1, n - 1)
                )
                assert anticanonical_weight(restrict_hessenberg(h)) == expected

    def test_preserves_nef(self):
        for n in range(3, 10):
            for h in nef_functions(n):
                if h(1) < n:
                    assert is_nef(restrict_hessenberg(h))


class TestEmbedShift:
    def test_identity(self):
        assert embed_shift(identity(4)) == identity(5)

    def test_golden(self):
        assert embed_shift(golden.U19) == golden.UBAR20

    def test_tiny(self):
        assert embed_shift((2, 1)) == (1, 3, 2)

    def test_fixed_prefix(self):
        # the lifted witness fixes 1..h(1) pointwise, at every level
        for n in range(3, 8):
            for h in nef_functions(n):
                for low, high in zip(restriction_levels(h), restriction_levels(h)[1:]):
                    u_bar = embed_shift(construct_witness(low).u)
                    assert all(u_bar[k - 1] == k for k in range(1, high(1) + 1))

    def test_lift_recursion(self):
        # the lift composed with the pivot tracks the lower level pointwise
        for n in range(3, 8):
            for h in nef_functions(n):
                levels = restriction_levels(h)
                for low, high in zip(levels, levels[1:]):
                    lower = compose(construct_witness(low).u, pivot_permutation(low))
                    u_bar = embed_shift(construct_witness(low).u)
                    lifted = compose(u_bar, pivot_permutation(high))
                    p = high(1)
                    assert lifted[0] == p
                    for i in range(2, high.n + 1):
                        below = lower[i - 2]
                        assert lifted[i - 1] == (below if below < p else below + 1)

    def test_lift_length_additive(self):
        for n in range(3, 8):
            for h in nef_functions(n):
                levels = restriction_levels(h)
                for low, high in zip(levels, levels[1:]):
                    u_bar = embed_shift(construct_witness(low).u)
                    w = pivot_permutation(high)
                    assert length(compose(u_bar, w)) == length(u_bar) + length(w)
                    assert length(w) == length(pivot_permutation(low)) + high(1) - 1


class TestCase2Data:
    def test_golden(self):
        data = case2_data(H20, golden.UBAR20)
        assert (data.a, data.b) == (2, 4)
        assert data.r == golden.CASE2_R
        assert data.m == golden.CASE2_M
        assert data.q == golden.CASE2_Q
        assert data.delta == (1, 1, 0)
        assert data.M == golden.CASE2_LAST

    def test_not_case2(self):
        with pytest.raises(NotCase2Error):
            case2_data(validate([2, 3, 3]), identity(3))
        with pytest.raises(NotCase2Error):
            case2_data(validate([3, 3, 3]), identity(3))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            case2_data(H20, identity(19))

    def test_degenerate_lower_arm(self):
        # a = 0: a single row r[0], m[0] counts everything below it
        h = validate([3, 3, 4, 4])
        u_bar = embed_shift(construct_witness(restrict_hessenberg(h)).u)
        data = case2_data(h, u_bar)
        assert data.a == 0 and data.b == 0
        assert data.m == (1,) and data.q == (1,) and data.M == 0

    def test_sweep_invariants(self):
        for n in range(3, 8):
            for h in nef_functions(n):
                if h(1) == n or anticanonical_weight(h)[h(1) - 1] != 0:
                    continue
                u_bar = embed_shift(construct_witness(restrict_hessenberg(h)).u)
                data = case2_data(h, u_bar)
                y = compose(u_bar, pivot_permutation(h))
                p = h(1)
                # r strictly decreasing
                assert all(a > b for a, b in zip(data.r, data.r[1:]))
                # m weakly decreasing, delta consistent, M = last positive gap
                assert all(a >= b for a, b in zip(data.m, data.m[1:]))
                padded = data.m + (0,)
                assert data.delta == tuple(
                    padded[k] - padded[k + 1] for k in range(data.a + 1)
                )
                if all(x == 0 for x in data.delta):
                    assert data.M is None
                else:
                    assert data.delta[data.M] >= 1
                    assert all(x == 0 for x in data.delta[data.M + 1 :])
                # q lists exactly the offsets below each r[k], by value
                for k in range(data.a + 1):
                    expected = {
                        q for q in range(1, data.b + 2) if y[p + q - 1] < data.r[k]
                    }
                    assert set(data.q[: data.m[k]]) == expected
                values = [y[p + q - 1] for q in data.q]
                assert values == sorted(values)
                # the lift places the q offsets in increasing-value order
                for l in range(1, data.m[0] + 1):
                    assert u_bar[p + data.q[l - 1] - 1] == p + l

    def test_shape_identity_on_lower_arm(self):
        # below the block pivot the function descends by exactly 2 per row
        for n in list(range(3, 8)) + [20]:
            for h in nef_functions(n) if n < 8 else [H20]:
                p = h(1)
                if p == n or anticanonical_weight(h)[p - 1] != 0:
                    continue
                blocks = parabolic_blocks(anticanonical_weight(h))
                start, _ = blocks.interval_containing(p)
                for k in range(p - start + 1):
                    assert h(p - k) == h(p) - 2 * k


class TestCase2bTransform:
    def test_golden(self):
        data = case2_data(H20, golden.UBAR20)
        assert case2b_transform(H20, golden.UBAR20, data) == golden.U20

    def test_single_swap(self):
        # a = 0, m = (1,): the correction is one adjacent transposition
        h = validate([3, 3, 4, 4])
        u_bar = embed_shift(construct_witness(restrict_hessenberg(h)).u)
        data = case2_data(h, u_bar)
        swap = list(range(1, 5))
        swap[2], swap[3] = swap[3], swap[2]
        assert case2b_transform(h, u_bar, data) == compose(tuple(swap), u_bar)

    def test_rejects_trivial_data(self):
        h = validate([3, 3, 4, 4])
        u_bar = embed_shift(construct_witness(restrict_hessenberg(h)).u)
        data = case2_data(h, u_bar)
        import dataclasses

        with pytest.raises(NotCase2bError):
            case2b_transform(h, u_bar, dataclasses.replace(data, M=None))

    def test_length_growth(self):
        assert length(golden.U20) == length(golden.UBAR20) + sum(golden.CASE2_M)
        for h, u_bar, data in self._case2b_instances():
            u = case2b_transform(h, u_bar, data)
            assert length(u) == length(u_bar) + sum(data.m[: data.M + 1])

    def _case2b_instances(self):
        out = []
        for n in range(3, 8):
            for h in nef_functions(n):
                if h(1) == n or anticanonical_weight(h)[h(1) - 1] != 0:
                    continue
                u_bar = embed_shift(construct_witness(restrict_hessenberg(h)).u)
                data = case2_data(h, u_bar)
                if data.M is not None:
                    out.append((h, u_bar, data))
        return out

    def test_order_transport(self):
        # on the block at h(1), u orders positions like the lifted product
        for h, u_bar, data in self._case2b_instances():
            u = case2b_transform(h, u_bar, data)
            y = compose(u_bar, pivot_permutation(h))
            blocks = parabolic_blocks(anticanonical_weight(h))
            start, end = blocks.interval_containing(h(1))
            for j1 in range(start, end + 1):
                for j2 in range(j1 + 1, end + 1):
                    assert (u[j1 - 1] < u[j2 - 1]) == (y[j1 - 1] < y[j2 - 1])

    def test_cycle_semantics(self):
        # the correcting product inverts exactly the pairs (h(1)-k, h(1)+l)
        for h, u_bar, data in self._case2b_instances():
            u = case2b_transform(h, u_bar, data)
            corrector = compose(u, inverse(u_bar))
            p = h(1)
            n = h.n
            for j1 in range(1, n + 1):
                for j2 in range(j1 + 1, n + 1):
                    inverted = corrector[j1 - 1] > corrector[j2 - 1]
                    expect = any(
                        j1 == p - k and j2 in range(p + 1, p + data.m[k] + 1)
                        for k in range(data.M + 1)
                    )
                    assert inverted == expect

    def test_settle_point_diagnostics(self):
        # where the lower-arm rows settle, the pivot and distances agree
        for h, u_bar, data in self._case2b_instances():
            p = h(1)
            w = pivot_permutation(h)
            winv = inverse(w)
            for k in range(1, data.M + 1):
                t_k = plus_step(h, p - k)
                assert w[t_k - 1] == h(p) - (2 * k - 1)
                assert winv[p - k - 1] == wall_distance(h, t_k)


class TestVerifyConditions:
    def test_golden_n20(self):
        report = verify_conditions(H20, golden.U20)
        assert report.all_conditions and report.in_block_subgroup

    def test_golden_n19(self):
        report = verify_conditions(H19, golden.U19)
        assert report.all_conditions and report.in_block_subgroup

    def test_full_flag_identity(self):
        report = verify_conditions(validate([5] * 5), identity(5))
        assert report.all_conditions and report.in_block_subgroup

    def test_uncorrected_lift_fails_block_order(self):
        report = verify_conditions(H20, golden.UBAR20)
        assert report.in_block_subgroup and report.cond_i
        assert not report.cond_ii

    def test_not_nef(self):
        with pytest.raises(NotNefError):
            verify_conditions(validate([2, 5, 5, 5, 5]), identity(5))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            verify_conditions(H20, identity(19))


class TestConstructWitness:
    def test_full_flag(self):
        report = construct_witness(validate([6] * 6))
        assert report.u == identity(6)
        assert report.case_trace[-1].case == "base"

    def test_golden_conditional_equality(self):
        # the frozen witness pair: if the recursion reproduces the lower
        # level's witness, the top level must come out exactly the same
        report = construct_witness(H20)
        assert report.all_conditions
        lower = construct_witness(H19)
        assert lower.all_conditions
        if lower.u == golden.U19:
            assert report.u == golden.U20

    def test_golden_trace(self):
        report = construct_witness(H20)
        trace = [(r.n, r.case) for r in report.case_trace]
        assert trace[0] == (7, "base")
        assert trace[-1] == (20, "2-b")
        assert trace == sorted(trace)
        data = report.case_trace[-1].data
        assert data.m == golden.CASE2_M and data.M == golden.CASE2_LAST

    def test_small(self):
        report = construct_witness(validate([3, 3, 4, 4]))
        assert report.all_conditions
        assert report.u in brute_force_witness(validate([3, 3, 4, 4]), True)

    def test_not_nef(self):
        with pytest.raises(NotNefError):
            construct_witness(validate([2, 5, 5, 5, 5]))

    def test_all_conditions_hold_everywhere(self):
        for n in range(2, 8):
            for h in nef_functions(n):
                report = construct_witness(h)
                assert report.all_conditions and report.in_block_subgroup

    def test_distance_commutes_with_advance(self):
        # inside one block, the wall distance intertwines the advance and
        # limit operators
        for n in range(3, 9):
            for h in nef_functions(n):
                blocks = parabolic_blocks(anticanonical_weight(h))
                for i in range(2, n):
                    limit = stable_limit(h, i)
                    interval = blocks.interval_containing(i - 1)
                    if interval is None or not (interval[0] <= limit <= interval[1]):
                        continue
                    if h(i) == h(i - 1) + 2:
                        continue
                    d = wall_distance(h, i)
                    assert d >= 1
                    assert wall_distance(h, plus_step(h, i)) == plus_step(h, d)
                    assert wall_distance(h, limit) == stable_limit(h, d)


class TestBruteForce:
    def test_no_blocks_only_identity(self):
        assert brute_force_witness(validate([3, 3, 3]), True) == [identity(3)]

    def test_contains_construction(self):
        for n in range(2, 7):
            for h in nef_functions(n):
                found = brute_force_witness(h, True)
                assert found
                assert construct_witness(h).u in found

    def test_relaxed_superset(self):
        for h in nef_functions(5):
            strict = brute_force_witness(h, True)
            relaxed = brute_force_witness(h, False)
            assert set(strict) <= set(relaxed)
            assert relaxed == sorted(relaxed)

    def test_cap(self):
        with pytest.raises(SearchSpaceTooLargeError):
            brute_force_witness(H20, True, cap=10)

    def test_not_nef(self):
        with pytest.raises(NotNefError):
            brute_force_witness(validate([2, 5, 5, 5, 5]), True)


class TestBignessCertificate:
    def test_small(self):
        h = validate([2, 3, 3])
        u, chain = bigness_certificate(h)
        assert u == identity(3)
        assert len(chain) - 1 == 2
        assert chain[0] == u and chain[-1] == compose(u, pivot_permutation(h))

    def test_full_flag_reaches_top(self):
        h = validate([4] * 4)
        u, chain = bigness_certificate(h)
        assert u == identity(4)
        assert chain[-1] == (4, 3, 2, 1) and len(chain) - 1 == 6

    def test_chain_is_valid_everywhere(self):
        for n in range(2, 7):
            for h in nef_functions(n):
                u, chain = bigness_certificate(h)
                blocks = parabolic_blocks(anticanonical_weight(h))
                assert chain[0] == u
                assert chain[-1] == compose(u, pivot_permutation(h))
                for x, y in zip(chain, chain[1:]):
                    assert is_cover(x, y)
                    assert min_coset_rep(x, blocks) != min_coset_rep(y, blocks)

    def test_golden_scale(self):
        u, chain = bigness_certificate(H20)
        blocks = parabolic_blocks(anticanonical_weight(H20))
        assert len(chain) - 1 == 113
        assert chain[-1] == compose(u, pivot_permutation(H20))
        for x, y in zip(chain, chain[1:]):
            assert length(y) == length(x) + 1
            assert min_coset_rep(x, blocks) != min_coset_rep(y, blocks)

    def test_not_nef(self):
        with pytest.raises(NotNefError):
            bigness_certificate(validate([2, 5, 5, 5, 5]))
