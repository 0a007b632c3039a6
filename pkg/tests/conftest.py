"""Shared fixtures and the independent reference oracle.

``oracle_expand`` recomputes expansions from scratch with its own
arithmetic (breadth-first, dict-based) so the package implementation is
never checked against itself.
"""

from __future__ import annotations

from collections import deque

import hypothesis.strategies as st

from fujiki_oka import ProperFraction


def oracle_expand(numerators, denominator):
    """Reference expansion: word -> (numerators, denominator).

    Children whose pivot entry is 0 (no finite image) or 1 (image collapses
    to zero) are dropped, mirroring the definition rather than the package
    code.
    """
    results = {}
    queue = deque([((), tuple(numerators), denominator)])
    while queue:
        word, nums, den = queue.popleft()
        results[word] = (nums, den)
        if den == 1:
            continue
        for slot, pivot in enumerate(nums, start=1):
            if pivot in (0, 1):
                continue
            child = tuple(
                (-den) % pivot if j == slot - 1 else nums[j] % pivot
                for j in range(len(nums))
            )
            queue.append((word + (slot,), child, pivot))
    return results


def oracle_size(numerators, denominator):
    return sum(
        sum(1 for v in nums if v == 1)
        for nums, _ in oracle_expand(numerators, denominator).values()
    )


def oracle_height(numerators, denominator):
    return sum(
        sum(nums) - den for nums, den in oracle_expand(numerators, denominator).values()
    )


@st.composite
def semi_unimodular_fractions(draw, min_n=2, max_n=4, max_r=60):
    """Arbitrary valid inputs: some weight is 1, the rest are free mod r."""
    n = draw(st.integers(min_n, max_n))
    r = draw(st.integers(2, max_r))
    pos = draw(st.integers(0, n - 1))
    weights = [draw(st.integers(0, r - 1)) for _ in range(n)]
    weights[pos] = 1
    return ProperFraction(tuple(weights), r)


def all_semi_unimodular(dim, r):
    """Every valid weight tuple for one order, lexicographic."""
    from itertools import product

    for weights in product(range(r), repeat=dim):
        if 1 in weights:
            yield ProperFraction(weights, r)
