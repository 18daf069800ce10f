"""Subset sums of slowly growing sequences.

If ``a_1 = 1`` and ``a_{i+1} <= 2 a_i`` then every integer between 0 and
``sum(a)`` is the sum of some subset of ``a``: take the largest term not
exceeding the target and recurse on the terms before it.
"""

from __future__ import annotations

from typing import Sequence

from .errors import PreconditionViolated, TargetOutOfRange


def check_doubling(a: Sequence[int]) -> None:
    if not a:
        return
    if a[0] != 1:
        raise PreconditionViolated(f"first term must be 1, got {a[0]}")
    for i in range(1, len(a)):
        if a[i] < a[i - 1]:
            raise PreconditionViolated(f"sequence decreases at index {i}")
        if a[i] > 2 * a[i - 1]:
            raise PreconditionViolated(f"term {a[i]} at index {i} exceeds twice its predecessor")


def subset_sum_greedy(a: Sequence[int], x: int) -> list[int]:
    """Indices (0-based, increasing) of terms of ``a`` summing to ``x``."""
    check_doubling(a)
    if not 0 <= x <= sum(a):
        raise TargetOutOfRange(f"target {x} outside [0, {sum(a)}]")
    chosen = []
    rest = x
    for i in range(len(a) - 1, -1, -1):
        if a[i] <= rest:
            chosen.append(i)
            rest -= a[i]
    assert rest == 0
    return chosen[::-1]
