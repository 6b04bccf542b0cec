"""3-cycle counts, the arc-reversal delta, and the classical bounds on C3."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .core import ScoreVector, Tournament
from .errors import SameVertex


def c3_from_scores(s: ScoreVector | tuple[int, ...]) -> int:
    """C(n,3) minus the sum of C(s_i,2)."""
    raw = s.raw if isinstance(s, ScoreVector) else s
    return comb(len(raw), 3) - sum(comb(x, 2) for x in raw)


def c3_direct(t: Tournament) -> int:
    """Count cyclic triples by orientation, never looking at scores.

    For each pair ``i < j`` the third vertex ``k > j`` closes a cycle iff it
    completes ``i -> j -> k -> i`` or ``i -> k -> j -> i``; both are masked
    popcounts on the bit rows.
    """
    n, rows = t.n, t.rows
    full = (1 << n) - 1
    total = 0
    for i in range(n):
        ri = rows[i]
        not_ri = ~ri & full
        for j in range(i + 1, n):
            above = full & ~((1 << (j + 1)) - 1)
            if not above:
                break
            rj = rows[j]
            if ri >> j & 1:
                total += (rj & not_ri & above).bit_count()
            else:
                total += (~rj & ri & above).bit_count()
    return total


def reversal_delta(s: ScoreVector | tuple[int, ...], i: int, j: int) -> int:
    """Change in C3 when an existing arc ``i -> j`` is reversed."""
    if i == j:
        raise SameVertex(f"vertex {i} paired with itself")
    raw = s.raw if isinstance(s, ScoreVector) else s
    return raw[i] - raw[j] - 1


def moon_bound(n: int) -> int:
    """Maximum C3 over all tournaments of order ``n``."""
    if n % 2:
        return comb(n + 1, 3) // 4
    return 2 * comb(n // 2 + 1, 3)


def shader_threshold(n: int) -> Fraction:
    """C(n,3)/4 as an exact rational; singular tournaments never exceed it."""
    return Fraction(comb(n, 3), 4)


def odd_singular_lower_bound(n: int) -> int:
    """2*C((n+1)/2, 3), i.e. the Moon bound one order down, for odd ``n``."""
    return 2 * comb((n + 1) // 2, 3)
