"""Exact integer determinants of tournament matrices."""

from __future__ import annotations

from functools import reduce
from itertools import combinations
from operator import mul
from typing import TYPE_CHECKING

from .core import Tournament, relabel_partial, subtournament  # noqa: F401  (re-exported)
from .errors import OrderTooLarge

if TYPE_CHECKING:
    from .structure import SccDecomposition

SPECTRUM_MAX_ORDER = 12


def bareiss(a: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix; ``a`` is consumed."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k]:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def determinant(t: Tournament) -> int:
    n = t.n
    return bareiss([[r >> j & 1 for j in range(n)] for r in t.rows])


def is_singular(t: Tournament) -> bool:
    rows = t.rows
    full = (1 << t.n) - 1
    # a zero row (sink) or zero column (source) settles it without elimination
    if any(r == 0 or r == full ^ (1 << i) for i, r in enumerate(rows)):
        return True
    return determinant(t) == 0


def det_via_scc(t: Tournament, d: SccDecomposition) -> int:
    """Product of the determinants of the strong components listed in ``d``."""
    from .structure import check_decomposition

    check_decomposition(t, d)
    return reduce(mul, (determinant(relabel_partial(t, comp)) for comp in d.components), 1)


def subdeterminant_spectrum(t: Tournament) -> set[int]:
    """Determinants of every nonempty induced subtournament (principal minors)."""
    if t.n > SPECTRUM_MAX_ORDER:
        raise OrderTooLarge(f"2^{t.n} subsets is beyond the order-{SPECTRUM_MAX_ORDER} cap")
    out: set[int] = set()
    for size in range(1, t.n + 1):
        for keep in combinations(range(t.n), size):
            out.add(determinant(relabel_partial(t, keep)))
    return out
