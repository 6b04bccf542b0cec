"""Extremal 3-cycle counts over singular / nonsingular isomorphism classes."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

from .core import Tournament, construct_transitive, encode, relabel_partial
from .cycles import c3_direct, moon_bound, odd_singular_lower_bound
from .enumeration import ENUM_MAX_ORDER, canonical_code, enumerate_iso_classes
from .errors import OrderTooLarge
from .linalg import determinant, is_singular
from .structure import SccDecomposition, is_upset, scc

WITNESS_CAP = 1000


class Objective(enum.Enum):
    MAX_C3_SINGULAR = "max-singular"
    MIN_C3_NONSINGULAR = "min-nonsingular"


@dataclass
class ExtremalResult:
    n: int
    objective: Objective
    value: int | None
    witnesses: list[str] = field(default_factory=list)
    witness_count: int = 0
    bound_ok: bool = True

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "objective": self.objective.value,
            "value": self.value,
            "witness_count": self.witness_count,
            "witnesses": self.witnesses[:WITNESS_CAP],
            "bound_ok": self.bound_ok,
        }


@dataclass(frozen=True)
class ClassInfo:
    t: Tournament
    code: str
    c3: int
    det: int
    scc: SccDecomposition


def _check_range(n: int, lo: int = 3) -> None:
    if n > ENUM_MAX_ORDER:
        raise OrderTooLarge(f"extremal search supports n <= {ENUM_MAX_ORDER}, got {n}")
    if n < lo:
        raise OrderTooLarge(f"extremal search needs n >= {lo}, got {n}")


@lru_cache(maxsize=None)
def class_table(n: int, threads: int | None = None) -> tuple[ClassInfo, ...]:
    """Every isomorphism class of order ``n`` with its C3, determinant and condensation."""
    return tuple(
        ClassInfo(t, encode(t).text, c3_direct(t), determinant(t), scc(t))
        for t in enumerate_iso_classes(n, threads=threads)
    )


def _collect(ts, key) -> tuple[int | None, list[Tournament]]:
    best = None
    wit: list[Tournament] = []
    for t in ts:
        v = key(t)
        if best is None or v > best:
            best, wit = v, [t]
        elif v == best:
            wit.append(t)
    return best, wit


def singular_maximizers(n: int, threads: int | None = None) -> tuple[int, list[Tournament]]:
    """Maximum C3 over singular classes and every class attaining it.

    Only classes with at least C3 = moon_bound(n-1) are examined: adding a
    sink to a Moon-extremal tournament of order n-1 is always singular and
    reaches that value, so nothing below it can be maximal.
    """
    floor = moon_bound(n - 1) if n >= 2 else None
    ts = enumerate_iso_classes(n, where=is_singular, min_c3=floor, threads=threads)
    best, wit = _collect(ts, c3_direct)
    return best, wit


def max_c3_singular(n: int, threads: int | None = None) -> ExtremalResult:
    _check_range(n)
    value, wit = singular_maximizers(n, threads)
    total = comb(n, 3)
    if n % 2 == 0:
        ok = value is not None and 4 * value == total
    else:
        ok = value is not None and odd_singular_lower_bound(n) <= value <= total // 4
    return ExtremalResult(n, Objective.MAX_C3_SINGULAR, value,
                          [encode(t).text for t in wit[:WITNESS_CAP]], len(wit), ok)


def nonsingular_minimizers(n: int, threads: int | None = None) -> tuple[int | None, list[ClassInfo]]:
    rows = [c for c in class_table(n, threads) if c.det != 0]
    if not rows:
        return None, []
    low = min(c.c3 for c in rows)
    return low, [c for c in rows if c.c3 == low]


def min_c3_nonsingular(n: int, threads: int | None = None) -> ExtremalResult:
    _check_range(n)
    value, wit = nonsingular_minimizers(n, threads)
    k = n // 3
    ok = value == n - 2 * k and all(
        len(c.scc) == k and all(len(comp) >= 3 for comp in c.scc.components)
        and _components_are_upsets(c)
        for c in wit
    )
    return ExtremalResult(n, Objective.MIN_C3_NONSINGULAR, value,
                          [c.code for c in wit[:WITNESS_CAP]], len(wit), ok)


def _components_are_upsets(c: ClassInfo) -> bool:
    return all(len(comp) >= 3 and is_upset(relabel_partial(c.t, comp)) for comp in c.scc.components)


def extremal(n: int, objective: Objective | str, threads: int | None = None) -> ExtremalResult:
    objective = Objective(objective)
    if objective is Objective.MAX_C3_SINGULAR:
        return max_c3_singular(n, threads)
    return min_c3_nonsingular(n, threads)


def upset_closure(n: int) -> set[str]:
    """Canonical codes of every path reversal of the transitive tournament.

    In the transitive tournament vertex ``i`` beats every ``j < i``; the
    directed paths from the top vertex ``n-1`` to the bottom vertex ``0`` are
    the decreasing sequences through any subset of the middle vertices.
    """
    base = construct_transitive(n)
    middle = range(1, n - 1)
    out = set()
    for size in range(n - 1):
        for inner in combinations(middle, size):
            path = (n - 1,) + tuple(sorted(inner, reverse=True)) + (0,)
            rows = list(base.rows)
            for a, b in zip(path, path[1:]):
                rows[a] ^= 1 << b
                rows[b] ^= 1 << a
            out.add(canonical_code(Tournament(n, tuple(rows))).text)
    return out
