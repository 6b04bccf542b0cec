"""Canonical codes and generation of tournaments up to isomorphism.

The canonical code of a tournament is the lexicographically smallest
upper-triangle bit sequence over all relabelings.  Because the sequence is
row-major, fixing the vertex at position ``k`` fixes row ``k`` entirely once
the remaining vertices are grouped into ordered cells: inside each cell the
vertex's in-neighbours must come before its out-neighbours, and among the
candidates of the first cell only those with the smallest per-cell
out-degree vector can still be optimal.  The search branches only on ties
and is cut as soon as its row sequence exceeds the best found so far.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator

from .core import Tournament, UpperTriangleCode, encode, decode, relabel, score_vector
from .errors import OrderTooLarge

log = logging.getLogger(__name__)

CANON_MAX_ORDER = 10
ENUM_MAX_ORDER = 9


def canonical_perm(n: int, rows: tuple[int, ...]) -> list[int]:
    """Vertex order whose relabeling yields the canonical code."""
    best_keys: list[tuple[int, ...]] | None = None
    best_perm: list[int] = []
    keys: list[tuple[int, ...]] = []
    perm: list[int] = []

    def search(cells: list[int]) -> None:
        nonlocal best_keys, best_perm
        if not cells:
            if best_keys is None or keys < best_keys:
                best_keys = keys.copy()
                best_perm = perm.copy()
            return
        first = cells[0]
        rest = cells[1:]
        ties: list[int] = []
        low: tuple[int, ...] | None = None
        pending = first
        while pending:
            b = pending & -pending
            pending ^= b
            v = b.bit_length() - 1
            r = rows[v]
            key = ((r & first).bit_count(),) + tuple((r & c).bit_count() for c in rest)
            if low is None or key < low:
                low, ties = key, [v]
            elif key == low:
                ties.append(v)
        keys.append(low)
        depth = len(keys)
        if best_keys is not None and keys > best_keys[:depth]:
            keys.pop()
            return
        for v in ties:
            r = rows[v]
            nxt = []
            for c in cells:
                if c == first:
                    c &= ~(1 << v)
                inn = c & ~r
                out = c & r
                if inn:
                    nxt.append(inn)
                if out:
                    nxt.append(out)
            perm.append(v)
            search(nxt)
            perm.pop()
        keys.pop()

    search([(1 << n) - 1])
    return best_perm


def canonical_form(t: Tournament) -> Tournament:
    if t.n > CANON_MAX_ORDER:
        raise OrderTooLarge(f"canonical labeling supports n <= {CANON_MAX_ORDER}, got {t.n}")
    return relabel(t, canonical_perm(t.n, t.rows))


def canonical_code(t: Tournament) -> UpperTriangleCode:
    return encode(canonical_form(t))


def are_isomorphic(a: Tournament, b: Tournament) -> bool:
    for t in (a, b):
        if t.n > CANON_MAX_ORDER:
            raise OrderTooLarge(f"canonical labeling supports n <= {CANON_MAX_ORDER}, got {t.n}")
    if a.n != b.n or score_vector(a).sorted != score_vector(b).sorted:
        return False
    return canonical_code(a) == canonical_code(b)


def code_sort_key(value: int, n: int) -> str:
    m = n * (n - 1) // 2
    return format(value, f"0{m}b")[::-1] if m else ""


def _children(parent: tuple[int, ...], min_c3: int | None) -> Iterator[tuple[int, ...]]:
    """All extensions of ``parent`` by one vertex; the new vertex beats the mask bits."""
    k = len(parent)
    bit = 1 << k
    if min_c3 is not None:
        full = bit - 1
        base_c3 = _c3_rows(parent)
    for mask in range(1 << k):
        if min_c3 is not None:
            # cycles through the new vertex: new -> a -> b -> new with a in mask, b outside
            extra = 0
            m = mask
            outside = full & ~mask
            while m:
                low = m & -m
                m ^= low
                extra += (parent[low.bit_length() - 1] & outside).bit_count()
            if base_c3 + extra < min_c3:
                continue
        yield tuple(r if mask >> i & 1 else r | bit for i, r in enumerate(parent)) + (mask,)


def _c3_rows(rows: tuple[int, ...]) -> int:
    n = len(rows)
    return n * (n - 1) * (n - 2) // 6 - sum(r.bit_count() * (r.bit_count() - 1) // 2 for r in rows)


def _canon_value(n: int, rows: tuple[int, ...]) -> int:
    perm = canonical_perm(n, rows)
    value = 0
    k = 0
    for a in range(n):
        ra = rows[perm[a]]
        for b in range(a + 1, n):
            if ra >> perm[b] & 1:
                value |= 1 << k
            k += 1
    return value


def _extend_batch(args: tuple[list[tuple[int, ...]], int | None, Callable | None]) -> set[int]:
    parents, min_c3, where = args
    found: set[int] = set()
    for parent in parents:
        n = len(parent) + 1
        local: set[int] = set()
        for child in _children(parent, min_c3):
            if where is not None and not where(Tournament(n, child)):
                continue
            local.add(_canon_value(n, child))
        found |= local
    return found


_LEVELS: dict[int, list[tuple[int, ...]]] = {1: [(0,)]}


def default_threads() -> int:
    env = os.environ.get("TOURNEYLAB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _extend(parents: list[tuple[int, ...]], n: int, min_c3: int | None,
            where: Callable | None, threads: int) -> list[tuple[int, ...]]:
    if threads > 1 and len(parents) > threads:
        chunks = [parents[i::threads * 4] for i in range(threads * 4)]
        codes: set[int] = set()
        with ProcessPoolExecutor(threads) as pool:
            for part in pool.map(_extend_batch, [(c, min_c3, where) for c in chunks]):
                codes |= part
    else:
        codes = _extend_batch((parents, min_c3, where))
    ordered = sorted(codes, key=lambda v: code_sort_key(v, n))
    return [decode(UpperTriangleCode(n, v)).rows for v in ordered]


def _level(n: int, threads: int) -> list[tuple[int, ...]]:
    if n not in _LEVELS:
        parents = _level(n - 1, threads)
        _LEVELS[n] = _extend(parents, n, None, None, threads)
        log.info("order %d: %d classes", n, len(_LEVELS[n]))
    return _LEVELS[n]


def _check_enum_order(n: int) -> None:
    if not 1 <= n <= ENUM_MAX_ORDER:
        raise OrderTooLarge(f"enumeration supports 1 <= n <= {ENUM_MAX_ORDER}, got {n}")


def enumerate_iso_classes(
    n: int,
    where: Callable[[Tournament], bool] | None = None,
    min_c3: int | None = None,
    threads: int | None = None,
) -> Iterator[Tournament]:
    """Yield one canonical representative per isomorphism class, sorted by code.

    ``where`` and ``min_c3`` must be isomorphism invariant; they are applied to
    each child before canonicalization, so they only pay off for the last level.
    """
    _check_enum_order(n)
    threads = threads or default_threads()
    if (where is None and min_c3 is None) or n == 1 or n in _LEVELS:
        reps = _level(n, threads)
        for rows in reps:
            t = Tournament(n, rows)
            if min_c3 is not None and _c3_rows(rows) < min_c3:
                continue
            if where is not None and not where(t):
                continue
            yield t
        return
    for rows in _extend(_level(n - 1, threads), n, min_c3, where, threads):
        yield Tournament(n, rows)


def class_count(n: int, threads: int | None = None) -> int:
    _check_enum_order(n)
    return len(_level(n, threads or default_threads()))


def brute_force_codes(n: int) -> set[UpperTriangleCode]:
    """Canonical codes of all 2^C(n,2) labeled tournaments."""
    m = n * (n - 1) // 2
    out = set()
    for value in range(1 << m):
        t = decode(UpperTriangleCode(n, value))
        out.add(_canon_value(n, t.rows))
    return {UpperTriangleCode(n, v) for v in out}


def iter_codes(ts: Iterable[Tournament]) -> Iterator[str]:
    for t in ts:
        yield encode(t).text


def clear_cache() -> None:
    for k in list(_LEVELS):
        if k > 1:
            del _LEVELS[k]
