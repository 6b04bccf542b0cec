"""Tournament representation, text formats, constructors and elementary mutations.

A tournament on ``n`` vertices is stored as ``n`` integer bit rows: bit ``j`` of
``rows[i]`` is set iff vertex ``i`` beats vertex ``j``.  Vertices are 0-based.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadChar,
    BadHex,
    BadLength,
    EmptySet,
    NoSuchArc,
    NonSquare,
    NotTournament,
    OrderOutOfRange,
    SameVertex,
    EvenOrder,
    OddOrder,
)

MAX_ORDER = 32


def _full(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, slots=True)
class Tournament:
    n: int
    rows: tuple[int, ...]

    def beats(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def validate(self) -> None:
        """Raise if the tournament invariants do not hold."""
        n, rows = self.n, self.rows
        if not 1 <= n <= MAX_ORDER:
            raise OrderOutOfRange(f"order {n} outside 1..{MAX_ORDER}")
        if len(rows) != n:
            raise NotTournament(f"expected {n} rows, got {len(rows)}")
        full = _full(n)
        for i, r in enumerate(rows):
            if r & ~full:
                raise NotTournament(f"row {i} has bits beyond column {n - 1}")
            if r >> i & 1:
                raise NotTournament(f"nonzero diagonal at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if (rows[i] >> j & 1) + (rows[j] >> i & 1) != 1:
                    raise NotTournament(f"pair ({i},{j}) is not oriented exactly once")

    def matrix(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.n)] for r in self.rows]

    def to_text(self, sep: str = "") -> str:
        return "\n".join(sep.join(str(b) for b in row) for row in self.matrix())

    def __str__(self) -> str:
        return encode(self).text


@dataclass(frozen=True, slots=True)
class ScoreVector:
    raw: tuple[int, ...]
    sorted: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class UpperTriangleCode:
    """Pair-lexicographic upper-triangle bits; bit ``k`` of ``value`` is the k-th pair."""

    n: int
    value: int

    @property
    def length(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self.value >> k & 1 for k in range(self.length))

    @property
    def bitstring(self) -> str:
        """Bits in pair order as a '0'/'1' string; its string order is the code order."""
        m = self.length
        return format(self.value, f"0{m}b")[::-1] if m else ""

    @property
    def text(self) -> str:
        width = max(1, -(-self.length // 4))
        return f"T{self.n}:{self.value:0{width}x}"

    def __str__(self) -> str:
        return self.text

    def __lt__(self, other: UpperTriangleCode) -> bool:
        return (self.n, self.bitstring) < (other.n, other.bitstring)


def from_rows(rows: Sequence[int], validate: bool = True) -> Tournament:
    t = Tournament(len(rows), tuple(rows))
    if validate:
        t.validate()
    return t


def from_matrix(matrix: Sequence[Sequence[int]]) -> Tournament:
    rows = []
    for i, line in enumerate(matrix):
        if len(line) != len(matrix):
            raise NonSquare(f"row {i} has {len(line)} entries, expected {len(matrix)}", line=i + 1)
        r = 0
        for j, b in enumerate(line):
            if b not in (0, 1):
                raise BadChar(f"entry ({i},{j}) is {b!r}", line=i + 1, offset=j + 1)
            r |= b << j
        rows.append(r)
    if not rows:
        raise NonSquare("empty matrix")
    return from_rows(rows)


def from_matrix_text(text: str) -> Tournament:
    """Parse a 0/1 grid, one row per line, entries optionally whitespace-separated."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise NonSquare("no rows")
    n = len(lines)
    grid = []
    for lineno, ln in enumerate(lines, 1):
        entries = []
        for offset, ch in enumerate(ln, 1):
            if ch.isspace():
                continue
            if ch not in "01":
                raise BadChar(f"unexpected character {ch!r}", line=lineno, offset=offset)
            entries.append(int(ch))
        if len(entries) != n:
            raise NonSquare(f"row has {len(entries)} entries but there are {n} rows", line=lineno)
        grid.append(entries)
    return from_matrix(grid)


def to_matrix_text(t: Tournament) -> str:
    return t.to_text()


def score_vector(t: Tournament) -> ScoreVector:
    raw = tuple(r.bit_count() for r in t.rows)
    return ScoreVector(raw, tuple(sorted(raw)))


def _check_order(n: int, lo: int = 1, hi: int = MAX_ORDER) -> None:
    if not lo <= n <= hi:
        raise OrderOutOfRange(f"order {n} outside {lo}..{hi}")


def construct_transitive(n: int) -> Tournament:
    """Vertex ``i`` beats every ``j < i``, so vertex index equals score."""
    _check_order(n)
    return Tournament(n, tuple(_full(i) for i in range(n)))


def construct_upset(n: int) -> Tournament:
    """Transitive tournament with the arc from the top vertex to the bottom vertex reversed."""
    _check_order(n, 3)
    rows = list(construct_transitive(n).rows)
    rows[n - 1] &= ~1
    rows[0] |= 1 << (n - 1)
    return Tournament(n, tuple(rows))


def construct_regular(n: int) -> Tournament:
    """Rotational tournament: ``i`` beats ``i+1, ..., i+(n-1)/2`` mod ``n``."""
    _check_order(n)
    if n % 2 == 0:
        raise EvenOrder(f"regular tournaments need odd order, got {n}")
    half = (n - 1) // 2
    rows = []
    for i in range(n):
        r = 0
        for k in range(1, half + 1):
            r |= 1 << ((i + k) % n)
        rows.append(r)
    return Tournament(n, tuple(rows))


def construct_almost_regular(n: int) -> Tournament:
    """Circulant on steps ``1..n/2-1`` plus diameters ``i -> i+n/2`` for ``i < n/2``."""
    _check_order(n, 2)
    if n % 2:
        raise OddOrder(f"almost regular tournaments need even order, got {n}")
    half = n // 2
    rows = []
    for i in range(n):
        r = 0
        for k in range(1, half):
            r |= 1 << ((i + k) % n)
        if i < half:
            r |= 1 << (i + half)
        rows.append(r)
    return Tournament(n, tuple(rows))


def add_sink(t: Tournament) -> Tournament:
    _check_order(t.n + 1)
    bit = 1 << t.n
    return Tournament(t.n + 1, tuple(r | bit for r in t.rows) + (0,))


def add_source(t: Tournament) -> Tournament:
    _check_order(t.n + 1)
    return Tournament(t.n + 1, t.rows + (_full(t.n),))


def reverse_arc(t: Tournament, i: int, j: int) -> Tournament:
    if i == j:
        raise SameVertex(f"cannot reverse a loop at {i}")
    if not t.beats(i, j):
        raise NoSuchArc(f"{i} does not beat {j}")
    rows = list(t.rows)
    rows[i] ^= 1 << j
    rows[j] ^= 1 << i
    return Tournament(t.n, tuple(rows))


def relabel(t: Tournament, perm: Sequence[int]) -> Tournament:
    """Vertex ``perm[k]`` of ``t`` becomes vertex ``k`` of the result."""
    n = t.n
    rows = []
    for k in range(n):
        src = t.rows[perm[k]]
        r = 0
        for m in range(n):
            if src >> perm[m] & 1:
                r |= 1 << m
        rows.append(r)
    return Tournament(n, tuple(rows))


def subtournament(t: Tournament, keep: Iterable[int]) -> Tournament:
    verts = sorted(set(keep))
    if not verts:
        raise EmptySet("subtournament needs at least one vertex")
    if verts[0] < 0 or verts[-1] >= t.n:
        raise OrderOutOfRange(f"vertex set {verts} not inside 0..{t.n - 1}")
    return relabel_partial(t, verts)


def relabel_partial(t: Tournament, verts: Sequence[int]) -> Tournament:
    rows = []
    for a in verts:
        src = t.rows[a]
        r = 0
        for m, b in enumerate(verts):
            if src >> b & 1:
                r |= 1 << m
        rows.append(r)
    return Tournament(len(verts), tuple(rows))


def pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def encode(t: Tournament) -> UpperTriangleCode:
    value = 0
    k = 0
    rows = t.rows
    for i in range(t.n):
        r = rows[i]
        for j in range(i + 1, t.n):
            if r >> j & 1:
                value |= 1 << k
            k += 1
    return UpperTriangleCode(t.n, value)


def decode(code: UpperTriangleCode | str) -> Tournament:
    if isinstance(code, str):
        code = parse_code(code)
    n, value = code.n, code.value
    _check_order(n)
    if value >> code.length:
        raise BadLength(f"value has bits beyond the {code.length} pairs of order {n}")
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if value >> k & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            k += 1
    return Tournament(n, tuple(rows))


_CODE_RE = re.compile(r"T(\d+):(.*)")


def parse_code(text: str) -> UpperTriangleCode:
    """Parse ``T<n>:<hex>``; the hex field must have exactly ``ceil(C(n,2)/4)`` digits (min 1)."""
    m = _CODE_RE.fullmatch(text.strip())
    if not m:
        raise BadHex(f"not a tournament code: {text!r}")
    n = int(m.group(1))
    _check_order(n)
    digits = m.group(2)
    if not digits or any(c not in "0123456789abcdefABCDEF" for c in digits):
        raise BadHex(f"bad hex field {digits!r}")
    length = n * (n - 1) // 2
    width = max(1, -(-length // 4))
    if len(digits) != width:
        raise BadLength(f"order {n} needs {width} hex digits, got {len(digits)}")
    value = int(digits, 16)
    if value >> length:
        raise BadLength(f"value has bits beyond the {length} pairs of order {n}")
    return UpperTriangleCode(n, value)


def all_labeled(n: int) -> Iterator[Tournament]:
    """Every labeled tournament of order ``n`` (2^C(n,2) of them), in code order of value."""
    m = n * (n - 1) // 2
    for value in range(1 << m):
        yield decode(UpperTriangleCode(n, value))


def random_tournament(n: int, rng: random.Random | None = None) -> Tournament:
    rng = rng or random.Random()
    m = n * (n - 1) // 2
    return decode(UpperTriangleCode(n, rng.getrandbits(m) if m else 0))
