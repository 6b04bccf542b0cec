"""Strong components, condensation order, recognizers and the singular-maximizer classifier."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import Tournament, relabel_partial, score_vector
from .cycles import c3_direct
from .errors import (
    ClassificationError,
    DecompositionMismatch,
    NotMaximizer,
    NotSingular,
    OrderOutOfRange,
)


@dataclass(frozen=True)
class SccDecomposition:
    """Components in dominance order: every vertex of ``components[a]`` beats
    every vertex of ``components[b]`` when ``a < b``."""

    components: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def __len__(self) -> int:
        return len(self.components)


def _tarjan(n: int, rows: tuple[int, ...]) -> list[list[int]]:
    """Iterative lowlink search; components come out sink-first."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, rows[root])]
        while work:
            v, pending = work[-1]
            if pending:
                w = (pending & -pending).bit_length() - 1
                work[-1] = (v, pending & (pending - 1))
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, rows[w]))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out


def scc(t: Tournament) -> SccDecomposition:
    comps = _tarjan(t.n, t.rows)
    comps.reverse()
    return SccDecomposition(tuple(tuple(sorted(c)) for c in comps))


def check_decomposition(t: Tournament, d: SccDecomposition) -> None:
    """Raise ``DecompositionMismatch`` unless ``d`` is the condensation of ``t``."""
    seen = sorted(v for c in d.components for v in c)
    if seen != list(range(t.n)):
        raise DecompositionMismatch("components do not partition the vertex set")
    earlier = 0
    for comp in d.components:
        mask = 0
        for v in comp:
            mask |= 1 << v
        for v in comp:
            if t.rows[v] & earlier:
                raise DecompositionMismatch(f"vertex {v} beats a vertex of an earlier component")
        if len(_tarjan(len(comp), relabel_partial(t, comp).rows)) != 1:
            raise DecompositionMismatch(f"component {comp} is not strongly connected")
        earlier |= mask


def is_strong(t: Tournament) -> bool:
    return len(_tarjan(t.n, t.rows)) == 1


def is_transitive(t: Tournament) -> bool:
    return c3_direct(t) == 0


def is_regular(t: Tournament) -> bool:
    return len(set(score_vector(t).raw)) == 1


def is_almost_regular(t: Tournament) -> bool:
    if t.n % 2:
        return False
    s = score_vector(t).sorted
    return s[-1] - s[0] <= 1


def is_regular_or_almost(t: Tournament) -> bool:
    return is_regular(t) if t.n % 2 else is_almost_regular(t)


def is_upset(t: Tournament) -> bool:
    """Strong with exactly n-2 three-cycles."""
    if t.n < 3:
        raise OrderOutOfRange(f"upset tournaments have order >= 3, got {t.n}")
    return is_strong(t) and c3_direct(t) == t.n - 2


class MaximizerTag(enum.Enum):
    TRIVIAL_SINK = "TrivialSink"
    TRIVIAL_SOURCE = "TrivialSource"
    NONTRIVIAL = "Nontrivial"


@dataclass(frozen=True)
class MaximizerClass:
    tag: MaximizerTag
    base: Tournament | None = None

    @property
    def trivial(self) -> bool:
        return self.tag is not MaximizerTag.NONTRIVIAL


def delete_vertex(t: Tournament, v: int) -> Tournament:
    return relabel_partial(t, [u for u in range(t.n) if u != v])


def extends_regular(t: Tournament) -> bool:
    """True if deleting some vertex leaves a regular or almost regular tournament."""
    return t.n >= 2 and any(is_regular_or_almost(delete_vertex(t, v)) for v in range(t.n))


def sink_or_source_over_regular(t: Tournament) -> bool:
    """True if some sink or source sits on top of a regular or almost regular rest."""
    if t.n < 2:
        return False
    full = (1 << t.n) - 1
    for v, r in enumerate(t.rows):
        if (r == 0 or r == full ^ (1 << v)) and is_regular_or_almost(delete_vertex(t, v)):
            return True
    return False


def classify_singular_maximizer(t: Tournament, max_value: int) -> MaximizerClass:
    from .linalg import is_singular

    if not is_singular(t):
        raise NotSingular(f"{t} is nonsingular")
    c3 = c3_direct(t)
    if c3 != max_value:
        raise NotMaximizer(f"{t} has C3 = {c3}, not the maximum {max_value}")
    d = scc(t)
    singles = [i for i, c in enumerate(d.components) if len(c) == 1]
    if not singles:
        return MaximizerClass(MaximizerTag.NONTRIVIAL)
    candidates = []
    if singles[-1] == len(d) - 1:
        candidates.append((MaximizerTag.TRIVIAL_SINK, d.components[-1][0]))
    if singles[0] == 0:
        candidates.append((MaximizerTag.TRIVIAL_SOURCE, d.components[0][0]))
    if not candidates:
        raise ClassificationError(f"{t}: singleton component is neither first nor last")
    for tag, v in candidates:
        base = delete_vertex(t, v)
        if is_regular_or_almost(base):
            return MaximizerClass(tag, base)
    raise ClassificationError(f"{t}: removing the sink/source does not leave an (almost) regular base")
