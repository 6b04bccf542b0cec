"""Exhaustive checks of the extremal and structural claims over iso classes.

Each claim verifier takes an order ``n`` and returns a ``NRecord``; ``verify``
runs one claim over a range of orders and folds the records into a
``VerificationReport``.  A failing claim never raises: its counterexamples
are carried as canonical codes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from .core import all_labeled, encode, relabel_partial, reverse_arc, score_vector
from .cycles import c3_direct, c3_from_scores, moon_bound, odd_singular_lower_bound, reversal_delta
from .enumeration import ENUM_MAX_ORDER
from .errors import ClassificationError, OrderTooLarge, UnknownClaim
from .extremal import (
    WITNESS_CAP,
    class_table,
    nonsingular_minimizers,
    singular_maximizers,
    upset_closure,
)
from .linalg import det_via_scc, determinant, subdeterminant_spectrum
from .structure import (
    classify_singular_maximizer,
    extends_regular,
    is_regular_or_almost,
    is_strong,
    is_upset,
    scc,
    sink_or_source_over_regular,
)

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"
LABELED_SWEEP_MAX = 6


@dataclass
class NRecord:
    n: int
    status: str
    value: object = None
    witnesses: list[str] = field(default_factory=list)
    witness_count: int = 0
    counterexamples: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    claim_id: str
    n_range: tuple[int, int]
    status: str
    counterexamples: list[str]
    elapsed: float
    records: list[NRecord]

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_records(self, timings: bool = False) -> list[dict]:
        out = []
        for r in self.records:
            rec = {
                "claim_id": self.claim_id,
                "n": r.n,
                "status": r.status,
                "value": r.value,
                "witness_count": r.witness_count,
                "witnesses": r.witnesses[:WITNESS_CAP],
                "counterexamples": r.counterexamples[:WITNESS_CAP],
            }
            if r.info:
                rec["info"] = r.info
            if timings:
                rec["elapsed_ms"] = round(r.elapsed * 1000, 3)
            out.append(rec)
        return out


def _record(n: int, bad: Iterable[str], **kw) -> NRecord:
    bad = list(bad)
    return NRecord(n, FAIL if bad else PASS, counterexamples=bad, **kw)


def _prop1(n: int) -> NRecord:
    bad = [c.code for c in class_table(n) if c3_from_scores(score_vector(c.t)) != c.c3]
    checked = len(class_table(n))
    if n <= LABELED_SWEEP_MAX:
        for t in all_labeled(n):
            checked += 1
            if c3_from_scores(score_vector(t)) != c3_direct(t):
                bad.append(encode(t).text)
    return _record(n, bad, value=checked)


def _reversal(n: int) -> NRecord:
    bad = []
    arcs = 0
    for c in class_table(n):
        s = score_vector(c.t)
        for i in range(n):
            for j in range(n):
                if i != j and c.t.beats(i, j):
                    arcs += 1
                    if c3_direct(reverse_arc(c.t, i, j)) - c.c3 != reversal_delta(s, i, j):
                        bad.append(c.code)
    return _record(n, sorted(set(bad)), value=arcs)


def _max3cycles(n: int) -> NRecord:
    bound = moon_bound(n)
    table = class_table(n)
    over = [c.code for c in table if c.c3 > bound]
    attaining = {c.code for c in table if c.c3 == bound}
    regular = {c.code for c in table if is_regular_or_almost(c.t)}
    mismatch = sorted(attaining ^ regular)
    return _record(n, over + mismatch, value=bound, witnesses=sorted(attaining),
                   witness_count=len(attaining), info={"regular_or_almost": len(regular)})


def _maxsing(n: int) -> NRecord:
    if n < 2:
        return NRecord(n, VACUOUS)
    value, wit = singular_maximizers(n)
    target = moon_bound(n - 1)
    bad = [] if value >= target else [encode(t).text for t in wit]
    return _record(n, bad, value=value, info={"max_previous_order": target})


def _shader(n: int) -> NRecord:
    limit = Fraction(comb(n, 3), 4)
    bad = [c.code for c in class_table(n) if c.det == 0 and c.c3 > limit]
    singular_max = max((c.c3 for c in class_table(n) if c.det == 0), default=None)
    return _record(n, bad, value=singular_max, info={"threshold": str(limit)})


def _singular_extreme(n: int) -> NRecord:
    if n < 3:
        return NRecord(n, VACUOUS)
    value, wit = singular_maximizers(n)
    total = comb(n, 3)
    if n % 2 == 0:
        ok = 4 * value == total
        info = {"expected": total // 4}
    else:
        lo, hi = odd_singular_lower_bound(n), total // 4
        ok = lo <= value <= hi
        info = {"lower": lo, "upper": hi}
    codes = [encode(t).text for t in wit]
    return NRecord(n, PASS if ok else FAIL, value=value, witnesses=codes[:WITNESS_CAP],
                   witness_count=len(codes), counterexamples=[] if ok else codes, info=info)


def _tse(n: int) -> NRecord:
    if n < 2:
        return NRecord(n, VACUOUS)
    value, wit = singular_maximizers(n)
    bad = []
    trivial = 0
    for t in wit:
        i = extends_regular(t)
        ii = sink_or_source_over_regular(t)
        iii = any(len(comp) == 1 for comp in scc(t).components)
        try:
            cls = classify_singular_maximizer(t, value)
            consistent = cls.trivial == iii
        except ClassificationError:
            consistent = False
        if not (i == ii == iii and consistent):
            bad.append(encode(t).text)
        trivial += i
    return _record(n, bad, value=value, witness_count=len(wit),
                   witnesses=[encode(t).text for t in wit][:WITNESS_CAP],
                   info={"trivial": trivial, "nontrivial": len(wit) - trivial})


def _nonstrong_bound(n: int) -> NRecord:
    if n < 6:
        return NRecord(n, VACUOUS)
    stmt = comb(n - 2, 3) + 1
    proof = Fraction(comb(n - 2, 3), 4) + 1
    qual = [c for c in class_table(n) if len(c.scc) > 1 and min(c.scc.sizes) >= 3]
    bad_stmt = [c.code for c in qual if c.c3 > stmt]
    bad_proof = [c.code for c in qual if c.c3 > proof]
    top = max((c.c3 for c in qual), default=None)
    info = {
        "qualifying_classes": len(qual),
        "statement_bound": stmt,
        "statement_reading": FAIL if bad_stmt else PASS,
        "proof_bound": str(proof),
        "proof_reading": FAIL if bad_proof else PASS,
        "proof_counterexamples": bad_proof[:WITNESS_CAP],
    }
    return _record(n, bad_stmt, value=top, info=info)


def _nontrivial_iff_strong(n: int) -> NRecord:
    if n < 7:
        return NRecord(n, VACUOUS)
    value, wit = singular_maximizers(n)
    bad = [encode(t).text for t in wit if (not extends_regular(t)) != is_strong(t)]
    strong = [encode(t).text for t in wit if is_strong(t)]
    return _record(n, bad, value=value, witnesses=strong, witness_count=len(strong),
                   info={"maximizers": len(wit)})


def _determinant(n: int) -> NRecord:
    bad = [c.code for c in class_table(n) if det_via_scc(c.t, c.scc) != c.det]
    return _record(n, bad, value=len(class_table(n)))


def _component_dets(c) -> list[int]:
    return [determinant(relabel_partial(c.t, comp)) for comp in c.scc.components]


def _sing_iff_scc(n: int) -> NRecord:
    bad = [c.code for c in class_table(n) if (c.det == 0) != (0 in _component_dets(c))]
    return _record(n, bad, value=len(class_table(n)))


def _scc_3verts(n: int) -> NRecord:
    bad = []
    for c in class_table(n):
        sizes = c.scc.sizes
        if 2 in sizes or (c.det != 0 and min(sizes) < 3):
            bad.append(c.code)
    return _record(n, bad, value=len(class_table(n)))


def _upset(n: int) -> NRecord:
    if n < 3:
        return NRecord(n, VACUOUS)
    table = class_table(n)
    strong = [c for c in table if len(c.scc) == 1]
    below = [c.code for c in strong if c.c3 < n - 2]
    characterized = {c.code for c in strong if c.c3 == n - 2}
    recognized = {c.code for c in table if is_upset(c.t)}
    truth = upset_closure(n)
    mismatch = sorted((characterized ^ truth) | (recognized ^ truth))
    return _record(n, below + mismatch, value=len(truth), witnesses=sorted(truth),
                   witness_count=len(truth))


def _nonsingular_extreme(n: int) -> NRecord:
    if n < 3:
        return NRecord(n, VACUOUS)
    k = n // 3
    bound = n - 2 * k
    value, wit = nonsingular_minimizers(n)
    bad = []
    if value != bound:
        bad += [c.code for c in wit]
    for c in class_table(n):
        lhs = c.det != 0 and c.c3 == bound
        rhs = len(c.scc) == k and all(
            len(comp) >= 3 and is_upset(relabel_partial(c.t, comp)) for comp in c.scc.components
        )
        if lhs != rhs:
            bad.append(c.code)
    return _record(n, bad, value=value, witnesses=[c.code for c in wit], witness_count=len(wit),
                   info={"bound": bound})


def _det_mod3(n: int) -> NRecord:
    if n < 3:
        return NRecord(n, VACUOUS)
    expected = -1 if n % 3 == 1 else 1
    value, wit = nonsingular_minimizers(n)
    bad = [c.code for c in wit if c.det != expected]
    return _record(n, bad, value=expected, witnesses=[c.code for c in wit], witness_count=len(wit))


def _unimodular(n: int) -> NRecord:
    if n < 3:
        return NRecord(n, VACUOUS)
    value, wit = nonsingular_minimizers(n)
    spectrum: set[int] = set()
    bad = []
    for c in wit:
        s = subdeterminant_spectrum(c.t)
        spectrum |= s
        if not s <= {-1, 0, 1}:
            bad.append(c.code)
    return _record(n, bad, value=sorted(spectrum), witnesses=[c.code for c in wit],
                   witness_count=len(wit))


CLAIMS: dict[str, Callable[[int], NRecord]] = {
    "prop1-scores": _prop1,
    "lemma-reversal": _reversal,
    "prop-max3cycles": _max3cycles,
    "lemma-maxsing": _maxsing,
    "shader": _shader,
    "prop-singularextreme": _singular_extreme,
    "thm-TSE": _tse,
    "lemma-nonstrong-bound": _nonstrong_bound,
    "prop-nontrivial-iff-strong": _nontrivial_iff_strong,
    "prop-determinant": _determinant,
    "cor-sing-iff-scc": _sing_iff_scc,
    "cor-scc-3verts": _scc_3verts,
    "thm-upset": _upset,
    "thm-nonsingularextreme": _nonsingular_extreme,
    "cor-det-mod3": _det_mod3,
    "cor-subtournament-unimodular": _unimodular,
}


def verify(claim_id: str, n_range: Iterable[int] | tuple[int, int]) -> VerificationReport:
    if claim_id not in CLAIMS:
        raise UnknownClaim(f"unknown claim {claim_id!r}; known: {', '.join(CLAIMS)}")
    if isinstance(n_range, tuple) and len(n_range) == 2:
        ns = list(range(n_range[0], n_range[1] + 1))
    else:
        ns = list(n_range)
    if not ns:
        raise OrderTooLarge("empty order range")
    if min(ns) < 1 or max(ns) > ENUM_MAX_ORDER:
        raise OrderTooLarge(f"orders must lie in 1..{ENUM_MAX_ORDER}, got {min(ns)}..{max(ns)}")
    fn = CLAIMS[claim_id]
    start = time.perf_counter()
    records = []
    for n in ns:
        t0 = time.perf_counter()
        rec = fn(n)
        rec.elapsed = time.perf_counter() - t0
        records.append(rec)
    bad = [code for r in records for code in r.counterexamples]
    status = FAIL if any(r.status == FAIL for r in records) else PASS
    return VerificationReport(claim_id, (min(ns), max(ns)), status, bad,
                              time.perf_counter() - start, records)


def verify_all(n_range: tuple[int, int], claims: Iterable[str] | None = None) -> list[VerificationReport]:
    return [verify(c, n_range) for c in (claims or CLAIMS)]

