"""Command-line front end.

Exit codes: 0 success, 1 a verified claim failed, 2 usage or parse error.
Data goes to stdout; counts and timings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass
from typing import Iterator, Sequence

from . import fixtures
from .core import Tournament, decode, encode, from_matrix_text, parse_code, score_vector
from .cycles import c3_direct, c3_from_scores
from .enumeration import ENUM_MAX_ORDER, enumerate_iso_classes
from .errors import ParseError, TournamentError
from .extremal import Objective, extremal
from .linalg import determinant
from .structure import (
    is_almost_regular,
    is_regular,
    is_strong,
    is_transitive,
    is_upset,
    scc,
)
from .verify import CLAIMS, verify


@dataclass
class AnalysisRecord:
    code: str
    n: int
    scores: list[int]
    sorted_scores: list[int]
    c3_scores: int
    c3_direct: int
    det: int
    singular: bool
    scc_sizes: list[int]
    scc_components: list[list[int]]
    strong: bool
    transitive: bool
    regular: bool
    almost_regular: bool
    upset: bool

    def line(self) -> str:
        flags = [name for name in ("strong", "transitive", "regular", "almost_regular", "upset")
                 if getattr(self, name)]
        return (
            f"{self.code} n={self.n} scores={_ints(self.scores)} sorted={_ints(self.sorted_scores)} "
            f"c3={self.c3_direct} det={self.det} singular={'yes' if self.singular else 'no'} "
            f"scc={_ints(self.scc_sizes)} flags={','.join(flags) or '-'}"
        )


def _ints(xs: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def analyze(t: Tournament) -> AnalysisRecord:
    s = score_vector(t)
    d = scc(t)
    det = determinant(t)
    return AnalysisRecord(
        code=encode(t).text,
        n=t.n,
        scores=list(s.raw),
        sorted_scores=list(s.sorted),
        c3_scores=c3_from_scores(s),
        c3_direct=c3_direct(t),
        det=det,
        singular=det == 0,
        scc_sizes=list(d.sizes),
        scc_components=[list(c) for c in d.components],
        strong=len(d) == 1,
        transitive=is_transitive(t),
        regular=is_regular(t),
        almost_regular=is_almost_regular(t),
        upset=t.n >= 3 and is_upset(t),
    )


class InputError(Exception):
    def __init__(self, source: str, err: ParseError, line: int | None):
        self.source = source
        self.err = err
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        if err.offset is not None:
            where += f":{err.offset}"
        super().__init__(f"{where}: {err.message}")


def _parse_blocks(text: str, source: str, fmt: str) -> Iterator[Tournament]:
    """Yield tournaments from ``text``: one code per line, or matrices separated by blank lines."""
    lines = text.splitlines()
    if fmt == "auto":
        first = next((ln.strip() for ln in lines if ln.strip()), "")
        fmt = "code" if first.startswith("T") else "matrix"
    if fmt == "code":
        for lineno, ln in enumerate(lines, 1):
            if not ln.strip() or ln.lstrip().startswith("#"):
                continue
            try:
                yield decode(parse_code(ln))
            except ParseError as e:
                raise InputError(source, e, lineno) from e
        return
    block: list[str] = []
    start = 1
    for lineno, ln in enumerate(lines + [""], 1):
        if ln.strip():
            if not block:
                start = lineno
            block.append(ln)
            continue
        if block:
            try:
                yield from_matrix_text("\n".join(block))
            except ParseError as e:
                line = start + e.line - 1 if e.line is not None else start
                raise InputError(source, e, line) from e
            block = []


def _read_inputs(args) -> Iterator[Tournament]:
    if args.file:
        for path in args.file:
            if path == "-":
                yield from _parse_blocks(sys.stdin.read(), "<stdin>", args.format)
            else:
                with open(path, encoding="utf-8") as fh:
                    yield from _parse_blocks(fh.read(), path, args.format)
    for i, item in enumerate(args.inputs or []):
        yield from _parse_blocks(item.replace("/", "\n"), f"<arg {i + 1}>", args.format)
    if not args.file and not args.inputs:
        yield from _parse_blocks(sys.stdin.read(), "<stdin>", args.format)


def _emit(obj, as_json: bool, text: str) -> None:
    print(json.dumps(obj) if as_json else text)


def cmd_analyze(args) -> int:
    for t in _read_inputs(args):
        rec = analyze(t)
        _emit(asdict(rec), args.json, rec.line())
    return 0


def cmd_convert(args) -> int:
    for t in _read_inputs(args):
        if args.to == "code":
            print(encode(t).text)
        else:
            print(t.to_text(" " if args.spaced else ""))
            print()
    return 0


@dataclass(frozen=True)
class ClassFilter:
    """Isomorphism-invariant predicate for ``enumerate``; picklable for worker processes."""

    singular: bool = False
    nonsingular: bool = False
    strong: bool = False
    scores: tuple[int, ...] | None = None
    c3: int | None = None

    @property
    def active(self) -> bool:
        return any((self.singular, self.nonsingular, self.strong,
                    self.scores is not None, self.c3 is not None))

    def __call__(self, t: Tournament) -> bool:
        if self.scores is not None and score_vector(t).sorted != self.scores:
            return False
        if self.c3 is not None and c3_direct(t) != self.c3:
            return False
        if self.strong and not is_strong(t):
            return False
        if self.singular or self.nonsingular:
            return (determinant(t) == 0) == self.singular
        return True


def _score_filter(spec: str) -> tuple[int, ...]:
    return tuple(sorted(int(x) for x in spec.replace(" ", "").split(",") if x))


def cmd_enumerate(args) -> int:
    n = args.n
    if not 1 <= n <= ENUM_MAX_ORDER:
        print(f"error: n must be in 1..{ENUM_MAX_ORDER}", file=sys.stderr)
        return 2
    want = _score_filter(args.score) if args.score else None
    flt = ClassFilter(args.singular, args.nonsingular, args.strong, want, args.c3)
    where = flt if flt.active else None
    start = time.perf_counter()
    count = 0
    for t in enumerate_iso_classes(n, where=where, threads=args.threads):
        print(encode(t).text)
        count += 1
    print(f"# order {n}: {count} classes ({time.perf_counter() - start:.2f}s)", file=sys.stderr)
    return 0


def cmd_extremal(args) -> int:
    if not 3 <= args.n <= ENUM_MAX_ORDER:
        print(f"error: n must be in 3..{ENUM_MAX_ORDER}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    res = extremal(args.n, args.objective, threads=args.threads)
    rec = res.as_record()
    text = [f"n={res.n} objective={res.objective.value} value={res.value} "
            f"witness_count={res.witness_count} bound_ok={res.bound_ok}"]
    text += [f"  {w}" for w in res.witnesses]
    _emit(rec, args.json, "\n".join(text))
    print(f"# elapsed {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 0


def _parse_range(spec: str) -> tuple[int, int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return int(lo), int(hi)
    return int(spec), int(spec)


def cmd_verify(args) -> int:
    claims = list(CLAIMS) if args.claims == "all" else args.claims.split(",")
    for c in claims:
        if c not in CLAIMS:
            print(f"error: unknown claim {c!r}", file=sys.stderr)
            return 2
    try:
        lo, hi = _parse_range(args.range)
    except ValueError:
        print(f"error: bad range {args.range!r}, expected LO..HI", file=sys.stderr)
        return 2
    if lo < 1 or hi > ENUM_MAX_ORDER or lo > hi:
        print(f"error: range must lie within 1..{ENUM_MAX_ORDER}", file=sys.stderr)
        return 2
    ok = True
    for claim in claims:
        rep = verify(claim, (lo, hi))
        ok &= rep.passed
        if args.json:
            for rec in rep.as_records(timings=args.timings):
                print(json.dumps(rec))
        else:
            print(f"{rep.status.upper():4} {claim} n={lo}..{hi}")
            for r in rep.records:
                extra = ""
                if r.info:
                    extra = " " + " ".join(f"{k}={v}" for k, v in r.info.items()
                                           if not isinstance(v, list) or v)
                print(f"     n={r.n} {r.status} value={r.value} witnesses={r.witness_count}{extra}")
                for code in r.counterexamples[:10]:
                    print(f"       counterexample {code}")
        print(f"# {claim}: {rep.status} in {rep.elapsed:.2f}s", file=sys.stderr)
    return 0 if ok else 1


def cmd_fixtures(args) -> int:
    for f in fixtures.ALL:
        t = f.tournament
        rec = {
            "name": f.name,
            "code": encode(t).text,
            "matrix": t.to_text().splitlines(),
            "scores": list(score_vector(t).sorted),
            "c3": c3_direct(t),
            "det": determinant(t),
            "printed_det": f.printed_det,
        }
        text = (f"{f.name} {rec['code']} scores={_ints(rec['scores'])} c3={rec['c3']} "
                f"det={rec['det']} printed_det={f.printed_det}")
        _emit(rec, args.json, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tourneylab", description="Tournament matrix analysis")
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: $TOURNEYLAB_THREADS or CPU count)")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_inputs(sp):
        sp.add_argument("inputs", nargs="*", help="codes like T3:5, or matrix rows joined by '/'")
        sp.add_argument("-f", "--file", action="append", help="input file ('-' for stdin)")
        sp.add_argument("--format", choices=("auto", "matrix", "code"), default="auto")

    sp = sub.add_parser("analyze", help="analyze tournaments")
    add_inputs(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("convert", help="convert between matrix text and codes")
    add_inputs(sp)
    sp.add_argument("--to", choices=("matrix", "code"), required=True)
    sp.add_argument("--spaced", action="store_true", help="space-separate matrix entries")
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("enumerate", help="one canonical code per isomorphism class")
    sp.add_argument("n", type=int)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--singular", action="store_true")
    group.add_argument("--nonsingular", action="store_true")
    sp.add_argument("--strong", action="store_true")
    sp.add_argument("--score", help="sorted score vector, comma separated")
    sp.add_argument("--c3", type=int, help="keep classes with exactly this many 3-cycles")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("extremal", help="extremal C3 over singular/nonsingular classes")
    sp.add_argument("n", type=int)
    sp.add_argument("objective", choices=[o.value for o in Objective])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_extremal)

    sp = sub.add_parser("verify", help="run claim verifiers")
    sp.add_argument("claims", help="'all' or comma-separated claim ids: " + ", ".join(CLAIMS))
    sp.add_argument("range", help="order range LO..HI")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timings", action="store_true", help="include elapsed_ms in JSON records")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("fixtures", help="print the named fixture matrices")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_fixtures)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is None:
        env = os.environ.get("TOURNEYLAB_THREADS")
        args.threads = int(env) if env else None
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except TournamentError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
