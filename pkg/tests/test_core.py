import random

import pytest
from hypothesis import given, settings

from strategies import relabeled, tournaments
from tourneylab import fixtures
from tourneylab.core import (
    MAX_ORDER,
    Tournament,
    UpperTriangleCode,
    add_sink,
    add_source,
    all_labeled,
    construct_almost_regular,
    construct_regular,
    construct_transitive,
    construct_upset,
    decode,
    encode,
    from_matrix_text,
    parse_code,
    random_tournament,
    relabel,
    reverse_arc,
    score_vector,
)
from tourneylab.cycles import c3_direct, moon_bound
from tourneylab.enumeration import are_isomorphic
from tourneylab.errors import (
    BadChar,
    BadHex,
    BadLength,
    EvenOrder,
    NoSuchArc,
    NonSquare,
    NotTournament,
    OddOrder,
    OrderOutOfRange,
    SameVertex,
)
from tourneylab.linalg import determinant, is_singular
from tourneylab.structure import is_strong


class TestMatrixText:
    def test_f1(self):
        t = from_matrix_text("010\n001\n100")
        assert t.rows == (0b010, 0b100, 0b001)
        assert t == fixtures.F1.tournament

    def test_whitespace_separated(self):
        assert from_matrix_text("0 1 0\n0 0 1\n1 0 0\n") == fixtures.F1.tournament

    def test_single_vertex(self):
        t = from_matrix_text("0")
        assert t.n == 1 and t.rows == (0,)

    def test_nonzero_diagonal(self):
        with pytest.raises(NotTournament):
            from_matrix_text("01\n01")

    def test_both_directions(self):
        with pytest.raises(NotTournament):
            from_matrix_text("011\n101\n000")

    def test_neither_direction(self):
        with pytest.raises(NotTournament):
            from_matrix_text("00\n00")

    def test_nonsquare(self):
        with pytest.raises(NonSquare) as exc:
            from_matrix_text("010\n00\n100")
        assert exc.value.line == 2

    def test_bad_char_position(self):
        with pytest.raises(BadChar) as exc:
            from_matrix_text("010\n0x1\n100")
        assert (exc.value.line, exc.value.offset) == (2, 2)

    def test_round_trip(self):
        for f in fixtures.ALL:
            t = f.tournament
            assert from_matrix_text(t.to_text()) == t
            assert from_matrix_text(t.to_text(" ")) == t


@pytest.mark.parametrize(
    "fixture, expected",
    [(fixtures.F2, (1, 1, 2, 2)), (fixtures.F3, (1, 1, 2, 3, 3)), (fixtures.F1, (1, 1, 1))],
)
def test_score_vector_fixtures(fixture, expected):
    assert score_vector(fixture.tournament).sorted == expected


def test_score_vector_transitive():
    s = score_vector(construct_transitive(5))
    assert s.sorted == (0, 1, 2, 3, 4)
    assert s.raw == (0, 1, 2, 3, 4)


def test_score_sum_exhaustive():
    for n in range(1, 7):
        for t in all_labeled(n):
            s = score_vector(t)
            assert sum(s.raw) == n * (n - 1) // 2
            assert s.sorted == tuple(sorted(s.raw))
            assert all(0 <= x <= n - 1 for x in s.raw)


@given(tournaments(1, MAX_ORDER))
@settings(max_examples=300)
def test_score_sum_random(t):
    assert sum(score_vector(t).raw) == t.n * (t.n - 1) // 2


class TestConstructors:
    def test_transitive(self):
        assert score_vector(construct_transitive(3)).sorted == (0, 1, 2)
        assert c3_direct(construct_transitive(3)) == 0
        assert construct_transitive(1).rows == (0,)
        assert determinant(construct_transitive(6)) == 0
        with pytest.raises(OrderOutOfRange):
            construct_transitive(33)
        with pytest.raises(OrderOutOfRange):
            construct_transitive(0)

    def test_upset_small(self):
        assert are_isomorphic(construct_upset(3), fixtures.F1.tournament)
        assert are_isomorphic(construct_upset(4), fixtures.F2.tournament)
        assert c3_direct(construct_upset(7)) == 5
        with pytest.raises(OrderOutOfRange):
            construct_upset(2)

    @pytest.mark.parametrize("n", range(3, MAX_ORDER + 1))
    def test_upset_all_orders(self, n):
        t = construct_upset(n)
        t.validate()
        assert is_strong(t)
        assert c3_direct(t) == n - 2
        assert score_vector(t).sorted == tuple(sorted([1, *range(1, n - 1), n - 2]))

    def test_regular(self):
        assert construct_regular(3) == fixtures.F1.tournament
        assert c3_direct(construct_regular(5)) == 5
        assert c3_direct(construct_regular(7)) == 14
        with pytest.raises(EvenOrder):
            construct_regular(4)

    def test_almost_regular(self):
        t = construct_almost_regular(4)
        assert score_vector(t).sorted == (1, 1, 2, 2)
        assert c3_direct(t) == 2
        assert c3_direct(construct_almost_regular(6)) == 8
        t2 = construct_almost_regular(2)
        assert t2.rows == (0b10, 0) and c3_direct(t2) == 0
        with pytest.raises(OddOrder):
            construct_almost_regular(5)

    @pytest.mark.parametrize("n", range(1, MAX_ORDER + 1))
    def test_moon_extremal_constructions(self, n):
        t = construct_regular(n) if n % 2 else construct_almost_regular(n)
        t.validate()
        assert c3_direct(t) == moon_bound(n)
        half = n // 2
        if n % 2:
            assert set(score_vector(t).raw) == {(n - 1) // 2}
        else:
            assert score_vector(t).sorted == (half - 1,) * half + (half,) * half


class TestSinkSource:
    def test_sink_on_regular(self):
        t = add_sink(construct_regular(5))
        assert t.n == 6
        assert c3_direct(t) == 5
        assert is_singular(t)
        assert t.rows[5] == 0

    def test_source_on_f1(self):
        assert score_vector(add_source(fixtures.F1.tournament)).sorted == (1, 1, 1, 3)

    def test_sink_on_single(self):
        assert are_isomorphic(add_sink(construct_transitive(1)), construct_transitive(2))

    def test_order_cap(self):
        with pytest.raises(OrderOutOfRange):
            add_sink(construct_transitive(32))
        with pytest.raises(OrderOutOfRange):
            add_source(construct_transitive(32))

    @given(tournaments(1, 12))
    def test_preserves_c3_and_singular(self, t):
        for ext in (add_sink(t), add_source(t)):
            ext.validate()
            assert c3_direct(ext) == c3_direct(t)
            assert determinant(ext) == 0


class TestReverseArc:
    def test_creates_cycle(self):
        t = reverse_arc(construct_transitive(3), 2, 0)
        assert are_isomorphic(t, fixtures.F1.tournament)

    def test_involution(self):
        t = construct_transitive(5)
        assert reverse_arc(reverse_arc(t, 4, 1), 1, 4) == t

    def test_f1_to_transitive(self):
        t = reverse_arc(fixtures.F1.tournament, 0, 1)
        # brute-force the score multiset from the matrix entries
        scores = sorted(sum(row) for row in t.matrix())
        assert scores == [0, 1, 2]
        assert are_isomorphic(t, construct_transitive(3))

    def test_errors(self):
        t = fixtures.F1.tournament
        with pytest.raises(NoSuchArc):
            reverse_arc(t, 1, 0)
        with pytest.raises(SameVertex):
            reverse_arc(t, 1, 1)


class TestCodes:
    def test_f1_golden(self):
        # pairs (0,1),(0,2),(1,2): 0->1 yes, 0->2 no (2 beats 0), 1->2 yes; bit k weighs 2^k
        code = encode(fixtures.F1.tournament)
        assert code.bits == (1, 0, 1)
        assert code.text == "T3:5"
        assert code.bitstring == "101"

    def test_golden_more(self):
        assert encode(construct_transitive(4)).text == "T4:00"
        assert encode(construct_transitive(1)).text == "T1:0"
        # F2: pairs 01 02 03 12 13 23 -> 1 0 0 1 0 1
        assert encode(fixtures.F2.tournament).text == "T4:29"

    def test_t2(self):
        t = decode("T2:1")
        assert t.rows == (0b10, 0)

    def test_round_trip_exhaustive(self):
        for n in range(1, 6):
            seen = set()
            for t in all_labeled(n):
                t.validate()
                code = encode(t)
                assert decode(code) == t
                assert parse_code(code.text) == code
                seen.add(code.text)
            assert len(seen) == 2 ** (n * (n - 1) // 2)

    @given(tournaments(1, MAX_ORDER))
    def test_round_trip_random(self, t):
        assert decode(encode(t).text) == t

    @pytest.mark.parametrize("text, err", [
        ("T3:05", BadLength),
        ("T3:8", BadLength),
        ("T3:g", BadHex),
        ("X3:5", BadHex),
        ("T3:", BadHex),
    ])
    def test_bad_codes(self, text, err):
        with pytest.raises(err):
            parse_code(text)

    def test_hex_case(self):
        assert parse_code("T5:1A0") == parse_code("T5:1a0")

    def test_code_order_is_bit_sequence_order(self):
        a = UpperTriangleCode(3, 0b001)  # bits 1,0,0
        b = UpperTriangleCode(3, 0b110)  # bits 0,1,1
        assert b < a


@given(relabeled(1, 10))
def test_relabel_is_tournament(pair):
    t, perm = pair
    r = relabel(t, perm)
    r.validate()
    assert sorted(score_vector(r).raw) == sorted(score_vector(t).raw)
    for a in range(t.n):
        for b in range(t.n):
            if a != b:
                assert r.beats(a, b) == t.beats(perm[a], perm[b])


def test_random_tournament_valid():
    rng = random.Random(7)
    for _ in range(200):
        random_tournament(rng.randint(1, MAX_ORDER), rng).validate()


def test_validate_rejects_out_of_range_bits():
    with pytest.raises(NotTournament):
        Tournament(2, (0b110, 0b001)).validate()
