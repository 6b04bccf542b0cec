"""Named tournament matrices with their known invariants.

F1..F4 are the upset tournaments of orders 3, 4, 5 that make up the strong
components of nonsingular C3 minimizers.  P7A..P7C are the strongly
connected order-7 tournaments printed as the singular C3 maximizers; P7A as
printed has determinant 1, so ``det`` records the computed value and
``printed_det`` the published one.  Rows are kept in printed order,
vertices 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Tournament, from_matrix_text


@dataclass(frozen=True)
class Fixture:
    name: str
    text: str
    c3: int
    det: int
    scores: tuple[int, ...]
    printed_det: int | None = None

    def __post_init__(self):
        if self.printed_det is None:
            object.__setattr__(self, "printed_det", self.det)

    @property
    def tournament(self) -> Tournament:
        return from_matrix_text(self.text)


F1 = Fixture("F1", "010\n001\n100", 1, 1, (1, 1, 1))
F2 = Fixture("F2", "0100\n0010\n1001\n1100", 2, -1, (1, 1, 2, 2))
F3 = Fixture("F3", "01000\n00100\n10010\n11001\n11100", 3, 1, (1, 1, 2, 3, 3))
F4 = Fixture("F4", "01000\n00010\n11000\n10101\n11100", 3, 1, (1, 1, 2, 3, 3))

_P7_SCORES = (1, 2, 2, 3, 4, 4, 5)
P7A = Fixture(
    "P7A",
    "0100000\n0010010\n1001000\n1100100\n1110010\n1011001\n1111100",
    8, 1, _P7_SCORES, printed_det=0,
)
P7B = Fixture(
    "P7B",
    "0010000\n1000010\n0101000\n1100100\n1110010\n1011001\n1111100",
    8, 0, _P7_SCORES,
)
P7C = Fixture(
    "P7C",
    "0010000\n1001000\n0100010\n1010100\n1110001\n1101100\n1111010",
    8, 0, _P7_SCORES,
)

ALL = (F1, F2, F3, F4, P7A, P7B, P7C)
UPSETS = (F1, F2, F3, F4)
SEVEN_MAXIMIZERS = (P7A, P7B, P7C)


def by_name(name: str) -> Fixture:
    for f in ALL:
        if f.name.lower() == name.lower():
            return f
    raise KeyError(name)
