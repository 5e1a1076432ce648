"""Golden copy of the reference counts for dimensions 2 and 3, sizes 1..6.

Rows: "u" indecomposable, "w01" zero-one, "w" all matrices.  These exact
values double as OEIS cross-references: for d = 2 the three rows are
A010796, A001499 and A000681; for d = 3 they are A112578, A112579 and
A112580.
"""

from __future__ import annotations

ROW_KINDS = ("u", "w01", "w")
DIMENSIONS = (2, 3)
SIZES = (1, 2, 3, 4, 5, 6)

GOLDEN_COUNTS: dict[tuple[str, int, int], int] = {}


def _row(kind: str, d: int, values: list[int]) -> None:
    for n, value in zip(SIZES, values):
        GOLDEN_COUNTS[(kind, d, n)] = value


_row("u", 2, [1, 1, 6, 72, 1440, 43200])
_row("w01", 2, [0, 1, 6, 90, 2040, 67950])
_row("w", 2, [1, 3, 21, 282, 6210, 202410])
_row("u", 3, [1, 8, 900, 359424, 370828800, 820150272000])
_row("w01", 3, [0, 8, 900, 366336, 378028800, 833156928000])
_row("w", 3, [1, 12, 1152, 431424, 427723200, 920031955200])

OEIS_IDS = {
    ("u", 2): "A010796",
    ("w01", 2): "A001499",
    ("w", 2): "A000681",
    ("u", 3): "A112578",
    ("w01", 3): "A112579",
    ("w", 3): "A112580",
}
