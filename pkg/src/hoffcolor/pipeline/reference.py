"""Published reference values the classification is compared against.

Spectra are written as comma-separated ``value^multiplicity`` items where a
value is an integer, ``sqrt2``, ``phi`` (the golden ratio) or a parenthesised
``a+sqrt2`` / ``a-phi`` form.
"""

from __future__ import annotations

from dataclasses import dataclass

# -------------------------------------------------- maximal graphs, two views


@dataclass(frozen=True)
class MaximalRow:
    ids: tuple[str, ...]
    order: int
    chi: int
    class_sizes: tuple[str, ...]  # alternative coloring shapes
    degrees: str
    spectrum: str
    bucket: frozenset[int]


def _ids(lo: int, hi: int) -> tuple[str, ...]:
    return tuple(f"M{i}" for i in range(lo, hi + 1))


MAXIMAL_ROWS: tuple[MaximalRow, ...] = (
    MaximalRow(("M1",), 11, 3, ("3^2,5",), "6^2,4^2,3^4,2^3",
               "4, sqrt2^2, 1^2, 0, -sqrt2^2, -2^3", frozenset({3, 5})),
    MaximalRow(("M2",), 11, 3, ("3^2,5",), "6^2,4^2,3^4,2^3",
               "4, 2, 1^2, 0^3, -2^4", frozenset({3, 5})),
    MaximalRow(("M3",), 13, 3, ("3,5^2",), "6,4^8,2^4",
               "4, 2^2, 1^2, 0^3, -2^5", frozenset({3, 5})),
    MaximalRow(("M4",), 15, 4, ("3^3,6",), "8,7^4,6^6,3^4",
               "6, 3^2, 1^2, 0^3, -2^7", frozenset({3, 6})),
    MaximalRow(("M5",), 16, 5, ("3^4,4",), "12,8^12,4^3",
               "8, 2^5, 0, -2^9", frozenset({3, 4})),
    MaximalRow(("M6",), 18, 5, ("3^4,6",), "9^8,8^6,4^4",
               "8, 4, 2^4, 0^2, -2^10", frozenset({3, 6})),
    MaximalRow(_ids(7, 9), 18, 5, ("3^4,6",), "9^8,8^6,4^4",
               "8, (2+sqrt2)^2, 2^2, (2-sqrt2)^2, 0, -2^10", frozenset({3, 6})),
    MaximalRow(("M10",), 20, 7, ("2^5,5^2",), "14^10,13^2,7^4,6^4",
               "12, 3, 2^4, 1, 0, -2^12", frozenset({2, 5})),
    MaximalRow(_ids(11, 19), 21, 6, ("1,4^5",), "20,9^20",
               "10, (2+phi)^2, 3^2, (3-phi)^2, 0, -2^13", frozenset({1, 4})),
    MaximalRow(("M20",), 21, 7, ("3^7",), "12^21",
               "12, 4, 3^4, 0, -2^14", frozenset({3})),
    MaximalRow(("M21",), 22, 8, ("2^6,5^2", "2^7,8"), "16^14,7^8",
               "14, 2^7, -2^14", frozenset({2, 5, 8})),
    MaximalRow(("M22", "M23"), 22, 7, ("3^6,4",), "18,12^18,6^3",
               "12, 4, 3^4, 0^2, -2^14", frozenset({3, 4})),
    MaximalRow(("M24",), 27, 9, ("3^9",), "16^27",
               "16, 4^6, -2^20", frozenset({3})),
    MaximalRow(("M25",), 28, 9, ("3^8,4",), "24,16^24,8^3",
               "16, 4^6, 0, -2^20", frozenset({3, 4})),
    MaximalRow(_ids(26, 29), 29, 8, ("1,4^7",), "28,13^28",
               "14, 4^7, -2^21", frozenset({1, 4})),
)

# -------------------------------------------------- class-size buckets

BUCKET_COUNTS: tuple[tuple[frozenset[int], int, int], ...] = (
    (frozenset({3}), 17, 2),
    (frozenset({4}), 70, 0),
    (frozenset({1, 4}), 87, 13),
    (frozenset({3, 4}), 35, 4),
    (frozenset({2, 5}), 17, 1),
    (frozenset({2, 5, 8}), 6, 1),
    (frozenset({3, 5}), 3, 3),
    (frozenset({3, 6}), 10, 5),
)
TOTAL_GRAPHS = 245
TOTAL_MAXIMAL = 29


def bucket_label(b: frozenset[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(b)) + "}"


# -------------------------------------------------- layer diagram of ratio-bound-3 graphs
# Rows are vertex count / 3.  Lines are (upper, lower); full lines remove a
# Hoffman color class, dotted ones a Hoffman coclique that is not one.

LATTICE_ROWS: dict[int, tuple[str, ...]] = {
    9: ("184",),
    8: ("183",),
    7: ("182", "181"),
    6: ("179", "180", "178", "177"),
    5: ("174", "176", "173", "172", "171", "175", "L(K6)"),
    4: ("166", "170", "167", "169", "168", "L(CP3)", "L(K2,6)"),
    3: ("L(K3,3)", "164", "L(K3xK2)", "165"),
    2: ("C6", "2K3"),
    1: ("3K1",),
    0: ("empty",),
}

LATTICE_FULL: tuple[tuple[str, str], ...] = (
    ("184", "183"), ("183", "182"),
    ("182", "179"), ("182", "180"), ("182", "178"), ("181", "178"), ("181", "177"),
    ("179", "174"), ("180", "174"), ("180", "176"), ("180", "173"), ("178", "173"),
    ("177", "173"), ("177", "172"), ("177", "171"),
    ("174", "166"), ("174", "170"), ("176", "166"), ("176", "170"), ("176", "167"),
    ("173", "170"), ("173", "167"), ("172", "167"), ("171", "167"), ("171", "L(CP3)"),
    ("L(K6)", "L(CP3)"),
    ("166", "L(K3,3)"), ("166", "164"), ("170", "164"), ("167", "164"), ("167", "L(K3xK2)"),
    ("L(CP3)", "L(K3xK2)"),
    ("L(K3,3)", "C6"), ("164", "C6"), ("L(K3xK2)", "C6"),
    ("C6", "3K1"), ("3K1", "empty"),
)

LATTICE_DOTTED: tuple[tuple[str, str], ...] = (
    ("178", "175"), ("173", "169"), ("173", "168"), ("171", "168"),
    ("175", "168"), ("175", "L(K2,6)"),
    ("167", "165"), ("169", "165"), ("168", "165"),
    ("L(K3xK2)", "2K3"), ("165", "2K3"),
)

# lines whose hat-switch gives the four maximal irregular graphs of the switching class
TYPEA_MAXIMAL_LINES: dict[str, tuple[str, str]] = {
    "M5": ("L(K6)", "L(CP3)"),
    "M22": ("181", "178"),
    "M23": ("181", "177"),
    "M25": ("184", "183"),
}

NOT_HOFFMAN_COLORABLE_NODES = ("165", "168", "169", "175", "L(K2,6)")

# -------------------------------------------------- small order

SMALL_ORDER_MULTISET = (6, 11, 11, 13, 13, 15, 17, 20, 20, 22)

# -------------------------------------------------- maximal E7-representable graphs

E7_MAXIMAL = {"total": 39, "schlaefli": 1, "cones": 27, "other": 11}
