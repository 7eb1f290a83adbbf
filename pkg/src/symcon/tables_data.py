"""Golden fixtures for the four decomposition tables.

T1/T2: full multiplicity columns for the conjugation and sign-twisted
conjugation actions, indexed by partitions of n in reverse-lex order,
for 1 <= n <= 10 (T1 additionally records the leading row, the trivial
multiplicity, for 11 <= n <= 16).  T3/T4: the even/odd coset blocks for
2 <= n <= 8, as (partition, multiplicity) pairs; absent pairs mean 0.

Transcribed once; a weighted checksum (sum of mult * f^nu = n!, or n!/2
per coset block) guards the transcription, see tests.
"""

from __future__ import annotations

# T1[n] = multiplicities in revlex partition order (trivial first, sign last).
T1: dict[int, list[int]] = {
    1: [1],
    2: [2, 0],
    3: [3, 1, 1],
    4: [5, 2, 3, 2, 1],
    5: [7, 5, 6, 5, 4, 3, 1],
    6: [11, 8, 15, 10, 4, 13, 10, 8, 5, 4, 1],
    7: [15, 15, 26, 19, 18, 36, 21, 18, 22, 28, 13, 12, 10, 5, 1],
    8: [22, 23, 49, 33, 39, 78, 44, 25, 70, 67, 81, 34, 35, 53, 58, 52, 17,
        19, 19, 17, 5, 2],
    9: [30, 37, 79, 57, 87, 154, 82, 64, 188, 152, 201, 75, 95, 168, 207,
        203, 169, 52, 41, 144, 104, 81, 130, 84, 23, 34, 39, 21, 7, 2],
    10: [42, 55, 131, 91, 157, 284, 148, 165, 424, 327, 427, 158, 52, 345,
         497, 614, 546, 447, 124, 284, 283, 200, 721, 482, 305, 492, 311,
         72, 194, 208, 387, 177, 241, 258, 128, 33, 46, 65, 63, 25, 9, 2],
    # Partial columns: only the trivial row is recorded beyond n = 10.
    11: [56],
    12: [77],
    13: [101],
    14: [135],
    15: [176],
    16: [231],
}

T2: dict[int, list[int]] = {
    1: [1],
    2: [1, 1],
    3: [2, 1, 2],
    4: [2, 3, 1, 3, 2],
    5: [3, 4, 4, 7, 4, 4, 3],
    6: [4, 6, 8, 12, 6, 13, 12, 6, 8, 6, 4],
    7: [5, 9, 14, 19, 14, 33, 23, 19, 19, 33, 19, 14, 14, 9, 5],
    8: [6, 13, 23, 29, 29, 65, 42, 13, 66, 53, 89, 42, 37, 53, 66, 65, 29,
        13, 29, 23, 13, 6],
    9: [8, 17, 36, 44, 55, 114, 72, 39, 160, 121, 196, 83, 82, 153, 208,
        208, 196, 72, 43, 153, 121, 82, 160, 114, 44, 39, 55, 36, 17, 8],
    10: [10, 23, 53, 63, 92, 193, 115, 93, 329, 236, 382, 156, 41, 280,
         433, 566, 525, 473, 156, 237, 289, 196, 721, 525, 289, 566, 382,
         115, 196, 237, 433, 236, 280, 329, 193, 63, 41, 93, 92, 53, 23,
         10],
}

# T3[n] = (even-coset block, odd-coset block); pairs are (partition, mult).
T3: dict[int, tuple[list, list]] = {
    2: (
        [((2,), 1)],
        [((2,), 1)],
    ),
    3: (
        [((3,), 2), ((1, 1, 1), 1)],
        [((3,), 1), ((2, 1), 1)],
    ),
    4: (
        [((4,), 3), ((3, 1), 1), ((2, 2), 1), ((2, 1, 1), 1), ((1, 1, 1, 1), 1)],
        [((4,), 2), ((3, 1), 1), ((2, 2), 2), ((2, 1, 1), 1)],
    ),
    5: (
        [((5,), 4), ((4, 1), 2), ((3, 2), 3), ((3, 1, 1), 3), ((2, 2, 1), 2),
         ((2, 1, 1, 1), 1), ((1, 1, 1, 1, 1), 1)],
        [((5,), 3), ((4, 1), 3), ((3, 2), 3), ((3, 1, 1), 2), ((2, 2, 1), 2),
         ((2, 1, 1, 1), 2)],
    ),
    6: (
        [((6,), 6), ((5, 1), 4), ((4, 2), 7), ((4, 1, 1), 5), ((3, 3), 2),
         ((3, 2, 1), 7), ((3, 1, 1, 1), 5), ((2, 2, 2), 4), ((2, 2, 1, 1), 2),
         ((2, 1, 1, 1, 1), 2), ((1, 1, 1, 1, 1, 1), 1)],
        [((6,), 5), ((5, 1), 4), ((4, 2), 8), ((4, 1, 1), 5), ((3, 3), 2),
         ((3, 2, 1), 6), ((3, 1, 1, 1), 5), ((2, 2, 2), 4), ((2, 2, 1, 1), 3),
         ((2, 1, 1, 1, 1), 2)],
    ),
    7: (
        [((7,), 8), ((6, 1), 7), ((5, 2), 13), ((5, 1, 1), 10), ((4, 3), 9),
         ((4, 2, 1), 18), ((4, 1, 1, 1), 10), ((3, 3, 1), 9), ((3, 2, 2), 11),
         ((3, 2, 1, 1), 14), ((3, 1, 1, 1, 1), 7), ((2, 2, 2, 1), 6),
         ((2, 2, 1, 1, 1), 5), ((2, 1, 1, 1, 1, 1), 2),
         ((1, 1, 1, 1, 1, 1, 1), 1)],
        [((7,), 7), ((6, 1), 8), ((5, 2), 13), ((5, 1, 1), 9), ((4, 3), 9),
         ((4, 2, 1), 18), ((4, 1, 1, 1), 11), ((3, 3, 1), 9), ((3, 2, 2), 11),
         ((3, 2, 1, 1), 14), ((3, 1, 1, 1, 1), 6), ((2, 2, 2, 1), 6),
         ((2, 2, 1, 1, 1), 5), ((2, 1, 1, 1, 1, 1), 3)],
    ),
    8: (
        [((8,), 12), ((7, 1), 11), ((6, 2), 24), ((6, 1, 1), 17), ((5, 3), 20),
         ((5, 2, 1), 39), ((5, 1, 1, 1), 22), ((4, 4), 12), ((4, 3, 1), 35),
         ((4, 2, 2), 34), ((4, 2, 1, 1), 40), ((4, 1, 1, 1, 1), 17),
         ((3, 3, 2), 17), ((3, 3, 1, 1), 27), ((3, 2, 2, 1), 29),
         ((3, 2, 1, 1, 1), 26), ((3, 1, 1, 1, 1, 1), 9), ((2, 2, 2, 2), 9),
         ((2, 2, 2, 1, 1), 10), ((2, 2, 1, 1, 1, 1), 8),
         ((2, 1, 1, 1, 1, 1, 1), 2), ((1, 1, 1, 1, 1, 1, 1, 1), 2)],
        [((8,), 10), ((7, 1), 12), ((6, 2), 25), ((6, 1, 1), 16), ((5, 3), 19),
         ((5, 2, 1), 39), ((5, 1, 1, 1), 22), ((4, 4), 13), ((4, 3, 1), 35),
         ((4, 2, 2), 33), ((4, 2, 1, 1), 41), ((4, 1, 1, 1, 1), 17),
         ((3, 3, 2), 18), ((3, 3, 1, 1), 26), ((3, 2, 2, 1), 29),
         ((3, 2, 1, 1, 1), 26), ((3, 1, 1, 1, 1, 1), 8), ((2, 2, 2, 2), 10),
         ((2, 2, 2, 1, 1), 9), ((2, 2, 1, 1, 1, 1), 9),
         ((2, 1, 1, 1, 1, 1, 1), 3)],
    ),
}

T4: dict[int, tuple[list, list]] = {
    2: (
        [((1, 1), 1)],
        [((2,), 1)],
    ),
    3: (
        [((3,), 1), ((1, 1, 1), 2)],
        [((3,), 1), ((2, 1), 1)],
    ),
    4: (
        [((4,), 1), ((3, 1), 2), ((2, 1, 1), 1), ((1, 1, 1, 1), 2)],
        [((4,), 1), ((3, 1), 1), ((2, 2), 1), ((2, 1, 1), 2)],
    ),
    5: (
        [((5,), 1), ((4, 1), 2), ((3, 2), 2), ((3, 1, 1), 4), ((2, 2, 1), 2),
         ((2, 1, 1, 1), 1), ((1, 1, 1, 1, 1), 3)],
        [((5,), 2), ((4, 1), 2), ((3, 2), 2), ((3, 1, 1), 3), ((2, 2, 1), 2),
         ((2, 1, 1, 1), 3)],
    ),
    6: (
        [((6,), 2), ((5, 1), 3), ((4, 2), 4), ((4, 1, 1), 6), ((3, 3), 2),
         ((3, 2, 1), 7), ((3, 1, 1, 1), 6), ((2, 2, 2), 3), ((2, 2, 1, 1), 4),
         ((2, 1, 1, 1, 1), 2), ((1, 1, 1, 1, 1, 1), 4)],
        [((6,), 2), ((5, 1), 3), ((4, 2), 4), ((4, 1, 1), 6), ((3, 3), 4),
         ((3, 2, 1), 6), ((3, 1, 1, 1), 6), ((2, 2, 2), 3), ((2, 2, 1, 1), 4),
         ((2, 1, 1, 1, 1), 4)],
    ),
    7: (
        [((7,), 2), ((6, 1), 5), ((5, 2), 7), ((5, 1, 1), 9), ((4, 3), 7),
         ((4, 2, 1), 17), ((4, 1, 1, 1), 11), ((3, 3, 1), 9), ((3, 2, 2), 9),
         ((3, 2, 1, 1), 17), ((3, 1, 1, 1, 1), 10), ((2, 2, 2, 1), 7),
         ((2, 2, 1, 1, 1), 7), ((2, 1, 1, 1, 1, 1), 3),
         ((1, 1, 1, 1, 1, 1, 1), 5)],
        [((7,), 3), ((6, 1), 4), ((5, 2), 7), ((5, 1, 1), 10), ((4, 3), 7),
         ((4, 2, 1), 16), ((4, 1, 1, 1), 12), ((3, 3, 1), 10), ((3, 2, 2), 10),
         ((3, 2, 1, 1), 16), ((3, 1, 1, 1, 1), 9), ((2, 2, 2, 1), 7),
         ((2, 2, 1, 1, 1), 7), ((2, 1, 1, 1, 1, 1), 6)],
    ),
    8: (
        [((8,), 3), ((7, 1), 6), ((6, 2), 12), ((6, 1, 1), 15), ((5, 3), 14),
         ((5, 2, 1), 32), ((5, 1, 1, 1), 21), ((4, 4), 6), ((4, 3, 1), 34),
         ((4, 2, 2), 27), ((4, 2, 1, 1), 44), ((4, 1, 1, 1, 1), 21),
         ((3, 3, 2), 18), ((3, 3, 1, 1), 26), ((3, 2, 2, 1), 33),
         ((3, 2, 1, 1, 1), 33), ((3, 1, 1, 1, 1, 1), 15), ((2, 2, 2, 2), 6),
         ((2, 2, 2, 1, 1), 15), ((2, 2, 1, 1, 1, 1), 11),
         ((2, 1, 1, 1, 1, 1, 1), 5), ((1, 1, 1, 1, 1, 1, 1, 1), 6)],
        [((8,), 3), ((7, 1), 7), ((6, 2), 11), ((6, 1, 1), 14), ((5, 3), 15),
         ((5, 2, 1), 33), ((5, 1, 1, 1), 21), ((4, 4), 7), ((4, 3, 1), 32),
         ((4, 2, 2), 26), ((4, 2, 1, 1), 45), ((4, 1, 1, 1, 1), 21),
         ((3, 3, 2), 19), ((3, 3, 1, 1), 27), ((3, 2, 2, 1), 33),
         ((3, 2, 1, 1, 1), 32), ((3, 1, 1, 1, 1, 1), 14), ((2, 2, 2, 2), 7),
         ((2, 2, 2, 1, 1), 14), ((2, 2, 1, 1, 1, 1), 12),
         ((2, 1, 1, 1, 1, 1, 1), 8)],
    ),
}

TABLE_KINDS = ("t1", "t2", "t3", "t4")


def table_range(kind: str) -> tuple[int, int]:
    """(low, high) degrees for which a fixture column/block exists."""
    if kind == "t1":
        return 1, 16
    if kind == "t2":
        return 1, 10
    if kind in ("t3", "t4"):
        return 2, 8
    raise KeyError(kind)
