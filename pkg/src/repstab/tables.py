"""Reference Schur expansions of the hatted families for ranks i <= 4.

Keys are (n, i); values map shapes to multiplicities.  Cells not listed
are zero for i <= 4 and n <= 8.
"""
from repstab.partitions import Partition

HAT_LIE = {
    (2, 1): {(1, 1): 1},
    (3, 2): {(2, 1): 1},
    (4, 2): {(2, 2): 1, (1, 1, 1, 1): 1},
    (4, 3): {(3, 1): 1, (2, 1, 1): 1},
    (5, 3): {(2, 1, 1, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1},
    (5, 4): {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1, (2, 1, 1, 1): 1},
    (6, 3): {(1, 1, 1, 1, 1, 1): 1, (2, 2, 1, 1): 1, (3, 3): 1},
    (6, 4): {(4, 1, 1): 1, (2, 2, 1, 1): 1, (2, 1, 1, 1, 1): 1, (3, 2, 1): 3,
             (3, 1, 1, 1): 3, (2, 2, 2): 2, (4, 2): 2},
    (7, 4): {(4, 2, 1): 1, (4, 3): 1, (2, 2, 2, 1): 1, (3, 1, 1, 1, 1): 1, (3, 2, 1, 1): 2,
             (2, 2, 1, 1, 1): 1, (3, 2, 2): 1, (3, 3, 1): 1, (2, 1, 1, 1, 1, 1): 1},
    (8, 4): {(4, 4): 1, (3, 3, 1, 1): 1, (2, 2, 2, 2): 1, (2, 2, 1, 1, 1, 1): 1,
             (1, 1, 1, 1, 1, 1, 1, 1): 1},
}

HAT_W = {
    (2, 1): {(2,): 1},
    (3, 2): {(2, 1): 1},
    (4, 2): {(3, 1): 1},
    (4, 3): {(3, 1): 1, (2, 1, 1): 1},
    (5, 3): {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1},
    (5, 4): {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1, (2, 1, 1, 1): 1},
    (6, 3): {(4, 1, 1): 1, (3, 3): 1},
    (6, 4): {(5, 1): 1, (4, 2): 2, (4, 1, 1): 2, (3, 3): 1, (3, 2, 1): 3,
             (3, 1, 1, 1): 2, (2, 2, 2): 1, (2, 2, 1, 1): 1},
    (7, 4): {(5, 2): 1, (5, 1, 1): 1, (4, 3): 1, (4, 2, 1): 2, (4, 1, 1, 1): 1,
             (3, 3, 1): 1, (3, 2, 2): 1, (3, 2, 1, 1): 1},
    (8, 4): {(5, 1, 1, 1): 1, (4, 3, 1): 1},
}

LIE_6 = {(5, 1): 1, (4, 2): 1, (4, 1, 1): 2, (3, 3): 1, (3, 2, 1): 3,
         (3, 1, 1, 1): 1, (2, 2, 1, 1): 2, (2, 1, 1, 1, 1): 1}

# standard tableaux as row tuples, grouped by size
DESARRANGEMENT = {
    0: [()],
    1: [],
    2: [((1,), (2,))],
    3: [((1, 3), (2,))],
    4: [((1, 3), (2, 4)), ((1,), (2,), (3,), (4,)), ((1, 3, 4), (2,)), ((1, 3), (2,), (4,))],
    5: [((1, 3), (2,), (4,), (5,)), ((1, 3), (2, 4), (5,)), ((1, 3, 4), (2,), (5,)),
        ((1, 3, 4), (2, 5)), ((1, 3, 4, 5), (2,)), ((1, 3, 5), (2, 4)),
        ((1, 3, 5), (2,), (4,)), ((1, 3), (2, 5), (4,)), ((1, 5), (2,), (3,), (4,))],
}

WHITNEY_GENERATING = {
    0: [()],
    1: [],
    2: [((1, 2),)],
    3: [((1, 2), (3,))],
    4: [((1, 2), (3,), (4,)), ((1, 2, 3), (4,)), ((1, 2, 4), (3,))],
    5: [((1, 2), (3,), (4,), (5,)), ((1, 2), (3, 5), (4,)), ((1, 2, 5), (3,), (4,)),
        ((1, 2), (3, 4), (5,)), ((1, 2, 3), (4, 5)), ((1, 2, 3, 5), (4,)),
        ((1, 2, 4), (3,), (5,)), ((1, 2, 4), (3, 5)), ((1, 2, 4, 5), (3,))],
}


def table(kind: str) -> dict:
    raw = HAT_LIE if kind == "Lie" else HAT_W
    return {key: {Partition(lam): c for lam, c in cell.items()} for key, cell in raw.items()}


def cell(kind: str, n: int, i: int) -> dict:
    """Reference cell; empty dict means zero."""
    if i > 4 or n > 8:
        raise KeyError(f"no reference data for n={n}, i={i}")
    return table(kind).get((n, i), {})
