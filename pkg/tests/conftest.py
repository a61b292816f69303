import random

import pytest

from hochflag.flags import Flag


def random_permutation(rng: random.Random, n: int):
    window = list(range(1, n + 1))
    rng.shuffle(window)
    return tuple(window)


def random_invertible(rng: random.Random, n: int, p: int):
    """Random invertible matrix over F_p, as a tuple of rows."""
    while True:
        rows = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
        cols = tuple(tuple(rows[i][j] for i in range(n)) for j in range(n))
        try:
            Flag(cols, p)
        except ValueError:
            continue
        return rows


def matrix_apply(rows, flag: Flag) -> Flag:
    """Left-multiply every basis column of the flag by the matrix."""
    n = flag.n
    p = flag.p
    cols = [
        tuple(sum(rows[i][k] * col[k] for k in range(n)) % p for i in range(n))
        for col in flag.columns
    ]
    return Flag(cols, p)


@pytest.fixture
def rng():
    return random.Random(20260809)
