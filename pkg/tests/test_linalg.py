import random

from hypothesis import given, strategies as st

from sqalg import linalg


def _naive_rank(rows, width):
    m = [[(r >> j) & 1 for j in range(width)] for r in rows]
    rank = 0
    for c in range(width):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                m[i] = [a ^ b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


@given(st.lists(st.integers(0, 2 ** 12 - 1), max_size=14))
def test_rank_matches_naive(rows):
    assert linalg.rank(rows) == _naive_rank(rows, 12)


@given(st.lists(st.integers(0, 2 ** 10 - 1), max_size=14))
def test_kernel_vector(rows):
    k = linalg.kernel_vector(rows)
    if k is None:
        assert linalg.rank(rows) == len(rows)
    else:
        acc = 0
        for i in linalg.indices(k):
            acc ^= rows[i]
        assert k and acc == 0


def test_in_span():
    rng = random.Random(7)
    rows = [rng.getrandbits(16) for _ in range(6)]
    basis = linalg.echelon(rows)
    assert linalg.in_span(rows[0] ^ rows[3] ^ rows[5], basis)
    assert linalg.in_span(0, basis)
    assert linalg.indices(0b1011) == [0, 1, 3]
