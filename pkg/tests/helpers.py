"""Matrix builders and brute-force oracles shared by the test suite."""

from typing import List, Tuple

import numpy as np

from pcm_sparsify.core.matrix import BinaryMatrix, rank

# Parity-check matrix of the (15, 7) BCH code, 34 ones.
H15_ROWS = [
    "101110011000000",
    "011010001000000",
    "001101000100000",
    "000110100010000",
    "000011010001000",
    "000001101000100",
    "000000110100010",
    "000000011010001",
]

# Generator polynomials (octal) of the narrow-sense length-63 BCH codes, keyed by dimension.
BCH63_GENERATORS = {
    57: "103",
    51: "12471",
    45: "1701317",
    39: "166623567",
    36: "1033500423",
    30: "157464165547",
}


def gf2_divmod(a: int, b: int) -> Tuple[int, int]:
    """Quotient and remainder of GF(2) polynomials stored as ints."""
    quotient = 0
    width = b.bit_length()
    while a.bit_length() >= width:
        shift = a.bit_length() - width
        quotient ^= 1 << shift
        a ^= b << shift
    return quotient, a


def cyclic_parity_check(generator_octal: str, n: int) -> BinaryMatrix:
    """Parity-check matrix of the cyclic code generated by g(x).

    Rows are the n - k shifts of the reciprocal of h(x) = (x^n - 1) / g(x).
    """
    g = int(generator_octal, 8)
    h, remainder = gf2_divmod((1 << n) | 1, g)
    assert remainder == 0, f"g(x) = {generator_octal} does not divide x^{n} - 1"
    k = h.bit_length() - 1
    reciprocal = int(format(h, "b")[::-1], 2)
    return BinaryMatrix.from_row_ints([reciprocal << i for i in range(n - k)], n)


def bch63(k: int) -> BinaryMatrix:
    return cyclic_parity_check(BCH63_GENERATORS[k], 63)


def random_full_rank(rng: np.random.Generator, m: int, n: int, density: float = 0.5) -> BinaryMatrix:
    while True:
        dense = (rng.random((m, n)) < density).astype(np.uint8)
        H = BinaryMatrix.from_dense(dense)
        if rank(H) == m:
            return H


def improving_pairs(H: BinaryMatrix) -> List[Tuple[int, int, int]]:
    """Every ordered row pair whose addition lowers the number of ones."""
    return [
        (i, j, d)
        for i in range(H.rows)
        for j in range(H.rows)
        if i != j and (d := H.transition_delta(i, j)) < 0
    ]


def all_words(n: int) -> np.ndarray:
    """All 2^n binary words as a (2^n, n) uint8 array, in counting order."""
    shifts = np.arange(n - 1, -1, -1)
    return ((np.arange(1 << n)[:, None] >> shifts) & 1).astype(np.uint8)


def dense_syndromes(H: BinaryMatrix, words: np.ndarray) -> np.ndarray:
    """GF(2) matrix-vector products, one syndrome per row of words."""
    return (words.astype(np.int64) @ H.to_dense().T.astype(np.int64)) % 2


def kernel(H: BinaryMatrix) -> np.ndarray:
    """Brute-force code {y : Hy = 0} for small n."""
    words = all_words(H.cols)
    return words[~dense_syndromes(H, words).any(axis=1)]


def scrambled(H: BinaryMatrix, rng: np.random.Generator, moves: int = 0) -> BinaryMatrix:
    """A dense PCM of the same code: H after ``moves`` random row additions (default 4m)."""
    G = H.copy()
    for _ in range(moves or 4 * H.rows):
        i, j = (int(x) for x in rng.choice(H.rows, size=2, replace=False))
        G.row_add(i, j)
    return G
