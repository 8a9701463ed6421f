"""Window matrix assembly and truncated-word agreement."""

import random

import numpy as np

from convinv import FieldSpec, Polynomial, make_code
from convinv.sliding import (
    coefficient_blocks,
    sliding,
    truncated_word,
    window_support_size,
)


def test_basic_window_shapes(basic_pair):
    for j in range(4):
        plain = sliding(basic_pair, j, "plain")
        primed = sliding(basic_pair, j, "primed")
        assert plain.data.shape == (2 * (j + 1), 2 * (j + 1))
        assert primed.data.shape == (2 * (j + 1), 2 * (j + 2))


def test_coefficient_blocks_cover_reduced_rows(corpus):
    for code in corpus[:30]:
        blocks = coefficient_blocks(code)
        assert len(blocks) == code.delta1 + 1
        for d, block in enumerate(blocks):
            for i, row in enumerate(code.rowred.rows):
                assert tuple(int(v) for v in block[i]) == row.coefficient_slice(d)


def test_block_toeplitz_structure(corpus):
    for code in corpus[:30]:
        j = 2
        mat = sliding(code, j, "plain").data
        blocks = coefficient_blocks(code)
        k, n = code.k, code.n
        for s in range(j + 1):
            for t in range(j + 1):
                got = mat[s * k : (s + 1) * k, t * n : (t + 1) * n]
                d = t - s
                if 0 <= d <= code.delta1:
                    assert np.array_equal(got, blocks[d])
                else:
                    assert not got.any()


def test_truncated_word_matches_polynomial_route(corpus):
    rng = random.Random(7)
    for code in corpus[:40]:
        f, k = code.field, code.k
        j = rng.randint(0, 3)
        msg = [rng.randrange(f.q) for _ in range(k * (j + 1))]
        flat = truncated_word(code, msg, j)
        polys = [
            Polynomial(f, [msg[s * k + i] for s in range(j + 1)]) for i in range(k)
        ]
        word = code.word(polys).truncate(0, j)
        want = [word.entries[c].coeff(d) for d in range(j + 1) for c in range(code.n)]
        assert [int(v) for v in flat] == want


def test_window_support_size_both_variants(corpus):
    rng = random.Random(11)
    for code in corpus[:40]:
        f, k = code.field, code.k
        j = rng.randint(0, 2)
        msgs = [
            [rng.randrange(f.q) for _ in range(k * (j + 1))] for _ in range(2)
        ]
        plain = window_support_size(code, msgs, "plain")
        words = [code.word(
            [Polynomial(f, [m[s * k + i] for s in range(j + 1)]) for i in range(k)]
        ) for m in msgs]
        sup = set()
        for w in words:
            sup |= w.truncate(0, j).support().positions
        assert plain == len(sup)
        primed = window_support_size(code, msgs, "primed")
        sup_full = set()
        for w in words:
            sup_full |= w.support().positions
        assert primed == len(sup_full)


def test_unit_message_selects_reduced_row(basic_pair):
    flat = truncated_word(basic_pair, [1, 0], 0)
    row0 = basic_pair.rowred.rows[0]
    assert [int(v) for v in flat] == list(row0.coefficient_slice(0))


def test_gf4_window(gf2):
    f4 = FieldSpec(2, 2)
    code = make_code(f4, [[[1], [2, 3]]])
    mat = sliding(code, 1, "plain")
    assert mat.data.shape == (2, 4)
    assert mat.to_lists()[0] == [1, 2, 0, 3]
    assert mat.to_lists()[1] == [0, 0, 1, 2]
