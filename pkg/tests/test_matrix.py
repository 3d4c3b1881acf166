import pytest

from ci_toric import Binomial, GeneratorCountMismatch, determinantal_divisor, integer_rank, is_dominating, verify_fs
from ci_toric.bands import band_generators, recognize_band
from ci_toric.errors import ResourceLimitError
from ci_toric.families import complete, cycle, fig5
from ci_toric.matrix import mixed_bruteforce, smith_invariants
from ci_toric.walks import binomial_of_walk

FIG5_B = [[0, 0, 0, 1, 0, 0, -1, 1, -1], [1, -1, -1, 2, -1, 1, -1, 0, 0]]


def test_determinantal_divisor():
    assert determinantal_divisor(FIG5_B, 2) == 1
    eye = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
    assert determinantal_divisor(eye, 3) == 1
    assert determinantal_divisor([[2, 0], [0, 2]], 2) == 4
    assert determinantal_divisor([[1, 2], [2, 4]], 2) == 0


def test_smith_invariants():
    assert smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


def test_is_dominating():
    ok, wit = is_dominating([[1, -1], [2, -1]])
    assert not ok and wit.rows == (0, 1) and wit.cols == (0, 1)
    assert is_dominating([[1, 2, 0], [0, 3, 4]]) == (True, None)
    ok, wit = is_dominating(FIG5_B)
    assert not ok and set(wit.cols) == {3, 6}
    assert is_dominating([[1, -1, 1, -1]])[0]


def test_dominating_cap():
    rows = [[1, -1] + [0] * 30 for _ in range(30)]
    for i, r in enumerate(rows):
        r[2 + i] = 1
    with pytest.raises(ResourceLimitError):
        is_dominating(rows, cap=24)


def test_large_mixed_needs_more_than_pairs():
    b = [[1, -1, 0], [0, 1, -1], [-1, 0, 1]]
    ok, wit = is_dominating(b)
    assert not ok and mixed_bruteforce(b) is not None and len(wit.rows) == 3


def test_integer_rank():
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank(FIG5_B) == 2


def test_verify_fs_examples():
    k4 = complete(4)
    gens = [binomial_of_walk(w) for w in band_generators(k4, recognize_band(k4))]
    assert verify_fs(k4, gens).ok
    c4 = cycle(4)
    assert verify_fs(c4, [Binomial.from_exponents({0: 1, 2: 1}, {1: 1, 3: 1})]).ok
    g = fig5()
    b1 = Binomial.from_exponents({3: 1, 7: 1}, {6: 1, 8: 1})
    b2 = Binomial.from_exponents({0: 1, 3: 2, 5: 1}, {1: 1, 2: 1, 4: 1, 6: 1})
    cert = verify_fs(g, [b1, b2])
    assert not cert.ok and cert.delta_r == 1 and set(cert.witness.cols) == {3, 6}
    with pytest.raises(GeneratorCountMismatch, match="generator count mismatch"):
        verify_fs(g, [b1])
