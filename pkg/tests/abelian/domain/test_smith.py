# tests/abelian/domain/test_smith.py
"""
Pruebas de la forma normal de Smith y de la abelianización.
Oráculo independiente: divisores determinantales (mcd de los menores k x k) con sympy.
"""
import random
from itertools import combinations
from math import gcd

import pytest
from sympy import Matrix

from profinito.abelian.domain.models import AbelianInvariants, IntMatrix, SmithOverflowError
from profinito.abelian.domain.smith import abelianize, relation_matrix, smith_normal_form
from profinito.presentations.domain.parser import parse_presentation


def determinantal_divisors(rows):
    """d_k = mcd de los menores k x k; se detiene en el primer k con todos nulos."""
    m = Matrix(rows)
    divisors = []
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for r in combinations(range(m.rows), k):
            for c in combinations(range(m.cols), k):
                g = gcd(g, int(m.extract(list(r), list(c)).det()))
        if g == 0:
            break
        divisors.append(g)
    return divisors


def oracle_factors(rows):
    divisors = determinantal_divisors(rows)
    factors, previous = [], 1
    for d in divisors:
        factors.append(d // previous)
        previous = d
    return tuple(factors)


# --- Ejemplos ---

def test_diag_2_3():
    form = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
    assert form.factors == (1, 6)
    assert form.free_rank == 0


def test_zero_matrix():
    form = smith_normal_form(IntMatrix.from_rows([[0, 0]]))
    assert form.factors == ()
    assert form.free_rank == 2


def test_bs_2_minus_2_relation_row():
    """[m - n, 0] con m = 2, n = -2 -> factor 4, rango libre 1."""
    form = smith_normal_form(IntMatrix.from_rows([[4, 0]]))
    assert form.factors == (4,)
    assert form.free_rank == 1


def test_empty_matrix_of_free_group():
    form = smith_normal_form(IntMatrix(0, 2, ()))
    assert form.factors == ()
    assert form.free_rank == 2


def test_divisibility_repair():
    """diag(4, 6) -> (2, 12)."""
    assert smith_normal_form(IntMatrix.from_rows([[4, 0], [0, 6]])).factors == (2, 12)


@pytest.mark.parametrize("seed", range(25))
def test_against_determinantal_divisors(seed):
    rng = random.Random(seed)
    rows_count, cols_count = rng.randint(1, 4), rng.randint(1, 4)
    rows = [[rng.randint(-9, 9) for _ in range(cols_count)] for _ in range(rows_count)]
    form = smith_normal_form(IntMatrix.from_rows(rows))
    assert form.factors == oracle_factors(rows)
    assert all(b % a == 0 for a, b in zip(form.factors, form.factors[1:]))
    assert form.free_rank == cols_count - len(form.factors)


def test_invariant_under_transposition_and_permutation():
    rows = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    base = smith_normal_form(IntMatrix.from_rows(rows)).factors
    assert smith_normal_form(IntMatrix.from_rows(rows).transpose()).factors == base
    assert smith_normal_form(IntMatrix.from_rows(rows[::-1])).factors == base
    assert smith_normal_form(IntMatrix.from_rows([r[::-1] for r in rows])).factors == base


def test_fixed_width_overflow():
    with pytest.raises(SmithOverflowError):
        smith_normal_form(IntMatrix.from_rows([[2**70, 3]]), max_bits=64)


def test_exact_arithmetic_has_no_overflow():
    assert smith_normal_form(IntMatrix.from_rows([[2**70]])).factors == (2**70,)


# --- Abelianización ---

def test_relation_matrix_is_exponent_sums(bs):
    assert relation_matrix(bs(2, -3)).entries == ((5, 0),)


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (2, 2, AbelianInvariants(2)),
        (3, -3, AbelianInvariants(1, (6,))),
        (1, 2, AbelianInvariants(1)),
    ],
)
def test_abelianize_bs(bs, m, n, expected):
    assert abelianize(bs(m, n)) == expected


def test_abelianize_cyclic_and_s3(s3_presentation):
    assert str(abelianize(parse_presentation("< a | a^6 >"))) == "Z6"
    assert abelianize(s3_presentation) == AbelianInvariants(0, (2,))


def test_abelian_invariants_validation_and_text():
    assert str(AbelianInvariants(1, (4,))) == "Z x Z4"
    assert str(AbelianInvariants(2)) == "Z^2"
    assert str(AbelianInvariants(0)) == "0"
    with pytest.raises(ValueError):
        AbelianInvariants(0, (4, 6))
    with pytest.raises(ValueError):
        AbelianInvariants(0, (1,))


def test_from_elementary_divisors():
    assert AbelianInvariants.from_elementary_divisors([2, 4, 3]) == AbelianInvariants(0, (2, 12))
