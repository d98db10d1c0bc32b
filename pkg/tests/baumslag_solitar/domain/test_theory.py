# tests/baumslag_solitar/domain/test_theory.py
"""
Pruebas de formas canónicas, finitud residual, abelianización cerrada y rutas de decisión.
"""
from itertools import product

import pytest

from profinito.abelian.domain.models import AbelianInvariants
from profinito.abelian.domain.smith import abelianize
from profinito.baumslag_solitar.domain.models import DecisionRoute, Family, NotResiduallyFinite
from profinito.baumslag_solitar.domain.theory import (
    bs_isomorphic,
    canonicalize,
    closed_form_abelianization,
    decision_route,
    family,
    is_residually_finite,
    profinitely_isomorphic,
)
from profinito.presentations.domain.models import BSParams, bs_presentation

PARAMETERS = [k for k in range(-10, 11) if k != 0]


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (2, 1, (1, 2)),
        (-3, 2, (2, -3)),
        (-2, -4, (2, 4)),
        (1, 1, (1, 1)),
        (-1, -2, (1, 2)),
        (3, -3, (3, -3)),
        (-3, 3, (3, -3)),
        (-2, -2, (2, 2)),
        (2, -4, (2, -4)),
        (-4, 2, (2, -4)),
        (-1, 3, (1, -3)),
        (5, 3, (3, 5)),
    ],
)
def test_canonicalize(m, n, expected):
    assert canonicalize(BSParams(m, n)) == BSParams(*expected)


def test_canonicalize_is_constant_on_orbits():
    for m, n in product(PARAMETERS, repeat=2):
        c = canonicalize(BSParams(m, n))
        assert 1 <= c.m <= abs(c.n)
        for other in [(n, m), (-m, -n), (-n, -m)]:
            assert canonicalize(BSParams(*other)) == c
        assert canonicalize(c) == c


@pytest.mark.parametrize(
    "m, n",
    [(1, 2), (1, -5), (2, 2), (2, -2), (-3, 3), (3, 1), (2, 3), (2, 4), (-3, 6), (4, 6)],
)
def test_is_residually_finite(m, n):
    expected = m in (1, -1) or n in (1, -1) or abs(m) == abs(n)
    assert is_residually_finite(BSParams(m, n)) is expected


def test_closed_form_matches_smith_normal_form_on_grid():
    for m, n in product(PARAMETERS, repeat=2):
        params = BSParams(m, n)
        assert abelianize(bs_presentation(params)) == closed_form_abelianization(params), params


def test_closed_form_examples():
    assert closed_form_abelianization(BSParams(2, 2)) == AbelianInvariants(2)
    assert closed_form_abelianization(BSParams(2, -2)) == AbelianInvariants(1, (4,))
    assert closed_form_abelianization(BSParams(1, 2)) == AbelianInvariants(1)


def test_profinite_isomorphism_is_total_on_residually_finite_groups():
    """Sobre pares residualmente finitos siempre hay respuesta; si no, NotResiduallyFinite."""
    for p, q in product(product(PARAMETERS[5:15], repeat=2), repeat=2):
        first, second = BSParams(*p), BSParams(*q)
        if is_residually_finite(first) and is_residually_finite(second):
            assert profinitely_isomorphic(first, second) == (canonicalize(first) == canonicalize(second))
        else:
            with pytest.raises(NotResiduallyFinite):
                profinitely_isomorphic(first, second)


def test_not_residually_finite_message():
    with pytest.raises(NotResiduallyFinite, match=r"BS\(2,3\) is not residually finite"):
        bs_isomorphic(BSParams(2, 3), BSParams(1, 2))


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (1, 2, Family.SOLVABLE),
        (-1, 1, Family.SOLVABLE),
        (2, 2, Family.BALANCED),
        (-3, -3, Family.BALANCED),
        (2, -2, Family.TWISTED),
        (2, 3, Family.NOT_RF),
    ],
)
def test_family(m, n, expected):
    assert family(BSParams(m, n)) == expected


@pytest.mark.parametrize(
    "p, q, expected",
    [
        ((1, 2), (2, 1), DecisionRoute.ISOMORPHIC),
        ((1, 2), (1, 3), DecisionRoute.ONE_RELATOR),
        ((1, -1), (2, 2), DecisionRoute.ONE_RELATOR),
        ((2, 2), (2, -2), DecisionRoute.ABELIANIZATION),
        ((2, -2), (3, -3), DecisionRoute.ABELIANIZATION),
        ((2, 2), (3, 3), DecisionRoute.BASE_ORBIFOLD),
    ],
)
def test_decision_route(p, q, expected):
    assert decision_route(BSParams(*p), BSParams(*q)) == expected


def test_decision_route_requires_residual_finiteness():
    with pytest.raises(NotResiduallyFinite):
        decision_route(BSParams(2, 3), BSParams(2, 2))
