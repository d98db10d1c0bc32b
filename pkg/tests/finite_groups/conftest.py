# tests/finite_groups/conftest.py
"""
Grupos de permutaciones de referencia.
"""
import pytest

from profinito.finite_groups.domain.models import PermGroup

# Cuaterniones como (signo, unidad); unidad en "1ijk".
_UNIT_PRODUCTS = {
    ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
    ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
    ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
}
_QUATERNIONS = [(s, u) for s in (1, -1) for u in "1ijk"]


def _quaternion_mul(x, y):
    (s, u), (t, v) = x, y
    if u == "1":
        return s * t, v
    if v == "1":
        return s * t, u
    if u == v:
        return -s * t, "1"
    sign, w = _UNIT_PRODUCTS[(u, v)]
    return s * t * sign, w


def _right_multiplication(g):
    return tuple(_QUATERNIONS.index(_quaternion_mul(x, g)) for x in _QUATERNIONS)


@pytest.fixture
def s3_group():
    return PermGroup(3, ((1, 0, 2), (1, 2, 0)))


@pytest.fixture
def z4_group():
    return PermGroup(4, ((1, 2, 3, 0),))


@pytest.fixture
def klein_group():
    return PermGroup(4, ((1, 0, 3, 2), (2, 3, 0, 1)))


@pytest.fixture
def d4_group():
    """Simetrías del cuadrado: rotación y reflexión i -> -i (mod 4)."""
    return PermGroup(4, ((1, 2, 3, 0), (0, 3, 2, 1)))


@pytest.fixture
def q8_group():
    """Representación regular derecha de los cuaterniones."""
    return PermGroup(8, (_right_multiplication((1, "i")), _right_multiplication((1, "j"))))
