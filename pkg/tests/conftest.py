# tests/conftest.py
"""
Fixtures compartidas: presentaciones de referencia usadas en varios contextos.
"""
import pytest

from profinito.presentations.domain.models import BSParams, bs_presentation
from profinito.presentations.domain.parser import parse_presentation


@pytest.fixture
def s3_presentation():
    """< a, b | a^2, b^3, (ab)^2 >, presentación de S3."""
    return parse_presentation("< a, b | a^2, b^3, abab >")


@pytest.fixture
def cyclic5():
    return parse_presentation("< a | a^5 >")


@pytest.fixture
def free2():
    return parse_presentation("< a, t | >")


@pytest.fixture
def bs():
    """Fábrica: bs(m, n) -> presentación de BS(m, n)."""
    return lambda m, n: bs_presentation(BSParams(m, n))
