# DOMINIO - teoría de los grupos BS(m, n)
"""
Formas canónicas, finitud residual, abelianización en forma cerrada y el procedimiento de
decisión de la rigidez profinita dentro de los BS residualmente finitos.
"""

from typing import List

from profinito.abelian.domain.models import AbelianInvariants
from profinito.presentations.domain.models import BSParams
from .models import DecisionRoute, Family, NotResiduallyFinite


def canonicalize(params: BSParams) -> BSParams:
    """
    Único representante de la órbita bajo (m,n)->(n,m) y (m,n)->(-m,-n) con 1 <= m <= |n|.
    Si |m| = |n| se prefiere n >= 0 y después m <= n.
    """
    m, n = params.m, params.n
    orbit = {(m, n), (n, m), (-m, -n), (-n, -m)}
    candidates: List[tuple] = [(a, b) for a, b in orbit if 1 <= a <= abs(b)]
    a, b = min(candidates, key=lambda ab: (ab[1] < 0, ab[0] > ab[1], ab))
    return BSParams(a, b)


def is_residually_finite(params: BSParams) -> bool:
    c = canonicalize(params)
    return c.m == 1 or c.m == abs(c.n)


def require_residually_finite(*params: BSParams) -> None:
    for p in params:
        if not is_residually_finite(p):
            raise NotResiduallyFinite(p)


def closed_form_abelianization(params: BSParams) -> AbelianInvariants:
    """ Z x Z_|m-n|, con Z^2 cuando m = n. """
    d = abs(params.m - params.n)
    if d == 0:
        return AbelianInvariants(2)
    return AbelianInvariants(1, (d,) if d >= 2 else ())


def bs_isomorphic(p: BSParams, q: BSParams) -> bool:
    """
    Isomorfismo entre BS residualmente finitos: misma forma canónica.
    Raises: NotResiduallyFinite si alguno no lo es.
    """
    require_residually_finite(p, q)
    return canonicalize(p) == canonicalize(q)


def profinitely_isomorphic(p: BSParams, q: BSParams) -> bool:
    """ Dentro de los BS residualmente finitos, completaciones isomorfas equivalen a grupos isomorfos. """
    return bs_isomorphic(p, q)


def family(params: BSParams) -> Family:
    if not is_residually_finite(params):
        return Family.NOT_RF
    c = canonicalize(params)
    if c.m == 1:
        return Family.SOLVABLE
    return Family.BALANCED if c.n == c.m else Family.TWISTED


def decision_route(p: BSParams, q: BSParams) -> DecisionRoute:
    """
    Qué argumento decide el par:
    misma forma canónica; rigidez de BS(1,k) entre los grupos de un relator; abelianizaciones
    distintas; o, para BS(m,m) contra BS(m',m'), el grupo orbifold de la base Z * Z_m.
    """
    require_residually_finite(p, q)
    if canonicalize(p) == canonicalize(q):
        return DecisionRoute.ISOMORPHIC
    if Family.SOLVABLE in (family(p), family(q)):
        return DecisionRoute.ONE_RELATOR
    if closed_form_abelianization(p) != closed_form_abelianization(q):
        return DecisionRoute.ABELIANIZATION
    return DecisionRoute.BASE_ORBIFOLD
