# DOMINIO
"""
Tipos del contexto Baumslag-Solitar: familias, rutas de decisión y certificados de que dos
grupos tienen completaciones profinitas distintas.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from profinito.abelian.domain.models import AbelianInvariants
from profinito.finite_groups.domain.models import FiniteQuotient, IsoClassKey
from profinito.presentations.domain.models import BSParams


# --- Excepciones del dominio ---
class NotResiduallyFinite(ValueError):
    """ El grupo queda fuera de la clase donde vale la rigidez profinita. """

    def __init__(self, params: BSParams):
        self.params = params
        super().__init__(f"{params} is not residually finite (requires m=1 or m=±n)")


class CertificationPreconditionError(ValueError):
    """ Se pidió separar dos grupos que son profinitamente isomorfos. """


class Family(str, Enum):
    SOLVABLE = "SOLVABLE"   # m = 1
    BALANCED = "BALANCED"   # m = n > 1
    TWISTED = "TWISTED"     # m = -n, m > 1
    NOT_RF = "NOT_RF"


class DecisionRoute(str, Enum):
    """ Argumento que identifica o separa un par de grupos residualmente finitos. """

    ISOMORPHIC = "ISOMORPHIC"
    ONE_RELATOR = "ONE_RELATOR"
    ABELIANIZATION = "ABELIANIZATION"
    BASE_ORBIFOLD = "BASE_ORBIFOLD"


# --- Certificados ---
@dataclass(frozen=True)
class AbelianWitness:
    first: AbelianInvariants
    second: AbelianInvariants


@dataclass(frozen=True)
class NonLiftingReport:
    """
    Prueba exhaustiva de que `absent` no tiene cocientes isomorfos al testigo: se probaron
    todas las asignaciones de generadores en el grupo testigo y ninguna que cumpla el
    relator lo genera.
    """

    absent: BSParams
    order: int
    absent_keys: Tuple[IsoClassKey, ...]
    assignments_total: int
    assignments_satisfying: int
    assignments_generating: int

    @property
    def holds(self) -> bool:
        return self.assignments_generating == 0


@dataclass(frozen=True)
class QuotientWitness:
    """ Cociente finito de `present` que no es cociente de `absent`. """

    present: BSParams
    absent: BSParams
    quotient: FiniteQuotient
    key: IsoClassKey
    report: NonLiftingReport

    @property
    def order(self) -> int:
        return self.quotient.order


@dataclass(frozen=True)
class Inconclusive:
    """ No hay testigo de orden <= max_order (la teoría no da una cota efectiva). """

    max_order: int


Certificate = Union[AbelianWitness, QuotientWitness, Inconclusive]


@dataclass(frozen=True)
class Comparison:
    """ Resultado completo de comparar dos grupos BS. """

    first: BSParams
    second: BSParams
    first_family: Family
    second_family: Family
    route: DecisionRoute
    profinitely_isomorphic: bool
    certificate: Union[Certificate, None] = None
