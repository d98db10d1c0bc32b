# QUERY
from dataclasses import dataclass

from profinito.finite_groups.domain.models import ISOMORPHISM_ORDER_CAP
from profinito.fingerprints.domain.models import DEFAULT_MAX_ORDER
from profinito.presentations.domain.models import BSParams


@dataclass(frozen=True)
class CompareGroupsQuery:
    """ Consulta: ¿son BS(first) y BS(second) profinitamente isomorfos? Con certificado. """

    first: BSParams
    second: BSParams
    max_order: int = DEFAULT_MAX_ORDER
    iso_cap: int = ISOMORPHISM_ORDER_CAP
