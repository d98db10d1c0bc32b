# QUERY
from dataclasses import dataclass

from profinito.finite_groups.domain.models import ISOMORPHISM_ORDER_CAP
from profinito.presentations.domain.models import GroupPresentation
from profinito.fingerprints.domain.models import DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class ComputeFingerprintQuery:
    """ Consulta: clases de isomorfismo de cocientes finitos de orden <= max_order. """

    presentation: GroupPresentation
    max_order: int = DEFAULT_MAX_ORDER
    iso_cap: int = ISOMORPHISM_ORDER_CAP
