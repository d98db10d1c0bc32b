# QUERY
from dataclasses import dataclass

from profinito.presentations.domain.models import GroupPresentation


@dataclass(frozen=True)
class AbelianizeQuery:
    """ Consulta: invariantes de G^ab para una presentación. """

    presentation: GroupPresentation
    max_bits: int = 0  # 0 = enteros exactos sin límite
