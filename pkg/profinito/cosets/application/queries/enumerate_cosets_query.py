# QUERY
from dataclasses import dataclass
from typing import Tuple

from profinito.presentations.domain.models import GroupPresentation, Word
from profinito.cosets.domain.enumeration import DEFAULT_MAX_COSETS


@dataclass(frozen=True)
class EnumerateCosetsQuery:
    """ Consulta: tabla de clases del subgrupo generado por `subgroup` en `presentation`. """

    presentation: GroupPresentation
    subgroup: Tuple[Word, ...] = ()
    max_cosets: int = DEFAULT_MAX_COSETS
