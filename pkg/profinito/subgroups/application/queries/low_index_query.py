# QUERY
from dataclasses import dataclass

from profinito.presentations.domain.models import GroupPresentation
from profinito.subgroups.domain.models import DEFAULT_MAX_INDEX


@dataclass(frozen=True)
class LowIndexQuery:
    """ Consulta: clases de conjugación de subgrupos de índice <= max_index. """

    presentation: GroupPresentation
    max_index: int = DEFAULT_MAX_INDEX
