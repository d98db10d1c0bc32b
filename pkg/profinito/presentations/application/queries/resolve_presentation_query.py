# QUERY
from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class ResolvePresentationQuery:
    """
    Consulta para obtener una presentación a partir de la entrada del usuario:
    un par de Baumslag-Solitar (`bs`) o un texto `< gens | relators >` (`text`).
    Exactamente uno de los dos debe venir informado.
    """

    bs: Optional[Tuple[int, int]] = None
    text: Optional[str] = None
