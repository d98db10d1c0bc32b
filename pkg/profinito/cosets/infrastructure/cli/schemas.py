# SCHEMAS (ESQUEMAS DE PYDANTIC)
from typing import List

from pydantic import BaseModel, Field

from profinito.presentations.domain.parser import format_presentation, format_word
from profinito.finite_groups.domain.permutations import one_line
from ...domain.models import CosetTable, permutation_action


class CosetTableResponse(BaseModel):
    """ Tabla de clases laterales con numeración desde 1 y permutaciones en una línea. """

    presentation: str = Field(..., description="Presentación canónica.")
    subgroup: List[str] = Field(default_factory=list, description="Generadores del subgrupo.")
    index: int = Field(..., ge=1, description="Índice [G:H].")
    rows: List[List[int]] = Field(..., description="Fila por clase, columnas en orden de letras.")
    permutations: List[List[int]] = Field(..., description="Imagen de cada generador.")

    class Config:
        schema_extra = {
            "example": {
                "presentation": "< a | a^5 >",
                "subgroup": [],
                "index": 5,
                "rows": [[2, 3], [4, 1], [1, 5], [5, 2], [3, 4]],
                "permutations": [[2, 4, 1, 5, 3]],
            }
        }

    @classmethod
    def from_table(cls, table: CosetTable) -> "CosetTableResponse":
        gens = table.presentation.generators
        return cls(
            presentation=format_presentation(table.presentation),
            subgroup=[format_word(w, gens) for w in table.subgroup_gens],
            index=table.index,
            rows=[[e + 1 for e in row] for row in table.rows],
            permutations=[one_line(p) for p in permutation_action(table)],
        )
