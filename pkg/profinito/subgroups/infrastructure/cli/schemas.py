# SCHEMAS (ESQUEMAS DE PYDANTIC)
from typing import List

from pydantic import BaseModel, Field

from profinito.cosets.domain.models import CosetTable
from profinito.presentations.domain.parser import format_presentation, format_word
from ...domain.models import is_normal


class SubgroupEntry(BaseModel):
    index: int = Field(..., ge=1)
    normal: bool
    generators: List[str] = Field(..., description="Generadores de Schreier del subgrupo.")
    rows: List[List[int]] = Field(..., description="Tabla de clases, numeración desde 1.")

    @classmethod
    def from_table(cls, table: CosetTable) -> "SubgroupEntry":
        names = table.presentation.generators
        return cls(
            index=table.index,
            normal=is_normal(table),
            generators=[format_word(w, names) for w in table.subgroup_gens],
            rows=[[e + 1 for e in row] for row in table.rows],
        )


class LowIndexResponse(BaseModel):
    """ Subgrupos de índice acotado, uno por clase de conjugación. """

    presentation: str
    max_index: int = Field(..., ge=1)
    subgroups: List[SubgroupEntry]

    class Config:
        schema_extra = {
            "example": {
                "presentation": "< a, t | t a t^-1 a^-2 >",
                "max_index": 2,
                "subgroups": [
                    {"index": 1, "normal": True, "generators": ["a", "t"], "rows": [[1, 1, 1, 1]]},
                    {"index": 2, "normal": True, "generators": ["a", "t a t^-1", "t^2"],
                     "rows": [[1, 1, 2, 2], [2, 2, 1, 1]]},
                ],
            }
        }
