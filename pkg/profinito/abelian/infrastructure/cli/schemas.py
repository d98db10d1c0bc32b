# SCHEMAS (ESQUEMAS DE PYDANTIC)
from typing import List

from pydantic import BaseModel, Field

from ...domain.models import AbelianInvariants


class AbelianInvariantsResponse(BaseModel):
    """ G^ab como rango libre + factores invariantes. """

    free_rank: int = Field(..., ge=0, description="Rango libre.")
    torsion: List[int] = Field(default_factory=list, description="Factores d_1 | d_2 | ... (>= 2).")
    text: str = Field(..., description="Forma legible, p.ej. 'Z x Z4'.")

    class Config:
        schema_extra = {"example": {"free_rank": 1, "torsion": [4], "text": "Z x Z4"}}

    @classmethod
    def from_invariants(cls, invariants: AbelianInvariants) -> "AbelianInvariantsResponse":
        return cls(free_rank=invariants.free_rank, torsion=list(invariants.torsion), text=str(invariants))

    def to_invariants(self) -> AbelianInvariants:
        return AbelianInvariants(self.free_rank, tuple(self.torsion))
