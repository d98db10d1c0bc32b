# SCHEMAS (ESQUEMAS DE PYDANTIC)
from typing import Dict, List

from pydantic import BaseModel, Field

from profinito.abelian.infrastructure.cli.schemas import AbelianInvariantsResponse
from profinito.finite_groups.domain.models import IsoClassKey
from profinito.finite_groups.domain.permutations import one_line
from profinito.finite_groups.domain.services import describe_group
from profinito.presentations.domain.parser import format_presentation
from ...domain.models import Fingerprint, FingerprintClass


class IsoClassKeyResponse(BaseModel):
    order: int
    element_orders: Dict[int, int] = Field(..., description="Orden de elemento -> cantidad.")
    abelianization: AbelianInvariantsResponse
    center_order: int
    derived_order: int
    conj_class_sizes: List[int]

    @classmethod
    def from_key(cls, key: IsoClassKey) -> "IsoClassKeyResponse":
        return cls(
            order=key.order,
            element_orders=dict(key.element_order_histogram),
            abelianization=AbelianInvariantsResponse.from_invariants(key.abelian_invariants),
            center_order=key.center_order,
            derived_order=key.derived_order,
            conj_class_sizes=list(key.conj_class_sizes),
        )


class FingerprintClassResponse(BaseModel):
    order: int = Field(..., ge=1)
    label: str = Field(..., description="Nombre legible (Z4, S3, D4, Q8...).")
    key: IsoClassKeyResponse
    generator_images: List[List[int]] = Field(..., description="Imagen de cada generador, notación de una línea.")

    @classmethod
    def from_class(cls, entry: FingerprintClass) -> "FingerprintClassResponse":
        quotient = entry.representative
        return cls(
            order=entry.order,
            label=describe_group(quotient.group),
            key=IsoClassKeyResponse.from_key(entry.key),
            generator_images=[one_line(p) for p in quotient.gen_images],
        )


class FingerprintResponse(BaseModel):
    """ Huella finita: clases de cocientes de orden <= max_order. """

    presentation: str
    max_order: int
    classes: List[FingerprintClassResponse]

    class Config:
        schema_extra = {
            "example": {
                "presentation": "< a | >",
                "max_order": 2,
                "classes": [
                    {"order": 1, "label": "1", "key": {"order": 1, "element_orders": {"1": 1},
                     "abelianization": {"free_rank": 0, "torsion": [], "text": "0"},
                     "center_order": 1, "derived_order": 1, "conj_class_sizes": [1]},
                     "generator_images": [[1]]},
                    {"order": 2, "label": "Z2", "key": {"order": 2, "element_orders": {"1": 1, "2": 1},
                     "abelianization": {"free_rank": 0, "torsion": [2], "text": "Z2"},
                     "center_order": 2, "derived_order": 1, "conj_class_sizes": [1, 1]},
                     "generator_images": [[2, 1]]},
                ],
            }
        }

    @classmethod
    def from_fingerprint(cls, fingerprint: Fingerprint) -> "FingerprintResponse":
        return cls(
            presentation=format_presentation(fingerprint.presentation),
            max_order=fingerprint.max_order,
            classes=[FingerprintClassResponse.from_class(c) for c in fingerprint.classes],
        )
