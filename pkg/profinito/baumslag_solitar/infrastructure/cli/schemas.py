# SCHEMAS (ESQUEMAS DE PYDANTIC)
from typing import List, Optional

from pydantic import BaseModel, Field

from profinito.abelian.infrastructure.cli.schemas import AbelianInvariantsResponse
from profinito.finite_groups.domain.permutations import one_line
from profinito.finite_groups.domain.services import describe_group
from profinito.fingerprints.infrastructure.cli.schemas import IsoClassKeyResponse
from ...domain.models import AbelianWitness, Certificate, Comparison, Inconclusive, NonLiftingReport, QuotientWitness


class NonLiftingResponse(BaseModel):
    absent: str
    order: int
    absent_keys: List[IsoClassKeyResponse] = Field(..., description="Cocientes del otro grupo de ese orden.")
    assignments_total: int
    assignments_satisfying: int
    assignments_generating: int

    @classmethod
    def from_report(cls, report: NonLiftingReport) -> "NonLiftingResponse":
        return cls(
            absent=str(report.absent),
            order=report.order,
            absent_keys=[IsoClassKeyResponse.from_key(k) for k in report.absent_keys],
            assignments_total=report.assignments_total,
            assignments_satisfying=report.assignments_satisfying,
            assignments_generating=report.assignments_generating,
        )


class CertificateResponse(BaseModel):
    """ Certificado de separación; los campos presentes dependen de `kind`. """

    kind: str = Field(..., description="abelian | quotient | inconclusive")
    # abelian
    first: Optional[AbelianInvariantsResponse] = None
    second: Optional[AbelianInvariantsResponse] = None
    # quotient
    present: Optional[str] = None
    absent: Optional[str] = None
    order: Optional[int] = None
    label: Optional[str] = None
    key: Optional[IsoClassKeyResponse] = None
    generator_images: Optional[List[List[int]]] = None
    non_lifting: Optional[NonLiftingResponse] = None
    # inconclusive
    max_order: Optional[int] = None

    @classmethod
    def from_certificate(cls, certificate: Certificate) -> "CertificateResponse":
        if isinstance(certificate, AbelianWitness):
            return cls(
                kind="abelian",
                first=AbelianInvariantsResponse.from_invariants(certificate.first),
                second=AbelianInvariantsResponse.from_invariants(certificate.second),
            )
        if isinstance(certificate, QuotientWitness):
            return cls(
                kind="quotient",
                present=str(certificate.present),
                absent=str(certificate.absent),
                order=certificate.order,
                label=describe_group(certificate.quotient.group),
                key=IsoClassKeyResponse.from_key(certificate.key),
                generator_images=[one_line(p) for p in certificate.quotient.gen_images],
                non_lifting=NonLiftingResponse.from_report(certificate.report),
            )
        if isinstance(certificate, Inconclusive):
            return cls(kind="inconclusive", max_order=certificate.max_order)
        raise TypeError(f"Unknown certificate type {type(certificate).__name__}.")


class CompareResponse(BaseModel):
    first: str
    second: str
    first_family: str
    second_family: str
    route: str
    profinitely_isomorphic: bool
    certificate: Optional[CertificateResponse] = None

    class Config:
        schema_extra = {
            "example": {
                "first": "BS(2,2)",
                "second": "BS(2,-2)",
                "first_family": "BALANCED",
                "second_family": "TWISTED",
                "route": "ABELIANIZATION",
                "profinitely_isomorphic": False,
                "certificate": {
                    "kind": "abelian",
                    "first": {"free_rank": 2, "torsion": [], "text": "Z^2"},
                    "second": {"free_rank": 1, "torsion": [4], "text": "Z x Z4"},
                },
            }
        }

    @classmethod
    def from_comparison(cls, comparison: Comparison) -> "CompareResponse":
        return cls(
            first=str(comparison.first),
            second=str(comparison.second),
            first_family=comparison.first_family.value,
            second_family=comparison.second_family.value,
            route=comparison.route.value,
            profinitely_isomorphic=comparison.profinitely_isomorphic,
            certificate=(
                CertificateResponse.from_certificate(comparison.certificate)
                if comparison.certificate is not None else None
            ),
        )
