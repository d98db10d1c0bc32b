# DOMINIO
"""
Huella finita de un grupo: las clases de isomorfismo de sus cocientes finitos de orden
acotado. Dos grupos residualmente finitos con la misma huella a todo orden tienen la misma
completación profinita; una clase presente en una sola huella separa ambos grupos.
"""

from dataclasses import dataclass
from typing import List, Tuple

from profinito.finite_groups.domain.models import FiniteQuotient, IsoClassKey
from profinito.presentations.domain.models import GroupPresentation

HARD_MAX_ORDER = 64
DEFAULT_MAX_ORDER = 12
CATALOG_MAX_ORDER = 8


# --- Excepciones del dominio ---
class FingerprintCapExceeded(ValueError):
    def __init__(self, max_order: int, cap: int = HARD_MAX_ORDER):
        self.max_order = max_order
        self.cap = cap
        super().__init__(f"max_order {max_order} exceeds the cap of {cap}")


class FingerprintMismatchError(ValueError):
    """ Solo se comparan huellas calculadas con el mismo orden máximo. """


@dataclass(frozen=True)
class FingerprintClass:
    """ Una clase de isomorfismo con su clave y un cociente representante. """

    key: IsoClassKey
    representative: FiniteQuotient

    @property
    def order(self) -> int:
        return self.key.order

    def sort_key(self) -> Tuple:
        return self.key.sort_key()


@dataclass(frozen=True)
class Fingerprint:
    presentation: GroupPresentation
    max_order: int
    classes: Tuple[FingerprintClass, ...]

    def __post_init__(self):
        for entry in self.classes:
            if entry.order > self.max_order:
                raise ValueError(f"Class of order {entry.order} exceeds max_order {self.max_order}.")

    def __len__(self) -> int:
        return len(self.classes)

    def of_order(self, order: int) -> List[FingerprintClass]:
        return [c for c in self.classes if c.order == order]

    def orders(self) -> List[int]:
        return sorted({c.order for c in self.classes})


@dataclass(frozen=True)
class FingerprintDiff:
    """ Partición de dos huellas por isomorfismo certificado. """

    only_first: Tuple[FingerprintClass, ...]
    only_second: Tuple[FingerprintClass, ...]
    common_count: int

    @property
    def is_empty(self) -> bool:
        return not self.only_first and not self.only_second
