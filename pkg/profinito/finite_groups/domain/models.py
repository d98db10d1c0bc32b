# DOMINIO
"""
Grupos de permutaciones finitos y cocientes finitos G/K presentados como acciones regulares.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from profinito.abelian.domain.models import AbelianInvariants
from profinito.cosets.domain.models import CosetTable, permutation_action
from .permutations import Permutation, identity, is_permutation, satisfies_relators

DEFAULT_ORDER_CAP = 10**5
ISOMORPHISM_ORDER_CAP = 2**12


# --- Excepciones del dominio ---
class GroupOrderCapExceeded(ValueError):
    """ El grupo supera el orden máximo permitido para la operación. """

    def __init__(self, cap: int, operation: str = "closure"):
        self.cap = cap
        super().__init__(f"group order exceeds the {operation} cap of {cap}")


class InvalidQuotientError(ValueError):
    """ Las imágenes no definen un cociente regular de la presentación. """


@dataclass(frozen=True)
class PermGroup:
    """ Grupo generado por `gens`, permutaciones de {0..degree-1}. """

    degree: int
    gens: Tuple[Permutation, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive.")
        gens = tuple(tuple(int(i) for i in g) for g in self.gens)
        for g in gens:
            if not is_permutation(g, self.degree):
                raise ValueError(f"{g} is not a permutation of degree {self.degree}.")
        object.__setattr__(self, "gens", gens)

    @property
    def identity(self) -> Permutation:
        return identity(self.degree)


@dataclass(frozen=True)
class IsoClassKey:
    """
    Invariantes de isomorfismo usados como filtro previo y como clave de orden.
    Claves iguales no implican isomorfismo.
    """

    order: int
    element_order_histogram: Tuple[Tuple[int, int], ...]
    abelian_invariants: AbelianInvariants
    center_order: int
    derived_order: int
    conj_class_sizes: Tuple[int, ...]

    @property
    def is_abelian(self) -> bool:
        return self.center_order == self.order

    def histogram(self) -> Dict[int, int]:
        return dict(self.element_order_histogram)

    def sort_key(self) -> Tuple:
        """ A igual orden, primero los grupos con más elementos de orden pequeño. """
        return (
            self.order,
            tuple((o, -count) for o, count in self.element_order_histogram),
            self.abelian_invariants.sort_key(),
            self.center_order,
            self.derived_order,
            self.conj_class_sizes,
        )

    def __lt__(self, other: "IsoClassKey") -> bool:
        return self.sort_key() < other.sort_key()


@dataclass(frozen=True)
class FiniteQuotient:
    """
    Cociente finito G/K como acción regular sobre las clases de K.
    `gen_images[i]` es la imagen del generador i de la presentación.
    """

    group: PermGroup
    gen_images: Tuple[Permutation, ...]
    source_table: CosetTable

    def __post_init__(self):
        presentation = self.source_table.presentation
        if len(self.gen_images) != presentation.rank:
            raise InvalidQuotientError("One image per presentation generator is required.")
        if tuple(self.gen_images) != self.group.gens:
            raise InvalidQuotientError("Generator images must generate the quotient group.")
        if not satisfies_relators(presentation.relators, self.gen_images):
            raise InvalidQuotientError("Generator images do not satisfy the relators.")
        from .services import group_order
        if group_order(self.group, cap=self.group.degree) != self.group.degree:
            raise InvalidQuotientError("The action is not regular (order != degree).")

    @classmethod
    def from_table(cls, table: CosetTable) -> "FiniteQuotient":
        """ Cociente G/K a partir de la tabla (completa y regular) de un normal K. """
        images = tuple(permutation_action(table))
        return cls(PermGroup(table.num_cosets, images), images, table)

    @property
    def order(self) -> int:
        return self.group.degree

    @property
    def generator_names(self) -> Tuple[str, ...]:
        return self.source_table.presentation.generators

    def image_map(self) -> Dict[str, Permutation]:
        return dict(zip(self.generator_names, self.gen_images))
