# DOMINIO
"""
Matrices enteras y grupos abelianos finitamente generados
Z^r ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_k} con d_1 | d_2 | ... | d_k y cada d_i >= 2.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple


class SmithOverflowError(ArithmeticError):
    """ Una entrada intermedia superó el ancho fijo configurado. """


@dataclass(frozen=True)
class IntMatrix:
    """ Matriz entera de dimensiones rows x cols (entradas exactas). """

    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("Matrix dimensions must be non-negative.")
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError(f"Entries do not match declared shape {self.rows}x{self.cols}.")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntMatrix":
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), width, tuple(tuple(r) for r in rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))


@dataclass(frozen=True)
class SmithForm:
    """ Factores invariantes (unidades incluidas) y rango libre del conúcleo. """

    factors: Tuple[int, ...]
    free_rank: int


@dataclass(frozen=True)
class AbelianInvariants:
    """ Rango libre + factores de torsión en cadena de divisibilidad (sin unidades). """

    free_rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        if self.free_rank < 0:
            raise ValueError("free_rank must be non-negative.")
        if any(d < 2 for d in torsion):
            raise ValueError(f"Torsion factors must be >= 2, got {torsion}.")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"Torsion factors must form a divisibility chain, got {torsion}.")
        object.__setattr__(self, "torsion", torsion)

    @classmethod
    def from_factors(cls, factors: Iterable[int], free_rank: int) -> "AbelianInvariants":
        """ Quita las unidades de una salida de Smith. """
        return cls(free_rank, tuple(abs(d) for d in factors if abs(d) > 1))

    @classmethod
    def from_elementary_divisors(cls, prime_powers: Iterable[int], free_rank: int = 0) -> "AbelianInvariants":
        """
        Combina divisores elementales (potencias de primos) en factores invariantes:
        el mayor factor multiplica la mayor potencia de cada primo, y así sucesivamente.
        """
        by_prime: Dict[int, List[int]] = defaultdict(list)
        for q in prime_powers:
            if q < 2:
                continue
            by_prime[_smallest_prime_factor(q)].append(q)
        length = max((len(v) for v in by_prime.values()), default=0)
        factors = [1] * length
        for powers in by_prime.values():
            for i, q in enumerate(sorted(powers, reverse=True)):
                factors[length - 1 - i] *= q
        return cls(free_rank, tuple(factors))

    @property
    def order(self) -> int:
        """ Orden del grupo; 0 si es infinito. """
        if self.free_rank:
            return 0
        result = 1
        for d in self.torsion:
            result *= d
        return result

    def sort_key(self) -> Tuple:
        return (self.free_rank, len(self.torsion), self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def _smallest_prime_factor(q: int) -> int:
    p = 2
    while p * p <= q:
        if q % p == 0:
            return p
        p += 1
    return q
