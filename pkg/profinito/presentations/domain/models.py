# DOMINIO
"""
Modelos del contexto `presentations`: palabras del grupo libre, presentaciones finitas y
parámetros de Baumslag-Solitar.

Convención de letras: el generador i se codifica como la letra 2*i y su inverso como
2*i + 1, de modo que el orden fijo de letras es (a, a^-1, t, t^-1, ...).
"""

import re
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

logger = logging.getLogger(__name__)

MAX_GENERATORS = 64
MAX_RELATOR_SYLLABLES = 10**4
MAX_EXPONENT = 10**4

GENERATOR_PATTERN = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")

Syllable = Tuple[int, int]


# --- Excepciones del dominio ---
class PresentationError(ValueError):
    """ Error base para presentaciones inválidas. """


class PresentationSyntaxError(PresentationError):
    """ Texto que no respeta la gramática `< gens | relators >`. """

    def __init__(self, position: int, expected: str, found: str = ""):
        self.position = position
        self.expected = expected
        self.found = found
        detail = f", found {found!r}" if found else ""
        super().__init__(f"syntax error at position {position}: expected {expected}{detail}")


class DuplicateGeneratorError(PresentationError):
    """ Un nombre de generador aparece dos veces. """


class UnknownGeneratorError(PresentationError):
    """ Una palabra usa un generador no declarado. """


class ZeroExponentError(PresentationError):
    """ Literal de exponente cero (`a^0`). """


class PresentationLimitError(PresentationError):
    """ Se superó el número de generadores, la longitud de un relator o el tamaño de un exponente. """


class InvalidBSParamsError(ValueError):
    """ Parámetros (m, n) con algún cero. """


# --- Letras ---
def letter_of(generator: int, exponent_sign: int) -> int:
    """ Letra del generador (signo > 0) o de su inverso (signo < 0). """
    return 2 * generator if exponent_sign > 0 else 2 * generator + 1


def inverse_letter(letter: int) -> int:
    return letter ^ 1


# --- Palabras ---
@dataclass(frozen=True)
class Word:
    """
    Palabra como lista ordenada de sílabas (índice de generador, exponente != 0).
    La reducción libre no se impone aquí: la impone `GroupPresentation` sobre sus relatores.
    """

    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        normalized = tuple((int(g), int(e)) for g, e in self.syllables)
        for generator, exponent in normalized:
            if generator < 0:
                raise ValueError(f"Generator index must be non-negative, got {generator}.")
            if exponent == 0:
                raise ZeroExponentError("Word syllables cannot have zero exponent.")
        object.__setattr__(self, "syllables", normalized)

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "Word":
        """ Construye la palabra (agrupando sílabas, sin cancelar) desde letras. """
        syllables: List[List[int]] = []
        for letter in letters:
            generator, sign = letter >> 1, (-1 if letter & 1 else 1)
            if syllables and syllables[-1][0] == generator and (syllables[-1][1] > 0) == (sign > 0):
                syllables[-1][1] += sign
            else:
                syllables.append([generator, sign])
        return cls(tuple((g, e) for g, e in syllables))

    def letters(self) -> Tuple[int, ...]:
        """ Expande la palabra en letras sueltas. """
        out: List[int] = []
        for generator, exponent in self.syllables:
            out.extend([letter_of(generator, exponent)] * abs(exponent))
        return tuple(out)

    @property
    def length(self) -> int:
        """ Masa total de exponentes (longitud en letras). """
        return sum(abs(e) for _, e in self.syllables)

    @property
    def is_empty(self) -> bool:
        return not self.syllables

    @property
    def max_generator(self) -> int:
        return max((g for g, _ in self.syllables), default=-1)

    @property
    def is_freely_reduced(self) -> bool:
        return all(a[0] != b[0] for a, b in zip(self.syllables, self.syllables[1:]))

    @property
    def is_cyclically_reduced(self) -> bool:
        if not self.is_freely_reduced:
            return False
        return len(self.syllables) < 2 or self.syllables[0][0] != self.syllables[-1][0]

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def exponent_sum(self, generator: int) -> int:
        return sum(e for g, e in self.syllables if g == generator)

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(Word(self.syllables + other.syllables))


def free_reduce(word: Word) -> Word:
    """
    Reducción libre: fusiona sílabas adyacentes del mismo generador y elimina las que
    quedan con exponente cero. Idempotente y no aumenta la longitud.
    """
    stack: List[List[int]] = []
    for generator, exponent in word.syllables:
        if stack and stack[-1][0] == generator:
            stack[-1][1] += exponent
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([generator, exponent])
    return Word(tuple((g, e) for g, e in stack))


def cyclically_reduce(word: Word) -> Word:
    """ Conjugado libre y cíclicamente reducido de `word`. """
    syllables = list(free_reduce(word).syllables)
    while len(syllables) >= 2 and syllables[0][0] == syllables[-1][0]:
        generator = syllables[0][0]
        merged = syllables[0][1] + syllables[-1][1]
        middle = syllables[1:-1]
        syllables = ([(generator, merged)] if merged else []) + middle
        syllables = list(free_reduce(Word(tuple(syllables))).syllables)
    return Word(tuple(syllables))


# --- Presentaciones ---
@dataclass(frozen=True)
class GroupPresentation:
    """
    Presentación finita < generadores | relatores >.
    Inmutable; los relatores se guardan libre y cíclicamente reducidos.
    `dropped_relators` cuenta los relatores que se redujeron a la palabra vacía
    (aviso, no error); no participa en la igualdad.
    """

    generators: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()
    dropped_relators: int = field(default=0, compare=False)

    def __post_init__(self):
        generators = tuple(self.generators)
        relators = tuple(self.relators)
        if not generators:
            raise PresentationError("A presentation needs at least one generator.")
        if len(generators) > MAX_GENERATORS:
            raise PresentationLimitError(
                f"Too many generators ({len(generators)} > {MAX_GENERATORS})."
            )
        seen = set()
        for name in generators:
            if not GENERATOR_PATTERN.match(name):
                raise PresentationError(f"Invalid generator name '{name}'.")
            if name in seen:
                raise DuplicateGeneratorError(f"Duplicate generator '{name}'.")
            seen.add(name)
        for relator in relators:
            if relator.max_generator >= len(generators):
                raise UnknownGeneratorError(
                    f"Relator uses generator index {relator.max_generator} "
                    f"but only {len(generators)} generators exist."
                )
            if relator.is_empty or not relator.is_cyclically_reduced:
                raise PresentationError("Relators must be non-empty and cyclically reduced.")
            if len(relator.syllables) > MAX_RELATOR_SYLLABLES:
                raise PresentationLimitError(
                    f"Relator too long ({len(relator.syllables)} > {MAX_RELATOR_SYLLABLES} syllables)."
                )
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "relators", relators)

    @classmethod
    def create(cls, generators: Sequence[str], relators: Sequence[Word]) -> "GroupPresentation":
        """
        Fábrica que reduce cíclicamente cada relator y descarta los vacíos.
        Es la vía normal de construcción (el constructor exige relatores ya reducidos).
        """
        reduced: List[Word] = []
        dropped = 0
        for relator in relators:
            word = cyclically_reduce(relator)
            if word.is_empty:
                dropped += 1
                continue
            reduced.append(word)
        if dropped:
            logger.warning("[!] %d relator(s) reduced to the empty word and were dropped", dropped)
        return cls(tuple(generators), tuple(reduced), dropped)

    @property
    def rank(self) -> int:
        """ Número de generadores. """
        return len(self.generators)

    @property
    def num_letters(self) -> int:
        return 2 * len(self.generators)

    def letter_name(self, letter: int) -> str:
        name = self.generators[letter >> 1]
        return f"{name}^-1" if letter & 1 else name

    def __str__(self) -> str:
        from .parser import format_presentation
        return format_presentation(self)


# --- Baumslag-Solitar ---
@dataclass(frozen=True)
class BSParams:
    """ Par (m, n) de BS(m, n) = < a, t | t a^m t^-1 = a^n >, ambos no nulos. """

    m: int
    n: int

    def __post_init__(self):
        if self.m == 0 or self.n == 0:
            raise InvalidBSParamsError(f"BS parameters must be non-zero, got ({self.m}, {self.n}).")

    def __str__(self) -> str:
        return f"BS({self.m},{self.n})"


def bs_presentation(params: BSParams) -> GroupPresentation:
    """ Presentación < a, t | t a^m t^-1 a^-n > de BS(m, n). """
    a, t = 0, 1
    relator = Word(((t, 1), (a, params.m), (t, -1), (a, -params.n)))
    return GroupPresentation.create(("a", "t"), (relator,))


# --- Notas sobre la implementación ---
# 1. `Word` es un valor inmutable; las operaciones devuelven palabras nuevas.
# 2. `GroupPresentation.create` es la fábrica: el constructor solo valida invariantes.
# 3. Los errores de cliente heredan de ValueError (como en el resto de contextos).
