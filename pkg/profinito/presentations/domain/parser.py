# DOMINIO - gramática de presentaciones
"""
Analizador descendente para la gramática

    presentation := "<" gens "|" relators ">"
    gens         := name ("," name)*
    relators     := [ word ("," word)* ]
    word         := factor+
    factor       := name [ "^" integer ]

Los espacios no son significativos. Una mayúscula como `T` denota `t^-1` cuando `t` está
declarado y `T` no lo está. Una corrida como `abab` que no es un nombre declarado se parte
en letras sueltas si cada letra es un generador; el exponente final afecta a la última.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .models import (
    MAX_EXPONENT,
    GroupPresentation,
    PresentationLimitError,
    PresentationSyntaxError,
    DuplicateGeneratorError,
    UnknownGeneratorError,
    ZeroExponentError,
    Word,
    free_reduce,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # "name", "int", "<", ">", "|", ",", "^", ";", "end"
    text: str
    position: int


_PUNCTUATION = {"<", ">", "|", ",", "^", ";"}


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _PUNCTUATION:
            tokens.append(_Token(ch, ch, i))
            i += 1
        elif ch.isascii() and ch.isalpha():
            start = i
            while i < len(text) and text[i].isascii() and text[i].isalnum():
                i += 1
            tokens.append(_Token("name", text[start:i], start))
        elif ch.isdigit() or ch in "+-":
            start = i
            i += 1
            while i < len(text) and text[i].isdigit():
                i += 1
            literal = text[start:i]
            if literal in {"+", "-"}:
                raise PresentationSyntaxError(start, "integer", literal)
            tokens.append(_Token("int", literal, start))
        else:
            raise PresentationSyntaxError(i, "name, integer or one of < > | , ^", ch)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    """ Cursor sobre la lista de tokens con reporte de posición. """

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0
        self.generators: Dict[str, int] = {}

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def expect(self, kind: str, expected: Optional[str] = None) -> _Token:
        token = self.current
        if token.kind != kind:
            raise PresentationSyntaxError(token.position, expected or repr(kind), token.text or "end of input")
        self.index += 1
        return token

    def accept(self, kind: str) -> bool:
        if self.current.kind == kind:
            self.index += 1
            return True
        return False

    # --- Reglas ---
    def parse_presentation(self) -> GroupPresentation:
        self.expect("<", "'<'")
        names = self.parse_generators()
        self.expect("|", "'|' or ','")
        relators: List[Word] = []
        if self.current.kind != ">":
            relators.append(self.parse_word())
            while self.accept(","):
                relators.append(self.parse_word())
        self.expect(">", "'>' or ','")
        self.expect("end", "end of input")
        return GroupPresentation.create(names, relators)

    def parse_generators(self) -> List[str]:
        names: List[str] = []
        while True:
            token = self.expect("name", "generator name")
            if token.text in self.generators:
                raise DuplicateGeneratorError(
                    f"Duplicate generator '{token.text}' at position {token.position}."
                )
            self.generators[token.text] = len(names)
            names.append(token.text)
            if not self.accept(","):
                return names

    def parse_word(self, stop: Sequence[str] = (",", ">")) -> Word:
        syllables: List[Tuple[int, int]] = []
        if self.current.kind != "name":
            raise PresentationSyntaxError(self.current.position, "generator name", self.current.text or "end of input")
        while self.current.kind == "name":
            token = self.current
            self.index += 1
            letters = self.resolve(token)
            exponent = 1
            if self.accept("^"):
                literal = self.expect("int", "integer exponent")
                exponent = int(literal.text)
                if exponent == 0:
                    raise ZeroExponentError(f"Zero exponent at position {literal.position}.")
                if abs(exponent) > MAX_EXPONENT:
                    raise PresentationLimitError(
                        f"Exponent {exponent} at position {literal.position} exceeds {MAX_EXPONENT} in absolute value."
                    )
            for generator, sign in letters[:-1]:
                syllables.append((generator, sign))
            generator, sign = letters[-1]
            syllables.append((generator, sign * exponent))
        if self.current.kind not in stop and self.current.kind != "end":
            raise PresentationSyntaxError(self.current.position, "generator name, ',' or '>'", self.current.text)
        return Word(tuple(syllables))

    def resolve(self, token: _Token) -> List[Tuple[int, int]]:
        """ Traduce un nombre a una o varias sílabas (generador, signo). """
        single = self._resolve_name(token.text)
        if single is not None:
            return [single]
        if len(token.text) > 1:
            parts = [self._resolve_name(ch) for ch in token.text]
            if all(part is not None for part in parts):
                return parts  # type: ignore[return-value]
        raise UnknownGeneratorError(f"Unknown generator '{token.text}' at position {token.position}.")

    def _resolve_name(self, name: str) -> Optional[Tuple[int, int]]:
        if name in self.generators:
            return self.generators[name], 1
        if name.isupper() and name.lower() in self.generators:
            return self.generators[name.lower()], -1
        return None


def parse_presentation(text: str) -> GroupPresentation:
    """
    Analiza un texto `< gens | relators >`.
    Raises: PresentationError (o subclases) con la posición del fallo.
    """
    return _Parser(text).parse_presentation()


def parse_word(text: str, generators: Sequence[str]) -> Word:
    """ Analiza una palabra suelta sobre los generadores dados; "" es la palabra vacía. """
    parser = _Parser(text)
    parser.generators = {name: i for i, name in enumerate(generators)}
    if parser.current.kind == "end":
        return Word()
    word = parser.parse_word(stop=())
    parser.expect("end", "end of word")
    return free_reduce(word)


def parse_word_list(text: str, generators: Sequence[str]) -> List[Word]:
    """ Lista de palabras separadas por ';' (cadena vacía = lista vacía). """
    return [parse_word(chunk, generators) for chunk in text.split(";") if chunk.strip()]


def format_word(word: Word, generators: Sequence[str]) -> str:
    """ `t a^2 t^-1 a^-2`; la palabra vacía se escribe `1`. """
    if word.is_empty:
        return "1"
    parts = []
    for generator, exponent in word.syllables:
        name = generators[generator]
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
    return " ".join(parts)


def format_presentation(presentation: GroupPresentation) -> str:
    """ Impresión canónica; `parse_presentation` la invierte exactamente. """
    gens = ", ".join(presentation.generators)
    rels = ", ".join(format_word(r, presentation.generators) for r in presentation.relators)
    return f"< {gens} | {rels} >" if rels else f"< {gens} | >"
