"""Words over the four group generators and their evaluation.

Generators: N (the basic Heisenberg translation by ((1,0), sqrt(3))),
A and B (rotations by the two generators of U(2; Z[w])), and R (the
inversion).  A word is a sequence of generator powers; evaluation
multiplies the corresponding matrices.  Normal form merges adjacent equal
generators and reduces exponents by the generator orders (A^2 = R^2 = I,
B^6 = I, N of infinite order).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .eisenstein import ONE, ZERO, EisensteinInt, OMEGA
from .errors import WordParseError
from .hermitian import (GroupMatrix, identity, inversion, rotation_matrix,
                        translation_matrix)
from .finite_unitary import FiniteUnitary

class Generator(Enum):
    N = "N"
    A = "A"
    B = "B"
    R = "R"


# Exponent order per generator; None means infinite.
_ORDER = {Generator.N: None, Generator.A: 2, Generator.B: 6, Generator.R: 2}

# (-w)^d for d in 0..5.
_MINUS_OMEGA_POWERS = tuple((-OMEGA) ** d for d in range(6))


def _canonical_exponent(gen: Generator, e: int) -> int:
    if gen is Generator.N:
        return e
    if gen is Generator.B:
        # Representative in {-2, ..., 3}.
        return (e + 2) % 6 - 2
    return e % 2


class Word:
    """Immutable sequence of (generator, exponent) items."""

    __slots__ = ("items",)

    def __init__(self, items=()):
        self.items = tuple((Generator(g), int(e)) for g, e in items)

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __mul__(self, other: Word) -> Word:
        return normalize(Word(self.items + other.items))

    def inverse(self) -> Word:
        return normalize(Word(tuple((g, -e) for g, e in reversed(self.items))))

    def syllable_length(self) -> int:
        """Total letter count: the sum of absolute exponents."""
        return sum(abs(e) for _, e in self.items)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.items == other.items
        return NotImplemented

    def __hash__(self):
        return hash(self.items)

    def __repr__(self) -> str:
        return f"Word({serialize(self)!r})"

    def __str__(self) -> str:
        return serialize(self)


EMPTY = Word()


def normalize(word: Word) -> Word:
    """Merge adjacent equal generators, reduce by orders, drop trivial factors.

    A factor that cancels to the identity exposes the entry below it, which
    later items can then merge with, so this runs against a stack rather than
    the raw neighbor pairs.  The stack never holds two adjacent equal
    generators, so one merge per incoming item is enough.
    """
    stack: list[tuple[Generator, int]] = []
    for gen, exp in word.items:
        if stack and stack[-1][0] is gen:
            exp += stack.pop()[1]
        exp = _canonical_exponent(gen, exp)
        if exp != 0:
            stack.append((gen, exp))
    return Word(stack)


def generator_power(gen: Generator, e: int) -> GroupMatrix:
    """Closed form for a single generator power."""
    if gen is Generator.N:
        # N^e translates by ((e, 0), e*sqrt(3)): powers stay on the same
        # one-parameter family.
        return translation_matrix((EisensteinInt(e), ZERO), e)
    if gen is Generator.A:
        if e % 2 == 0:
            return identity()
        return rotation_matrix(FiniteUnitary(((ZERO, ONE), (ONE, ZERO))))
    if gen is Generator.B:
        lam = _MINUS_OMEGA_POWERS[e % 6]
        return rotation_matrix(FiniteUnitary(((lam, ZERO), (ZERO, ONE))))
    if e % 2 == 0:
        return identity()
    return inversion()


def evaluate(word: Word) -> GroupMatrix:
    """Product of the word's generator powers.

    Works column-by-column on the accumulator: right-multiplying by a
    generator power is a short column operation (N mixes columns 1, 2, 4;
    A swaps columns 2 and 3; B scales column 2; R permutes and negates),
    which is much cheaper than generic 4x4 products.
    """
    cols = [[ONE if i == j else ZERO for i in range(4)] for j in range(4)]
    for gen, exp in word.items:
        if gen is Generator.N:
            c1, c2, c3, c4 = cols
            corner = EisensteinInt((exp - exp * exp) // 2, exp)
            cols[3] = [corner * c1[i] + exp * c2[i] + c4[i] for i in range(4)]
            cols[1] = [c2[i] - exp * c1[i] for i in range(4)]
        elif gen is Generator.A:
            if exp % 2:
                cols[1], cols[2] = cols[2], cols[1]
        elif gen is Generator.B:
            lam = _MINUS_OMEGA_POWERS[exp % 6]
            cols[1] = [lam * v for v in cols[1]]
        else:
            if exp % 2:
                c1, c2, c3, c4 = cols
                cols = [c4, [-v for v in c2], [-v for v in c3], c1]
    return GroupMatrix(
        tuple(tuple(cols[j][i] for j in range(4)) for i in range(4)),
        check=False)


# --- text format ------------------------------------------------------------

_LETTERS = {g.value: g for g in Generator}


def parse(text: str) -> Word:
    """Parse the word syntax: generator letters with optional ^exponent,
    separated by whitespace.  Returns the normalized word."""
    items = []
    i = 0
    n = len(text)
    while i < n and text[i].isspace():
        i += 1
    while i < n:
        ch = text[i]
        gen = _LETTERS.get(ch)
        if gen is None:
            raise WordParseError(f"expected generator letter, got {ch!r}",
                                 _byte_offset(text, i))
        i += 1
        exp = 1
        if i < n and text[i] == "^":
            i += 1
            start = i
            if i < n and text[i] in "+-":
                i += 1
            if i >= n or not text[i].isdigit():
                raise WordParseError("expected integer exponent after '^'",
                                     _byte_offset(text, i))
            while i < n and text[i].isdigit():
                i += 1
            exp = int(text[start:i])
        items.append((gen, exp))
        while i < n and text[i].isspace():
            i += 1
    return normalize(Word(items))


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def serialize(word: Word) -> str:
    """Inverse of parse on normalized words."""
    parts = []
    for gen, exp in word.items:
        if exp == 1:
            parts.append(gen.value)
        else:
            parts.append(f"{gen.value}^{exp}")
    return " ".join(parts)


@dataclass(frozen=True)
class DecompositionResult:
    """Outcome of a full decomposition: G = unit_correction(unit) * evaluate(word)."""

    unit: EisensteinInt
    word: Word

    def to_json(self) -> dict:
        from .jsonutil import encode_int

        return {"unit": [encode_int(self.unit.a), encode_int(self.unit.b)],
                "word": serialize(self.word)}

    @classmethod
    def from_json(cls, obj: dict) -> DecompositionResult:
        from .jsonutil import decode_int

        unit = obj["unit"]
        return cls(unit=EisensteinInt(decode_int(unit[0]), decode_int(unit[1])),
                   word=parse(obj["word"]))
