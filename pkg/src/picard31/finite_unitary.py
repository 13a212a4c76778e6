"""The finite unitary group U(2) over the Eisenstein integers.

Every member is diagonal diag(a, b) or antidiagonal antidiag(b; a) with both
entries sixth roots of unity, giving 2 * 6 * 6 = 72 elements.  The group is
generated by the coordinate swap U1 and the single-entry rotation U2; a
breadth-first search over the Cayley graph supplies a shortest word in
{U1, U2, U2^-1} for each element.
"""

from __future__ import annotations

from collections import deque
from enum import Enum

from .eisenstein import ONE, ZERO, OMEGA, EisensteinInt, UNITS
from .errors import NotMemberError


class UGen(Enum):
    U1 = "U1"
    U2 = "U2"


#: A word over {U1, U2} as (generator, nonzero exponent) items.
UWord = tuple


class FiniteUnitary:
    """2x2 Eisenstein matrix with U* U = I, in one of the two unit shapes."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise NotMemberError("expected a 2x2 matrix")
        if not _is_member(rows):
            raise NotMemberError(f"not in U(2; Z[w]): {rows}")
        self.rows = rows

    def __mul__(self, other: FiniteUnitary) -> FiniteUnitary:
        a, b = self.rows
        c, d = other.rows
        return FiniteUnitary((
            (a[0] * c[0] + a[1] * d[0], a[0] * c[1] + a[1] * d[1]),
            (b[0] * c[0] + b[1] * d[0], b[0] * c[1] + b[1] * d[1]),
        ))

    def __pow__(self, e: int) -> FiniteUnitary:
        if e < 0:
            return self.conj_transpose() ** (-e)
        result = identity()
        for _ in range(e):
            result = result * self
        return result

    def conj_transpose(self) -> FiniteUnitary:
        (a, b), (c, d) = self.rows
        return FiniteUnitary(((a.conj(), c.conj()), (b.conj(), d.conj())))

    inverse = conj_transpose

    def is_diagonal(self) -> bool:
        return self.rows[0][1].is_zero() and self.rows[1][0].is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, FiniteUnitary):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"FiniteUnitary({self.rows!r})"

    def __str__(self) -> str:
        (a, b), (c, d) = self.rows
        return f"[[{a}, {b}], [{c}, {d}]]"

    def to_json(self) -> list:
        return [[e.to_pair() for e in row] for row in self.rows]

    @classmethod
    def from_json(cls, rows) -> FiniteUnitary:
        return cls(tuple(tuple(EisensteinInt.from_pair(e) for e in row) for row in rows))


def _is_member(rows) -> bool:
    (a, b), (c, d) = rows
    if b.is_zero() and c.is_zero():
        return a.is_unit() and d.is_unit()
    if a.is_zero() and d.is_zero():
        return b.is_unit() and c.is_unit()
    return False


def u_membership(rows) -> bool:
    """True iff the 2x2 Eisenstein array is diagonal or antidiagonal with unit entries."""
    rows = tuple(tuple(row) for row in rows)
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        return False
    return _is_member(rows)


def identity() -> FiniteUnitary:
    return FiniteUnitary(((ONE, ZERO), (ZERO, ONE)))


U1 = FiniteUnitary(((ZERO, ONE), (ONE, ZERO)))
U2 = FiniteUnitary(((-OMEGA, ZERO), (ZERO, ONE)))


def enumerate_group() -> frozenset:
    """All 72 elements: two shapes, each unit pair (a, b)."""
    elements = set()
    for a in UNITS:
        for b in UNITS:
            elements.add(FiniteUnitary(((a, ZERO), (ZERO, b))))
            elements.add(FiniteUnitary(((ZERO, b), (a, ZERO))))
    return frozenset(elements)


def _normalize_uword(items) -> UWord:
    """Merge adjacent runs and reduce exponents: U1 mod 2 into {1}, U2 mod 6 into [-2, 3]."""
    stack = []
    for gen, exp in items:
        if stack and stack[-1][0] is gen:
            exp += stack.pop()[1]
        if gen is UGen.U1:
            exp = exp % 2
        else:
            exp = (exp + 2) % 6 - 2
        if exp != 0:
            stack.append((gen, exp))
    return tuple(stack)


def _bfs_table() -> dict:
    """Shortest word (over U1, U2, U2^-1) for every group element, by BFS from I."""
    steps = ((UGen.U1, 1), (UGen.U2, 1), (UGen.U2, -1))
    step_matrices = (U1, U2, U2.inverse())
    table = {identity(): ()}
    queue = deque([identity()])
    while queue:
        current = queue.popleft()
        word = table[current]
        for step, mat in zip(steps, step_matrices):
            nxt = current * mat
            if nxt not in table:
                table[nxt] = word + (step,)
                queue.append(nxt)
    return {u: _normalize_uword(w) for u, w in table.items()}


_TABLE = None


def word_table() -> dict:
    global _TABLE
    if _TABLE is None:
        _TABLE = _bfs_table()
    return _TABLE


def u_decompose(u: FiniteUnitary) -> UWord:
    """A word over {U1, U2} whose left-to-right product equals u exactly."""
    if not isinstance(u, FiniteUnitary):
        raise NotMemberError(f"not in U(2; Z[w]): {u!r}")
    return word_table()[u]


def evaluate_uword(word: UWord) -> FiniteUnitary:
    result = identity()
    for gen, exp in word:
        base = U1 if gen is UGen.U1 else U2
        result = result * base ** exp
    return result


def serialize_uword(word: UWord) -> str:
    return " ".join(g.value if e == 1 else f"{g.value}^{e}" for g, e in word)


def lift(u: FiniteUnitary):
    """Embed u as the middle 2x2 block of a 4x4 group matrix."""
    from .hermitian import rotation_matrix

    return rotation_matrix(u)
