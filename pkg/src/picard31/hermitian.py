"""4x4 Eisenstein matrices preserving the signature-(3,1) Hermitian form.

The form is <w, z> = z* J w with J carrying 1 at the (1,4) and (4,1) corners
and the identity in the middle 2x2 block.  Matrices G over Z[w] with
G* J G = J make up the modular group this package decomposes.  This module
holds the group element type, the explicit generator matrices (Heisenberg
translations, rotations, the inversion), the boundary action, and the
translation/rotation factorization of stabilizer-of-infinity elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eisenstein import ONE, ZERO, EisensteinInt, EisensteinFrac, is_unit
from .errors import DomainError, NotMemberError, ParityError, ShapeError
from .finite_unitary import FiniteUnitary, u_membership


def _rows4(entries) -> tuple:
    rows = tuple(tuple(row) for row in entries)
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise NotMemberError("expected a 4x4 matrix")
    return rows


def _form_defect(rows) -> tuple | None:
    """First (row, col) position, 1-indexed, where M* J M differs from J; None if member.

    (M* J M)[j][k] = conj(M[0][j]) M[3][k] + conj(M[1][j]) M[1][k]
                   + conj(M[2][j]) M[2][k] + conj(M[3][j]) M[0][k].
    """
    for j in range(4):
        c0, c1, c2, c3 = (rows[0][j].conj(), rows[1][j].conj(),
                          rows[2][j].conj(), rows[3][j].conj())
        for k in range(4):
            val = (c0 * rows[3][k] + c1 * rows[1][k]
                   + c2 * rows[2][k] + c3 * rows[0][k])
            expected = _J_ENTRIES[j][k]
            if val.a != expected or val.b != 0:
                return (j + 1, k + 1)
    return None


_J_ENTRIES = ((0, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 0))


def check_membership(entries) -> bool:
    """True iff M* J M = J holds entrywise exactly."""
    try:
        rows = _rows4(entries)
    except NotMemberError:
        return False
    return _form_defect(rows) is None


class GroupMatrix:
    """An element of the modular group: 4x4 over Z[w] with G* J G = J.

    The constructor enforces form preservation; arithmetic stays inside the
    group, so internally produced values skip the (redundant) recheck.
    """

    __slots__ = ("rows",)

    def __init__(self, entries, *, check: bool = True):
        rows = _rows4(entries)
        if check:
            defect = _form_defect(rows)
            if defect is not None:
                raise NotMemberError(
                    f"matrix does not preserve the Hermitian form: "
                    f"defect at entry {defect}")
        self.rows = rows

    def __mul__(self, other: GroupMatrix) -> GroupMatrix:
        a = self.rows
        b = other.rows
        out = []
        for i in range(4):
            ai0, ai1, ai2, ai3 = a[i]
            out.append(tuple(
                ai0 * b[0][k] + ai1 * b[1][k] + ai2 * b[2][k] + ai3 * b[3][k]
                for k in range(4)))
        return GroupMatrix(out, check=False)

    def __pow__(self, e: int) -> GroupMatrix:
        if e < 0:
            return self.inverse() ** (-e)
        result = identity()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj_transpose(self) -> GroupMatrix:
        r = self.rows
        return GroupMatrix(
            tuple(tuple(r[k][j].conj() for k in range(4)) for j in range(4)),
            check=False)

    def inverse(self) -> GroupMatrix:
        """G^-1 = J G* J: conjugate-transpose with first and last rows/columns swapped."""
        r = self.rows
        perm = (3, 1, 2, 0)
        return GroupMatrix(
            tuple(tuple(r[perm[k]][perm[j]].conj() for k in range(4)) for j in range(4)),
            check=False)

    def fixes_infinity(self) -> bool:
        return self.rows[3][0].is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, GroupMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)
        return f"GroupMatrix([{body}])"

    def to_json(self) -> dict:
        from .jsonutil import encode_int

        return {"matrix": [[[encode_int(e.a), encode_int(e.b)] for e in row]
                           for row in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> GroupMatrix:
        from .jsonutil import decode_int

        if not isinstance(obj, dict) or "matrix" not in obj:
            raise ValueError('expected an object with a "matrix" key')
        entries = obj["matrix"]
        if not isinstance(entries, list) or len(entries) != 4:
            raise ValueError("matrix must have 4 rows")
        rows = []
        for row in entries:
            if not isinstance(row, list) or len(row) != 4:
                raise ValueError("each matrix row must have 4 entries")
            rows.append(tuple(
                EisensteinInt(decode_int(e[0]), decode_int(e[1])) for e in row))
        return cls(rows)


def identity() -> GroupMatrix:
    return GroupMatrix(
        tuple(tuple(ONE if i == k else ZERO for k in range(4)) for i in range(4)),
        check=False)


def form_j() -> GroupMatrix:
    return GroupMatrix(
        tuple(tuple(EisensteinInt(v) for v in row) for row in _J_ENTRIES),
        check=False)


def fixes_infinity(g: GroupMatrix) -> bool:
    return g.fixes_infinity()


@dataclass(frozen=True)
class BoundaryPoint:
    """Affine coordinates of a finite boundary point, constrained to the null cone:
    2 Re(c1) = -|c2|^2 - |c3|^2."""

    c1: EisensteinFrac
    c2: EisensteinFrac
    c3: EisensteinFrac

    def __post_init__(self):
        re1, _ = self.c1.re_im()
        if 2 * re1 != -(self.c2.norm() + self.c3.norm()):
            raise DomainError(f"point ({self.c1}, {self.c2}, {self.c3}) is not on the boundary cone")


def image_of_infinity(g: GroupMatrix) -> BoundaryPoint:
    """Where g sends the point at infinity: (g11/g41, g21/g41, g31/g41)."""
    g41 = g.rows[3][0]
    if g41.is_zero():
        raise DomainError("matrix fixes infinity; its image has no affine coordinates")
    den = EisensteinFrac(g41)
    return BoundaryPoint(
        EisensteinFrac(g.rows[0][0]) / den,
        EisensteinFrac(g.rows[1][0]) / den,
        EisensteinFrac(g.rows[2][0]) / den,
    )


class HeisenbergTranslation:
    """Heisenberg translation data (tau, k): horizontal part tau in Z[w]^2 and
    vertical coordinate t = k*sqrt(3), subject to k = |tau1|^2 + |tau2|^2 (mod 2)."""

    __slots__ = ("tau1", "tau2", "k")

    def __init__(self, tau1: EisensteinInt, tau2: EisensteinInt, k: int):
        m = tau1.norm() + tau2.norm()
        if (k - m) % 2 != 0:
            raise ParityError(
                f"k={k} and |tau|^2={m} must have the same parity")
        self.tau1 = tau1
        self.tau2 = tau2
        self.k = k

    @property
    def tau(self) -> tuple[EisensteinInt, EisensteinInt]:
        return (self.tau1, self.tau2)

    def compose(self, other: HeisenbergTranslation) -> HeisenbergTranslation:
        # Twisted product: k picks up the sqrt(3)-coefficient of
        # 2*Im<<tau_self, tau_other>>, which is the w-coefficient of
        # conj(other.tau) . self.tau.
        cross = other.tau1.conj() * self.tau1 + other.tau2.conj() * self.tau2
        return HeisenbergTranslation(
            self.tau1 + other.tau1,
            self.tau2 + other.tau2,
            self.k + other.k + cross.b,
        )

    __mul__ = compose

    def inverse(self) -> HeisenbergTranslation:
        return HeisenbergTranslation(-self.tau1, -self.tau2, -self.k)

    def scale(self, e: int) -> HeisenbergTranslation:
        """The e-th power; the cross term vanishes against itself."""
        return HeisenbergTranslation(self.tau1 * e, self.tau2 * e, self.k * e)

    def matrix(self) -> GroupMatrix:
        return translation_matrix(self.tau, self.k)

    def is_identity(self) -> bool:
        return self.tau1.is_zero() and self.tau2.is_zero() and self.k == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, HeisenbergTranslation):
            return (self.tau1, self.tau2, self.k) == (other.tau1, other.tau2, other.k)
        return NotImplemented

    def __hash__(self):
        return hash((self.tau1, self.tau2, self.k))

    def __repr__(self) -> str:
        return f"HeisenbergTranslation({self.tau1!r}, {self.tau2!r}, {self.k})"


def compose_heisenberg(p: HeisenbergTranslation,
                       q: HeisenbergTranslation) -> HeisenbergTranslation:
    return p.compose(q)


def translation_matrix(tau, k: int) -> GroupMatrix:
    """The Heisenberg translation by (tau, k*sqrt(3)) as a 4x4 group matrix.

    Upper triangular with first row (1, -conj(tau1), -conj(tau2), e) and last
    column (e, tau1, tau2, 1), where e = (-|tau|^2 + i k sqrt(3))/2.  Using
    i*sqrt(3) = 1 + 2w, the corner e is the Eisenstein integer ((k-m)/2, k)
    with m = |tau1|^2 + |tau2|^2; integrality is exactly the parity condition.
    """
    tau1, tau2 = tau
    m = tau1.norm() + tau2.norm()
    if (k - m) % 2 != 0:
        raise ParityError(f"k={k} and |tau|^2={m} must have the same parity")
    corner = EisensteinInt((k - m) // 2, k)
    return GroupMatrix((
        (ONE, -tau1.conj(), -tau2.conj(), corner),
        (ZERO, ONE, ZERO, tau1),
        (ZERO, ZERO, ONE, tau2),
        (ZERO, ZERO, ZERO, ONE),
    ), check=False)


def rotation_matrix(u: FiniteUnitary) -> GroupMatrix:
    """Heisenberg rotation: u as the middle 2x2 block, ones at the corners."""
    (a, b), (c, d) = u.rows
    return GroupMatrix((
        (ONE, ZERO, ZERO, ZERO),
        (ZERO, a, b, ZERO),
        (ZERO, c, d, ZERO),
        (ZERO, ZERO, ZERO, ONE),
    ), check=False)


def inversion() -> GroupMatrix:
    """The involution swapping 0 and infinity."""
    return GroupMatrix((
        (ZERO, ZERO, ZERO, ONE),
        (ZERO, -ONE, ZERO, ZERO),
        (ZERO, ZERO, -ONE, ZERO),
        (ONE, ZERO, ZERO, ZERO),
    ), check=False)


def unit_correction(lam: EisensteinInt) -> GroupMatrix:
    """diag(lam, 1, 1, lam) for a sixth root of unity lam.

    This is the scalar-like residue a stabilizer element can carry at the
    corners; products of translations and rotations always have 1 there.
    """
    if not is_unit(lam):
        raise ValueError(f"{lam!r} is not a unit of Z[w]")
    return GroupMatrix((
        (lam, ZERO, ZERO, ZERO),
        (ZERO, ONE, ZERO, ZERO),
        (ZERO, ZERO, ONE, ZERO),
        (ZERO, ZERO, ZERO, lam),
    ), check=False)


@dataclass(frozen=True)
class HeisenbergParam:
    """Langlands data of a stabilizer-of-infinity element:
    P = unit_correction(lam) * translation_matrix(tau, k) * rotation_matrix(u)."""

    lam: EisensteinInt
    tau: tuple[EisensteinInt, EisensteinInt]
    k: int
    u: FiniteUnitary

    @property
    def translation(self) -> HeisenbergTranslation:
        return HeisenbergTranslation(self.tau[0], self.tau[1], self.k)

    def matrix(self) -> GroupMatrix:
        return (unit_correction(self.lam)
                * translation_matrix(self.tau, self.k)
                * rotation_matrix(self.u))


def langlands_extract(p: GroupMatrix) -> HeisenbergParam:
    """Factor a stabilizer element as unit correction, translation, rotation.

    The lattice admits no dilation component, so after splitting off
    lam = g11 the rest is forced: u is the middle block, tau the middle of the
    last column, and k the w-coefficient of the corner entry.  Every structural
    step is validated; a failure means the input is not a group element.
    """
    r = p.rows
    if not r[3][0].is_zero():
        raise ShapeError("matrix does not fix infinity (g41 != 0)")
    if not (r[1][0].is_zero() and r[2][0].is_zero()):
        raise ShapeError("stabilizer must have zero g21 and g31")
    lam = r[0][0]
    if not is_unit(lam):
        raise ShapeError(f"corner entry {lam} is not a unit")
    if r[3][1] != ZERO or r[3][2] != ZERO or r[3][3] != lam:
        raise ShapeError("last row must be (0, 0, 0, g11)")
    lam_inv = lam.unit_inverse()
    u_rows = ((r[1][1], r[1][2]), (r[2][1], r[2][2]))
    if not u_membership(u_rows):
        raise ShapeError(f"middle block {u_rows} is not in U(2; Z[w])")
    u = FiniteUnitary(u_rows)
    tau1, tau2 = r[1][3], r[2][3]
    corner = lam_inv * r[0][3]
    k = corner.b
    m = tau1.norm() + tau2.norm()
    if k - 2 * corner.a != m:
        raise ShapeError(
            f"corner entry {corner} inconsistent with |tau|^2 = {m}")
    # First row must be (lam, lam * (-tau* u), lam * corner).
    mt1 = -(tau1.conj()) * u.rows[0][0] + -(tau2.conj()) * u.rows[1][0]
    mt2 = -(tau1.conj()) * u.rows[0][1] + -(tau2.conj()) * u.rows[1][1]
    if lam_inv * r[0][1] != mt1 or lam_inv * r[0][2] != mt2:
        raise ShapeError("first row inconsistent with -tau* u")
    return HeisenbergParam(lam=lam, tau=(tau1, tau2), k=k, u=u)


# --- matrix JSON format -----------------------------------------------------

def matrix_to_json_text(g: GroupMatrix) -> str:
    """Canonical one-line JSON rendering; entries above 53-bit magnitude become strings."""
    from .jsonutil import canonical_dumps

    return canonical_dumps(g.to_json())


def matrix_from_json_text(text: str) -> GroupMatrix:
    """Parse and validate the matrix JSON format.

    Raises ValueError on malformed input and NotMemberError (with the first
    failing form entry) on a well-formed non-member.
    """
    import json

    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    try:
        return GroupMatrix.from_json(obj)
    except (TypeError, IndexError, KeyError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
