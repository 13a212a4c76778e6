"""Exact arithmetic in the Eisenstein integers Z[w] and their fraction field Q(w).

Here w = (-1 + i*sqrt(3))/2 is a primitive cube root of unity, so w^2 = -1 - w.
Elements are stored as integer pairs (a, b) meaning a + b*w; all arithmetic is
exact on arbitrary-precision integers.  Imaginary parts of elements of Q(w) are
rational multiples of sqrt(3) and are kept symbolic as such.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class EisensteinInt:
    """a + b*w with integer a, b, where w^2 + w + 1 = 0."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0):
        self.a = a
        self.b = b

    @classmethod
    def from_pair(cls, pair) -> EisensteinInt:
        a, b = pair
        return cls(int(a), int(b))

    def to_pair(self) -> list:
        return [self.a, self.b]

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, EisensteinInt):
            # (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
            a1, b1, a2, b2 = self.a, self.b, other.a, other.b
            bb = b1 * b2
            return EisensteinInt(a1 * a2 - bb, a1 * b2 + b1 * a2 - bb)
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        return NotImplemented

    def __pow__(self, e: int) -> EisensteinInt:
        if e < 0:
            if not self.is_unit():
                raise ZeroDivisionError("negative power of a non-unit")
            return self.conj() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> EisensteinInt:
        # conj(w) = w^2 = -1 - w
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def unit_inverse(self) -> EisensteinInt:
        """Multiplicative inverse, defined only for the six units."""
        if not self.is_unit():
            raise ZeroDivisionError(f"{self!r} is not a unit")
        return self.conj()

    def to_complex(self) -> complex:
        return complex(self.a - self.b / 2, self.b * _SQRT3_FLOAT / 2)

    def __eq__(self, other) -> bool:
        if isinstance(other, EisensteinInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.a == other and self.b == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"EisensteinInt({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}w"
        return f"{self.a}{self.b:+}w"


_SQRT3_FLOAT = 3 ** 0.5

ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)

#: The unit group of Z[w]: the sixth roots of unity {±1, ±w, ±w^2}.
UNITS = (
    EisensteinInt(1, 0),
    EisensteinInt(-1, 0),
    EisensteinInt(0, 1),
    EisensteinInt(0, -1),
    EisensteinInt(-1, -1),
    EisensteinInt(1, 1),
)


def is_unit(x: EisensteinInt) -> bool:
    return x.norm() == 1


class SqrtThreeRational:
    """An exact rational multiple of sqrt(3), stored as its coefficient."""

    __slots__ = ("coeff",)

    def __init__(self, coeff):
        self.coeff = Fraction(coeff)

    def __add__(self, other: SqrtThreeRational) -> SqrtThreeRational:
        return SqrtThreeRational(self.coeff + other.coeff)

    def __sub__(self, other: SqrtThreeRational) -> SqrtThreeRational:
        return SqrtThreeRational(self.coeff - other.coeff)

    def __neg__(self) -> SqrtThreeRational:
        return SqrtThreeRational(-self.coeff)

    def __mul__(self, scalar) -> SqrtThreeRational:
        return SqrtThreeRational(self.coeff * scalar)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, SqrtThreeRational):
            return self.coeff == other.coeff
        if other == 0:
            return self.coeff == 0
        return NotImplemented

    def __hash__(self):
        return hash(("sqrt3", self.coeff))

    def __bool__(self) -> bool:
        return self.coeff != 0

    def to_float(self) -> float:
        return float(self.coeff) * _SQRT3_FLOAT

    def __repr__(self) -> str:
        return f"SqrtThreeRational({self.coeff!r})"

    def __str__(self) -> str:
        return f"({self.coeff})*sqrt(3)"


class EisensteinFrac:
    """An element of Q(w) as num/den with num in Z[w] and den a positive integer.

    Kept in canonical form at all times: gcd(num.a, num.b, den) = 1 and den >= 1,
    so structural equality coincides with equality of values.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: EisensteinInt, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(gcd(abs(num.a), abs(num.b)), den)
        if g > 1:
            num = EisensteinInt(num.a // g, num.b // g)
            den //= g
        self.num = num
        self.den = den

    @classmethod
    def from_int(cls, x: int) -> EisensteinFrac:
        return cls(EisensteinInt(x, 0), 1)

    @classmethod
    def from_eisenstein(cls, x: EisensteinInt) -> EisensteinFrac:
        return cls(x, 1)

    def __add__(self, other: EisensteinFrac) -> EisensteinFrac:
        return EisensteinFrac(self.num * other.den + other.num * self.den,
                              self.den * other.den)

    def __sub__(self, other: EisensteinFrac) -> EisensteinFrac:
        return EisensteinFrac(self.num * other.den - other.num * self.den,
                              self.den * other.den)

    def __neg__(self) -> EisensteinFrac:
        return EisensteinFrac(-self.num, self.den)

    def __mul__(self, other: EisensteinFrac) -> EisensteinFrac:
        return EisensteinFrac(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: EisensteinFrac) -> EisensteinFrac:
        n = other.num.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(w)")
        # 1/(q/d) = d*conj(q)/norm(q)
        return EisensteinFrac(self.num * other.num.conj() * other.den,
                              self.den * n)

    def conj(self) -> EisensteinFrac:
        return EisensteinFrac(self.num.conj(), self.den)

    def norm(self) -> Fraction:
        """Squared modulus |z|^2 as an exact rational."""
        return Fraction(self.num.norm(), self.den * self.den)

    def re_im(self) -> tuple[Fraction, SqrtThreeRational]:
        """Exact real and imaginary parts: (a + b*w)/d = (2a-b)/(2d) + (b/(2d))*sqrt(3)*i."""
        return (Fraction(2 * self.num.a - self.num.b, 2 * self.den),
                SqrtThreeRational(Fraction(self.num.b, 2 * self.den)))

    def is_integral(self) -> bool:
        return self.den == 1

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def to_complex(self) -> complex:
        return self.num.to_complex() / self.den

    def to_json(self) -> dict:
        from .jsonutil import encode_int

        return {"num": [encode_int(self.num.a), encode_int(self.num.b)],
                "den": encode_int(self.den)}

    @classmethod
    def from_json(cls, obj: dict) -> EisensteinFrac:
        from .jsonutil import decode_int

        num = obj["num"]
        return cls(EisensteinInt(decode_int(num[0]), decode_int(num[1])),
                   decode_int(obj["den"]))

    def __eq__(self, other) -> bool:
        if isinstance(other, EisensteinFrac):
            return self.num == other.num and self.den == other.den
        if isinstance(other, EisensteinInt):
            return self.den == 1 and self.num == other
        if isinstance(other, int):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"EisensteinFrac({self.num!r}, {self.den})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"


def re_im(z: EisensteinFrac) -> tuple[Fraction, SqrtThreeRational]:
    return z.re_im()


def round_nearest(z: EisensteinFrac) -> EisensteinInt:
    """Nearest lattice point of Z[w] to z, minimizing the Euclidean distance.

    The difference z - u then lies in the hexagonal Dirichlet cell of the
    origin, so |z - u|^2 <= 1/3.  Ties on the cell boundary are broken by the
    lexicographically smallest coefficient pair (a, b).
    """
    a, b, d = z.num.a, z.num.b, z.den
    # The minimizer's coordinates differ from (a/d, b/d) by less than 1 in each
    # slot (the form x^2 - xy + y^2 bounds both |x| and |y| by 2/sqrt(3)*|z|),
    # so the four floor/ceil combinations always contain it.
    p0, q0 = a // d, b // d
    best = None
    best_dist = None
    # Candidates scanned in ascending lex order, so on a tie the first (and
    # therefore lexicographically smallest) minimizer is kept.
    for p in (p0, p0 + 1):
        ra = a - p * d
        for q in (q0, q0 + 1):
            rb = b - q * d
            dist = ra * ra - ra * rb + rb * rb
            if best_dist is None or dist < best_dist:
                best_dist = dist
                best = (p, q)
    return EisensteinInt(best[0], best[1])
