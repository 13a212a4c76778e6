"""Constructive decomposition of group elements into generator words.

The algorithm repeatedly moves the image of infinity close to the origin by
a Heisenberg translation and then applies the inversion.  Each round shrinks
the norm of the bottom-left entry by a factor of at least 31/36, and that
norm is a nonnegative integer, so after finitely many rounds the element
fixes infinity and splits into a unit correction, a translation, and a
rotation.  Unwinding the rounds yields a word over the four generators; the
unit correction is reported separately.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .eisenstein import UNITS, EisensteinInt, EisensteinFrac, round_nearest
from .errors import InternalError
from .finite_unitary import UGen, enumerate_group, serialize_uword, u_decompose
from .hermitian import (GroupMatrix, HeisenbergParam, HeisenbergTranslation,
                        identity, inversion, langlands_extract, rotation_matrix,
                        translation_matrix, unit_correction)
from .words import DecompositionResult, Generator, Word, evaluate, normalize

_UGEN_TO_GENERATOR = {UGen.U1: Generator.A, UGen.U2: Generator.B}


@dataclass(frozen=True)
class ReductionStep:
    """One round: left-multiply by the translation (tau, k), then invert.
    n_before and n_after are the bottom-left entry norms around the round."""

    tau: tuple[EisensteinInt, EisensteinInt]
    k: int
    n_before: int
    n_after: int

    def to_json(self) -> dict:
        from .jsonutil import encode_int

        return {"tau": [[encode_int(t.a), encode_int(t.b)] for t in self.tau],
                "k": self.k,
                "n_before": encode_int(self.n_before),
                "n_after": encode_int(self.n_after)}


@dataclass(frozen=True)
class ReductionTrace:
    """Full record of a decomposition: the rounds plus the terminal
    stabilizer data."""

    steps: tuple[ReductionStep, ...]
    stabilizer: HeisenbergParam

    def to_json(self) -> dict:
        from .jsonutil import encode_int

        stab = self.stabilizer
        return {
            "steps": [s.to_json() for s in self.steps],
            "stabilizer": {
                "unit": [encode_int(stab.lam.a), encode_int(stab.lam.b)],
                "tau": [[encode_int(t.a), encode_int(t.b)] for t in stab.tau],
                "k": stab.k,
                "u_word": serialize_uword(u_decompose(stab.u)),
            },
        }


def translation_data(g: GroupMatrix):
    """Choose the reduction translation for g and report its quality.

    Returns (translation, i1, e) where i1 = (|q1+tau1|^2 + |q2+tau2|^2) / 2
    and e is twice the sqrt(3)-coefficient of Im(c1 - q1 conj(tau1)
    - q2 conj(tau2)); the bottom-left norm changes by the exact factor
    i1^2 + (3/4)(e + k)^2.  The choice guarantees i1 <= 1/3 and
    |e + k| <= 1.
    """
    rows = g.rows
    g41 = rows[3][0]
    den = EisensteinFrac(g41)
    c1 = EisensteinFrac(rows[0][0]) / den
    q1 = EisensteinFrac(rows[1][0]) / den
    q2 = EisensteinFrac(rows[2][0]) / den

    tau1 = -round_nearest(q1)
    tau2 = -round_nearest(q2)
    i1 = (((q1 + EisensteinFrac.from_eisenstein(tau1)).norm()
           + (q2 + EisensteinFrac.from_eisenstein(tau2)).norm())
          / 2)

    z = (c1 - q1 * EisensteinFrac.from_eisenstein(tau1.conj())
         - q2 * EisensteinFrac.from_eisenstein(tau2.conj()))
    e = Fraction(z.num.b, z.den)

    # k must match the parity of |tau|^2 and minimize |e + k|; same-parity
    # integers are 2 apart, so the minimum is at most 1.  Ties prefer the
    # smaller |k|, then the smaller k.
    m = tau1.norm() + tau2.norm()
    base = math.floor(-e)
    candidates = [k for k in range(base - 3, base + 4) if (k - m) % 2 == 0]
    k = min(candidates, key=lambda c: (abs(e + c), abs(c), c))
    return HeisenbergTranslation(tau1, tau2, k), i1, e


def choose_translation(g: GroupMatrix) -> HeisenbergTranslation:
    """The Heisenberg translation used to reduce g (g must not fix infinity)."""
    return translation_data(g)[0]


def reduction_step(g: GroupMatrix) -> tuple[GroupMatrix, ReductionStep]:
    """One round: g' = R * N_(tau,k) * g with the chosen translation.

    Computed by direct row operations; a generic product would redo the
    structure of R and N.  The contraction 36 n' <= 31 n and the exact
    predicted ratio are both asserted.
    """
    tr, i1, e = translation_data(g)
    tau1, tau2, k = tr.tau1, tr.tau2, tr.k
    m = tau1.norm() + tau2.norm()
    corner = EisensteinInt((k - m) // 2, k)
    ct1 = tau1.conj()
    ct2 = tau2.conj()

    r1, r2, r3, r4 = g.rows
    new_rows = (
        r4,
        tuple(-(r2[j] + tau1 * r4[j]) for j in range(4)),
        tuple(-(r3[j] + tau2 * r4[j]) for j in range(4)),
        tuple(r1[j] - ct1 * r2[j] - ct2 * r3[j] + corner * r4[j]
              for j in range(4)),
    )
    out = GroupMatrix(new_rows, check=False)

    n_before = g.rows[3][0].norm()
    n_after = out.rows[3][0].norm()
    if 36 * n_after > 31 * n_before:
        raise InternalError(
            f"reduction failed to contract: {n_before} -> {n_after}")
    ratio = i1 * i1 + Fraction(3, 4) * (e + k) ** 2
    if Fraction(n_after) != n_before * ratio:
        raise InternalError(
            f"norm {n_after} does not match predicted ratio {ratio}")
    return out, ReductionStep(tau=(tau1, tau2), k=k,
                              n_before=n_before, n_after=n_after)


def step_bound(n0: int) -> int:
    """Smallest s with (36/31)^s >= n0, by exact integer comparison.

    The reduction needs at most step_bound(n0) + 1 rounds starting from
    bottom-left norm n0.
    """
    s = 0
    power36 = 1
    bound = n0
    while power36 < bound:
        s += 1
        power36 *= 36
        bound *= 31
    return s


def decompose_translation(tau, k: int) -> Word:
    """Word for the translation by (tau, k*sqrt(3)) over N, A, B.

    The four lattice directions come from conjugating N by rotations:
      (1, 0)  : N            (w, 0)  : B^-2 N B^2
      (0, 1)  : A N A        (0, w)  : A B^-2 N B^2 A
    and the vertical direction from the commutator of N with B N B^-1,
    which climbs by 2 sqrt(3) per unit.  The four horizontal factors
    compose to the right tau; their accumulated vertical offset is
    corrected through the commutator power.
    """
    tau1, tau2 = tau
    a1, b1 = tau1.a, tau1.b
    a2, b2 = tau2.a, tau2.b
    items = []
    if a1:
        items.append((Generator.N, a1))
    if b1:
        items += [(Generator.B, -2), (Generator.N, b1), (Generator.B, 2)]
    if a2:
        items += [(Generator.A, 1), (Generator.N, a2), (Generator.A, 1)]
    if b2:
        items += [(Generator.A, 1), (Generator.B, -2), (Generator.N, b2),
                  (Generator.B, 2), (Generator.A, 1)]
    k_word = a1 + b1 - a1 * b1 + a2 + b2 - a2 * b2
    s = k - k_word
    if s % 2 != 0:
        raise InternalError(
            f"vertical residual {s} for tau={tau}, k={k} is odd")
    t1 = s // 2
    if t1:
        items += [(Generator.N, t1), (Generator.B, 1), (Generator.N, 1),
                  (Generator.B, -1), (Generator.N, -t1), (Generator.B, 1),
                  (Generator.N, -1), (Generator.B, -1)]
    return Word(items)


def _uword_to_word(uword) -> Word:
    return Word(tuple((_UGEN_TO_GENERATOR[g], e) for g, e in uword))


def decompose_stabilizer(h: GroupMatrix) -> DecompositionResult:
    """Decomposition of an element fixing infinity, via its translation and
    rotation parts."""
    param = langlands_extract(h)
    word = Word(decompose_translation(param.tau, param.k).items
                + _uword_to_word(u_decompose(param.u)).items)
    return DecompositionResult(unit=param.lam, word=normalize(word))


def decompose_traced(g: GroupMatrix) -> tuple[DecompositionResult, ReductionTrace]:
    """Full decomposition with the step-by-step reduction record.

    If the rounds give g_n = R N_n ... R N_1 g, then
    g = prod_i [N_(-tau_i, -k_i) R] * g_n, and g_n splits as
    unit * translation * rotation.  Pulling the unit to the front twists
    each round's tau by it, and everything right of the unit is a word in
    the generators.  The result is verified against g before returning.
    """
    steps = []
    current = g
    while not current.fixes_infinity():
        current, step = reduction_step(current)
        steps.append(step)
    param = langlands_extract(current)
    lam = param.lam

    items = []
    for step in steps:
        t1, t2 = step.tau
        prefix = decompose_translation((-(lam * t1), -(lam * t2)), -step.k)
        items += list(prefix.items)
        items.append((Generator.R, 1))
    items += list(decompose_translation(param.tau, param.k).items)
    items += list(_uword_to_word(u_decompose(param.u)).items)
    word = normalize(Word(items))

    result = DecompositionResult(unit=lam, word=word)
    if not verify(g, result):
        raise InternalError("decomposition failed self-verification")
    return result, ReductionTrace(steps=tuple(steps), stabilizer=param)


def decompose(g: GroupMatrix) -> DecompositionResult:
    return decompose_traced(g)[0]


def verify(g: GroupMatrix, result: DecompositionResult) -> bool:
    """Exact check that unit_correction(unit) * evaluate(word) equals g."""
    return unit_correction(result.unit) * evaluate(result.word) == g


# --- randomized inputs ------------------------------------------------------

_EXPONENTS = (-3, -2, -1, 1, 2, 3)


def random_element(seed: int, max_len: int = 40) -> Word:
    """Seeded random word: uniform generators, exponents in [-3, 3] without 0.
    Returned as generated, without normalization."""
    rng = random.Random(seed)
    length = rng.randint(1, max_len)
    gens = tuple(Generator)
    return Word(tuple((rng.choice(gens), rng.choice(_EXPONENTS))
                      for _ in range(length)))


def _sorted_rotations():
    return sorted(enumerate_group(),
                  key=lambda u: tuple((e.a, e.b) for row in u.rows for e in row))


def random_stabilizer(seed: int) -> GroupMatrix:
    """Seeded random stabilizer element unit * translation * rotation with
    small parameters."""
    rng = random.Random(seed)
    lam = rng.choice(UNITS)
    tau1 = EisensteinInt(rng.randint(-5, 5), rng.randint(-5, 5))
    tau2 = EisensteinInt(rng.randint(-5, 5), rng.randint(-5, 5))
    m = tau1.norm() + tau2.norm()
    k = rng.choice([k for k in range(-10, 11) if (k - m) % 2 == 0])
    u = rng.choice(_sorted_rotations())
    return (unit_correction(lam)
            * translation_matrix((tau1, tau2), k)
            * rotation_matrix(u))


def search_unit_word(lam: EisensteinInt, max_depth: int = 6) -> Word | None:
    """Breadth-first probe for a generator word equal to unit_correction(lam).

    Exploratory, no completeness promise: whether every unit correction is
    itself a generator word is left open here, so None only means no word
    within the depth bound.
    """
    target = unit_correction(lam)
    start = identity()
    if start == target:
        return Word()
    moves = (
        (Generator.N, 1, evaluate(Word(((Generator.N, 1),)))),
        (Generator.N, -1, evaluate(Word(((Generator.N, -1),)))),
        (Generator.A, 1, evaluate(Word(((Generator.A, 1),)))),
        (Generator.B, 1, evaluate(Word(((Generator.B, 1),)))),
        (Generator.B, -1, evaluate(Word(((Generator.B, -1),)))),
        (Generator.R, 1, inversion()),
    )
    frontier = {start: ()}
    seen = {start}
    for _ in range(max_depth):
        nxt = {}
        for mat, items in frontier.items():
            for gen, exp, step in moves:
                cand = mat * step
                if cand in seen:
                    continue
                word_items = items + ((gen, exp),)
                if cand == target:
                    return normalize(Word(word_items))
                seen.add(cand)
                nxt[cand] = word_items
        frontier = nxt
    return None
