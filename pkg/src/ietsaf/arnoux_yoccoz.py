"""The Arnoux-Yoccoz family of self-similar interval exchanges.

For each g >= 3 the construction starts from the unique root alpha in
(0, 1) of x^g + x^(g-1) + ... + x - 1.  The boundary of a Moebius-band
neighbourhood of a one-sided curve is a circle of circumference 2
carrying intervals of lengths alpha, alpha, alpha^2, alpha^2, ...,
alpha^g, alpha^g in cyclic order; gluing each adjacent equal pair by a
translation gives an involution of the circle.  Passing to the
orientation double cover halves the picture and composes with the
half-circle rotation:

    lift = rotate(scale(involution, 1/2), 1/2)     (circle of length 1)

The lift is the classical Arnoux-Yoccoz interval exchange.  Its stretch
factor 1/alpha has minimal polynomial x^g - x^(g-1) - ... - x - 1.

Self-similarity: the first-return map of the lift to [0, alpha) is
conjugate to the alpha-scaled lift by an exact rotation of the return
circle; the conjugating offset is (3*alpha - 1)/2 in the chart used
here.  The check below verifies the conjugacy exactly and returns the
witness offset.  (Plain chart equality of the two maps does not hold in
this chart or any rotated or reflected one; the conjugacy is the
invariant content.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .field import AlgNum, NumberField
from .iet import IET, rotation_conjugacy
from .polys import Poly

GENUS_MIN = 3
HALF = Fraction(1, 2)


def ay_alpha_poly(g: int) -> Poly:
    """x^g + x^(g-1) + ... + x - 1."""
    if g < 2:
        raise InputError("alpha polynomial needs g >= 2")
    return Poly([-1] + [1] * g)


def ay_alpha(g: int) -> NumberField:
    """The field Q(alpha_g) with alpha_g isolated inside (0, 1)."""
    return NumberField(ay_alpha_poly(g), 0, 1)


def ay_stretch_minpoly(g: int) -> Poly:
    """x^g - x^(g-1) - ... - x - 1, the minimal polynomial of 1/alpha_g."""
    if g < 2:
        raise InputError("stretch polynomial needs g >= 2")
    return Poly([-1] * g + [1])


def _blocks(field: NumberField, g: int):
    alpha = field.gen()
    out = []
    power = field.one()
    for _ in range(g):
        power = power * alpha
        out.append(power)
    return out


def ay_boundary_involution(g: int, field: NumberField | None = None) -> IET:
    """The gluing involution on the circle of circumference 2.

    Blocks alpha, alpha, alpha^2, alpha^2, ..., alpha^g, alpha^g in
    cyclic order starting at 0, adjacent equal blocks swapped.
    """
    if g < GENUS_MIN:
        raise InputError(f"construction requires g >= {GENUS_MIN}")
    if field is None:
        field = ay_alpha(g)
    powers = _blocks(field, g)
    lengths = []
    pairing = []
    for k, p in enumerate(powers):
        lengths += [p, p]
        pairing += [2 * k + 1, 2 * k]
    return IET.pair_involution(field, lengths, pairing, circle=True)


def ay_perturbed_involution(g: int, field: NumberField | None = None) -> IET:
    """Negative control: a valid pair involution with the cyclic positions
    of one alpha^2 and one alpha^3 block exchanged.  Not self-similar."""
    if g < GENUS_MIN:
        raise InputError(f"construction requires g >= {GENUS_MIN}")
    if field is None:
        field = ay_alpha(g)
    powers = _blocks(field, g)
    lengths = []
    for p in powers:
        lengths += [p, p]
    lengths[3], lengths[4] = lengths[4], lengths[3]
    pairing = []
    for k in range(g):
        pairing += [2 * k + 1, 2 * k]
    pairing[2], pairing[4] = 4, 2
    pairing[3], pairing[5] = 5, 3
    return IET.pair_involution(field, lengths, pairing, circle=True)


def ay_lift(g: int, field: NumberField | None = None,
            involution: IET | None = None) -> IET:
    """The double-cover interval exchange, normalized to circle length 1."""
    if involution is None:
        involution = ay_boundary_involution(g, field)
    return involution.scale(HALF).rotate(HALF)


def ay_self_similarity_witness(g: int, involution: IET | None = None):
    """The exact rotation offset conjugating the alpha-scaled lift to the
    first-return map on [0, alpha), or None when no conjugacy exists."""
    if g < GENUS_MIN:
        raise InputError(f"construction requires g >= {GENUS_MIN}")
    lift = ay_lift(g, involution=involution)
    alpha = lift.field.gen()
    returned = lift.first_return(alpha)
    scaled = lift.scale(alpha)
    return rotation_conjugacy(returned, scaled)


def ay_self_similarity_check(g: int, involution: IET | None = None) -> bool:
    """Whether the first-return map on [0, alpha) is an exact rotation
    conjugate of the alpha-scaled lift (the renormalization property)."""
    return ay_self_similarity_witness(g, involution=involution) is not None


@dataclass(frozen=True)
class AYSystem:
    """All constructed objects for one genus."""

    g: int
    field: NumberField
    boundary_involution: IET
    lift: IET
    stretch_minpoly: Poly

    @classmethod
    def build(cls, g: int) -> "AYSystem":
        field = ay_alpha(g)
        involution = ay_boundary_involution(g, field)
        lift = involution.scale(HALF).rotate(HALF)
        system = cls(g, field, involution, lift, ay_stretch_minpoly(g))
        system._check()
        return system

    def _check(self) -> None:
        field = self.field
        alpha = field.gen()
        acc = field.zero()
        power = field.one()
        for _ in range(self.g):
            power = power * alpha
            acc = acc + power
        if not (acc - 1).is_zero():
            raise InputError("alpha powers do not sum to 1")
        two = field.from_rational(2)
        if self.boundary_involution.compose(self.boundary_involution) != \
                IET.identity(field, two):
            raise InputError("boundary map is not an involution")
        if self.lift != self.boundary_involution.scale(HALF).rotate(HALF):
            raise InputError("lift does not match its construction")

    def alpha(self) -> AlgNum:
        return self.field.gen()
