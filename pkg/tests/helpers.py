"""Shared generators and oracles for the test suite."""

from fractions import Fraction

from ietsaf import IET, NumberField, Poly, certify_irreducible, is_squarefree, isolate_real_roots
from ietsaf.polys import cauchy_root_bound


def random_cubic_field(rng, above_one=False):
    """A certified-irreducible monic cubic field with a random real root."""
    while True:
        p = Poly([rng.randint(-5, 5) for _ in range(3)] + [1])
        if not p or p.degree != 3 or not is_squarefree(p):
            continue
        if certify_irreducible(p) is None:
            continue
        bound = cauchy_root_bound(p)
        lo = Fraction(1) if above_one else -bound
        roots = isolate_real_roots(p, lo, bound)
        if not roots:
            continue
        a, b = roots[rng.randrange(len(roots))]
        return NumberField(p, a, b)


def random_quartic_field_above_one(rng):
    while True:
        p = Poly([rng.randint(-5, 5) for _ in range(4)] + [1])
        if not p or p.degree != 4 or not is_squarefree(p):
            continue
        if certify_irreducible(p) is None:
            continue
        roots = isolate_real_roots(p, Fraction(1), cauchy_root_bound(p))
        if not roots:
            continue
        a, b = roots[-1]
        return NumberField(p, a, b)


def random_positive(field, rng, span=3):
    while True:
        coords = [Fraction(rng.randint(-span, span), rng.randint(1, span))
                  for _ in range(field.degree)]
        value = field.element(coords)
        if value.sign() > 0:
            return value


def random_iet(field, rng, n=None, circle=False, total=None):
    """Random IET; when total is given the lengths are rescaled to meet it."""
    n = n or rng.randint(2, 5)
    lengths = [random_positive(field, rng) for _ in range(n)]
    acc = field.zero()
    for l in lengths:
        acc = acc + l
    if total is not None:
        factor = total / acc
        lengths = [l * factor for l in lengths]
        acc = total
    perm = list(range(n))
    rng.shuffle(perm)
    return IET(field, acc, lengths, perm, circle)


def random_pair_involution(field, rng, max_pairs=3, allow_fixed=True):
    """Random valid pair involution: equal-length paired blocks in random
    cyclic positions, optionally with a self-paired block."""
    k = rng.randint(1, max_pairs)
    tokens = []
    for i in range(k):
        length = random_positive(field, rng)
        tokens += [(i, length), (i, length)]
    if allow_fixed and rng.random() < 0.3:
        tokens.append((k, random_positive(field, rng)))
    rng.shuffle(tokens)
    partner = {}
    pairing = [None] * len(tokens)
    for idx, (label, _) in enumerate(tokens):
        if label in partner:
            j = partner.pop(label)
            pairing[idx], pairing[j] = j, idx
        else:
            partner[label] = idx
    for idx in range(len(tokens)):
        if pairing[idx] is None:
            pairing[idx] = idx
    return IET.pair_involution(field, [t[1] for t in tokens], pairing, circle=True)


def float_pieces(iet):
    return [(float(u), float(v), float(t)) for u, v, t in iet.pieces()]


def simulate(pieces, x):
    """Floating-point evaluation of an IET given float pieces."""
    for u, v, t in pieces:
        if u <= x < v:
            return x + t
    raise AssertionError(f"{x} not in any piece")
