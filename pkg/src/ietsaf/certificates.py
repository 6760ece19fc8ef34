"""Polynomial criteria for stretch factors of pseudo-Anosov maps.

Two independent decision procedures for SAF vanishing, both driven by
the minimal polynomial m of the stretch factor lambda > 1:

* reciprocity: the invariant vanishes exactly when m is NOT reciprocal,
  i.e. when lambda and 1/lambda are not Galois conjugates;
* field degree: the invariant vanishes exactly when
  Q(lambda) = Q(lambda + 1/lambda), detected by comparing deg m with the
  degree of the minimal polynomial of lambda + 1/lambda computed inside
  Q[x]/(m).

The two must agree on every input; the test suite enforces this.

The nonlift certificate decides whether lambda could be the stretch
factor of a map lifted from a nonorientable surface of genus g+1: such a
lambda must be a root of a monic integer polynomial p of degree g with
constant coefficient +-1 that is reciprocal mod 2 (p, p(-x), or their
reversals).  Since the candidate p factors as (a variant of m) times a
monic integer cofactor, existence reduces to a completion problem over
GF(2): can m mod 2 (or its reversal) be multiplied by a degree g-d
polynomial with constant term 1 so that the product is self-reciprocal?
A negative answer certifies that lambda is not such a lift.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import gf2
from .errors import InputError, PolynomialError
from .field import NumberField
from .polys import (
    Poly,
    cauchy_root_bound,
    certify_irreducible,
    count_real_roots,
    is_reciprocal,
    is_squarefree,
    isolate_real_roots,
    reverse,
)

OUTCOME_NOT_LIFT = "CertifiedNotLift"
OUTCOME_INCONCLUSIVE = "Inconclusive"
REASON_DEGREE = "DegreeExceedsGenus"
REASON_CONSTANT = "ConstantNotUnit"
REASON_COMPLETION = "NoMod2Completion"


@dataclass(frozen=True)
class VanishingVerdict:
    """Outcome of one SAF-vanishing decision method."""

    vanishes: bool
    method: str                    # "reciprocity" or "field-degree"
    detail: Poly                   # reversal of m, or minimal polynomial of beta
    index: int | None = None       # [Q(lambda) : Q(lambda + 1/lambda)], field-degree only
    notes: tuple = ()

    def to_dict(self) -> dict:
        return {
            "vanishes": self.vanishes,
            "method": self.method,
            "detail": self.detail.to_string(),
            "index": self.index,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class CertVerdict:
    """Outcome of the nonorientable-lift exclusion certificate."""

    outcome: str                   # OUTCOME_NOT_LIFT or OUTCOME_INCONCLUSIVE
    reason: str | None = None      # set when certified
    variant: str | None = None     # "direct" or "reversed", set when inconclusive
    witness: int | None = None     # GF(2) completion, set when inconclusive
    notes: tuple = ()

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "reason": self.reason,
            "variant": self.variant,
            "witness": None if self.witness is None else gf2.to_string(self.witness),
            "notes": list(self.notes),
        }


def _stretch_root_interval(m: Poly, interval=None):
    """Validate preconditions and return an interval isolating a root > 1."""
    if not (m.is_monic and m.is_integral):
        raise InputError("minimal polynomial must be monic with integer coefficients")
    if m.degree < 1:
        raise InputError("minimal polynomial must have degree >= 1")
    if not is_squarefree(m):
        raise InputError(f"minimal polynomial is not squarefree: {m}")
    if m.constant() == 0:
        raise InputError("minimal polynomial must have nonzero constant term")
    if interval is not None:
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
        if lo < 1:
            raise InputError("supplied interval must lie in [1, oo)")
        if m(lo) == 0 or m(hi) == 0 or count_real_roots(m, lo, hi) != 1:
            raise InputError("supplied interval does not isolate one root > 1")
        return lo, hi
    bound = cauchy_root_bound(m)
    roots = isolate_real_roots(m, Fraction(1), bound)
    if not roots:
        raise InputError(f"no real root > 1 for {m}")
    lo, hi = roots[-1]
    # clean the endpoints so the interval is open around the root
    if m(hi) == 0:
        # the isolated root is exactly hi (rational); no roots above it
        lo, hi = (lo + hi) / 2, hi + 1
    step = (hi - lo) / 2
    while m(lo) == 0:
        u = lo + step
        if m(u) != 0 and count_real_roots(m, u, hi) == 1:
            lo = u
        else:
            step /= 2
    return lo, hi


def _degenerate_notes(m: Poly) -> tuple:
    if m.degree == 1:
        return ("degenerate input: rational stretch factor; "
                "pseudo-Anosov stretch factors are irrational",)
    return ()


def vanishing_by_reciprocity(m: Poly, interval=None) -> VanishingVerdict:
    """SAF vanishing via the reciprocity of the minimal polynomial.

    lambda and 1/lambda are Galois conjugates exactly when m is
    reciprocal, and conjugacy is equivalent to a proper (index 2)
    trace-field extension, hence to a nonzero invariant.
    """
    _stretch_root_interval(m, interval)
    return VanishingVerdict(
        vanishes=not is_reciprocal(m),
        method="reciprocity",
        detail=reverse(m),
        notes=_degenerate_notes(m),
    )


def vanishing_by_field_degree(m: Poly, interval=None) -> VanishingVerdict:
    """SAF vanishing via the degree of Q(lambda + 1/lambda).

    Builds Q[x]/(m), computes beta = lambda + 1/lambda exactly, and
    compares the degree of beta's minimal polynomial with deg m.  The
    extension degree is always 1 or 2.
    """
    lo, hi = _stretch_root_interval(m, interval)
    field = NumberField(m, lo, hi)
    lam = field.gen()
    beta = lam + lam.inverse()
    beta_min = beta.min_poly()
    if m.degree % beta_min.degree:
        raise PolynomialError(
            f"degree of {beta_min} does not divide {m.degree}; modulus reducible?"
        )
    index = m.degree // beta_min.degree
    if index not in (1, 2):
        raise PolynomialError(f"trace-field index {index} outside {{1, 2}}")
    notes = _degenerate_notes(m)
    if field.certified_prime is None:
        notes = notes + ("irreducibility unverified mod trial primes",)
    return VanishingVerdict(
        vanishes=(index == 1),
        method="field-degree",
        detail=beta_min,
        index=index,
        notes=notes,
    )


def reciprocal_mod2(p: Poly) -> bool:
    """Whether the GF(2) reduction of p equals its own reversal."""
    if not p.is_integral:
        raise PolynomialError("mod-2 reciprocity needs integer coefficients")
    if p.is_zero or int(p.constant()) % 2 == 0:
        raise PolynomialError("mod-2 reciprocity needs an odd constant term")
    return gf2.is_self_reciprocal(gf2.from_poly(p))


def _check_completion_args(mbar: int, k: int) -> None:
    if mbar == 0 or mbar & 1 == 0:
        raise PolynomialError("completion requires constant term 1 over GF(2)")
    if k < 0:
        raise InputError("completion degree must be nonnegative")


def gf2_completion_exists(mbar: int, k: int):
    """A monic q over GF(2) of degree exactly k with q(0) = 1 such that
    mbar*q is self-reciprocal, or None.

    Factor pairing: the irreducible factors of a self-reciprocal
    polynomial come in reversal pairs, so q must supply the reversal
    deficit of each factor of mbar; leftover degree is padded with
    powers of x+1, which is its own reversal.
    """
    _check_completion_args(mbar, k)
    factors = gf2.factor(mbar) if mbar > 1 else {}
    q = 1
    for f in sorted(factors):
        fr = gf2.reverse(f)
        need = factors[f] - factors.get(fr, 0)
        if fr != f and need > 0:
            for _ in range(need):
                q = gf2.mul(q, fr)
    if gf2.degree(q) > k:
        return None
    for _ in range(k - gf2.degree(q)):
        q = gf2.mul(q, 0b11)
    return q


def gf2_completion_bruteforce(mbar: int, k: int):
    """Exhaustive-search oracle with the same contract as
    gf2_completion_exists; the witness is the lexicographically first
    (smallest integer encoding) candidate."""
    _check_completion_args(mbar, k)
    if k > 24:
        raise InputError("brute-force completion limited to degree 24")
    if k == 0:
        return 1 if gf2.is_self_reciprocal(mbar) else None
    for middle in range(2 ** (k - 1)):
        q = 1 | (middle << 1) | (1 << k)
        if gf2.is_self_reciprocal(gf2.mul(mbar, q)):
            return q
    return None


def nonlift_certificate(m: Poly, g: int,
                        completion=gf2_completion_exists) -> CertVerdict:
    """Decide whether a stretch factor with minimal polynomial m passes
    the necessary conditions for being a nonorientable lift on genus g.

    Checks, in order: deg m <= g; |m(0)| = 1 (forced by the unit
    constant term of the degree-g polynomial); and existence of a GF(2)
    completion of m mod 2 or of its mod-2 reversal to a self-reciprocal
    product of degree g.  The first failure certifies exclusion; success
    returns the completion witness.
    """
    if not (m.is_monic and m.is_integral):
        raise InputError("certificate requires a monic integer polynomial")
    d = m.degree
    if d < 1:
        raise InputError("certificate requires degree >= 1")
    if g < 1:
        raise InputError("genus must be >= 1")
    if not is_squarefree(m):
        raise InputError(f"certificate input is not squarefree: {m}")
    notes = ()
    if certify_irreducible(m) is None:
        notes = ("irreducibility unverified mod trial primes",)
    if d > g:
        return CertVerdict(OUTCOME_NOT_LIFT, reason=REASON_DEGREE, notes=notes)
    if abs(m.constant()) != 1:
        return CertVerdict(OUTCOME_NOT_LIFT, reason=REASON_CONSTANT, notes=notes)
    mbar = gf2.from_poly(m)
    variants = [("direct", mbar)]
    rbar = gf2.reverse(mbar)
    if rbar != mbar:
        variants.append(("reversed", rbar))
    for name, vbar in variants:
        witness = completion(vbar, g - d)
        if witness is not None:
            return CertVerdict(OUTCOME_INCONCLUSIVE, variant=name,
                               witness=witness, notes=notes)
    return CertVerdict(OUTCOME_NOT_LIFT, reason=REASON_COMPLETION, notes=notes)
