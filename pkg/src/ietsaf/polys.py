"""Exact univariate polynomial arithmetic over the rationals.

Polynomials are immutable with `fractions.Fraction` coefficients stored
constant-first: ``Poly([-1, 0, 1])`` is ``x^2 - 1``.  The zero polynomial
has an empty coefficient tuple and degree -1.  Text I/O uses the same
constant-first convention, e.g. ``"-1,0,1"`` with entries that are
decimal integers or ``p/q`` fractions.

Besides ring and Euclidean arithmetic the module provides the
coefficient reversal ``x^n p(1/x)``, the reciprocity test (root multiset
closed under inversion), Sturm chains with real root counting and
isolation, and best-effort irreducibility certification by reduction
modulo small primes.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonSquarefreeError, ParseError, PolynomialError

TRIAL_PRIMES = (2, 3, 5, 7, 11, 13)


def _coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise PolynomialError(f"bad polynomial coefficient {c!r}")


class Poly:
    """Univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_string(cls, text: str) -> "Poly":
        """Parse a constant-first comma list of integers or p/q fractions."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or parts == [""]:
            raise ParseError("empty polynomial string")
        try:
            return cls([Fraction(p) for p in parts])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad polynomial {text!r}: {exc}") from None

    def to_string(self) -> str:
        if self.is_zero:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring arithmetic ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        n = max(len(self.coeffs), len(q.coeffs))
        return Poly([self[i] + q[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if self.is_zero or q.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(q.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(q.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolynomialError("negative polynomial power")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if q.is_zero:
            raise PolynomialError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = q.degree
        lead = q.leading
        quo = [Fraction(0)] * max(0, len(rem) - dq)
        for i in range(len(rem) - dq - 1, -1, -1):
            c = rem[i + dq] / lead
            if c:
                quo[i] = c
                for j, b in enumerate(q.coeffs):
                    rem[i + j] -= c * b
        return Poly(quo), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus and evaluation ---------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, lo: Fraction, hi: Fraction):
        """Interval Horner: an enclosure of p([lo, hi])."""
        if self.is_zero:
            return Fraction(0), Fraction(0)
        vlo = vhi = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            products = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
            vlo, vhi = min(products) + c, max(products) + c
        return vlo, vhi

    def monic(self) -> "Poly":
        if self.is_zero:
            raise PolynomialError("cannot normalize zero polynomial")
        lead = self.leading
        if lead == 1:
            return self
        return Poly([c / lead for c in self.coeffs])

    # -- display -------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            terms.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Poly({self.to_string()!r})"


X = Poly([0, 1])


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over the rationals (1 for coprime inputs)."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def poly_xgcd(p: Poly, q: Poly):
    """Extended gcd: (g, u, v) with u*p + v*q = g, g monic or zero."""
    a, b = p, q
    ua, va = Poly([1]), Poly()
    ub, vb = Poly(), Poly([1])
    while not b.is_zero:
        quo, rem = divmod(a, b)
        a, b = b, rem
        ua, ub = ub, ua - quo * ub
        va, vb = vb, va - quo * vb
    if a.is_zero:
        return a, ua, va
    lead = a.leading
    return a.monic(), Poly([c / lead for c in ua.coeffs]), Poly([c / lead for c in va.coeffs])


def reverse(p: Poly) -> Poly:
    """The coefficient reversal x^n p(1/x); degree drops when p(0) = 0."""
    if p.is_zero:
        raise PolynomialError("cannot reverse the zero polynomial")
    return Poly(tuple(reversed(p.coeffs)))


def is_reciprocal(p: Poly) -> bool:
    """Whether the root multiset of p is closed under r -> 1/r.

    For monic p with p(0) = a this holds exactly when a is +1 or -1 and
    the coefficient reversal equals a*p.  Requires p monic with nonzero
    constant term.
    """
    if p.is_zero or not p.is_monic:
        raise PolynomialError("reciprocity test requires a monic polynomial")
    a = p.constant()
    if a == 0:
        raise PolynomialError("reciprocity test requires nonzero constant term")
    if a != 1 and a != -1:
        return False
    return reverse(p) == a * p


def is_squarefree(p: Poly) -> bool:
    if p.is_zero:
        return False
    if p.degree == 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def cauchy_root_bound(p: Poly) -> Fraction:
    """1 + max |c_i| / |lead|: every real root lies in (-B, B)."""
    if p.is_zero or p.degree < 1:
        raise PolynomialError("root bound needs degree >= 1")
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


# -- Sturm chains and real root isolation ------------------------------


def sturm_chain(p: Poly):
    """Sturm chain of a squarefree polynomial."""
    if p.is_zero:
        raise PolynomialError("Sturm chain of the zero polynomial")
    if not is_squarefree(p):
        raise NonSquarefreeError(
            f"polynomial is not squarefree: gcd with derivative is "
            f"{poly_gcd(p, p.derivative())}"
        )
    chain = [p]
    if p.degree >= 1:
        chain.append(p.derivative())
        while not chain[-1].is_zero and chain[-1].degree > 0:
            chain.append(-(chain[-2] % chain[-1]))
        if chain[-1].is_zero:
            chain.pop()
    return chain


def _variations(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Poly, lo: Fraction, hi: Fraction, chain=None) -> int:
    """Number of real roots of squarefree p in the half-open (lo, hi]."""
    if lo >= hi:
        raise PolynomialError("empty interval for root counting")
    if chain is None:
        chain = sturm_chain(p)
    vlo = _variations([q(lo) for q in chain])
    vhi = _variations([q(hi) for q in chain])
    return vlo - vhi


def isolate_real_roots(p: Poly, lo: Fraction, hi: Fraction):
    """Disjoint intervals (a, b], each holding exactly one root in (lo, hi].

    Requires p squarefree; intervals are returned in increasing order and
    jointly cover all roots of p in (lo, hi].
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise PolynomialError("isolation interval is empty")
    chain = sturm_chain(p)
    var_cache = {}

    def var(x):
        if x not in var_cache:
            var_cache[x] = _variations([q(x) for q in chain])
        return var_cache[x]

    out = []

    def split(a, b, count):
        if count == 0:
            return
        if count == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        left = var(a) - var(mid)
        split(a, mid, left)
        split(mid, b, count - left)

    split(lo, hi, var(lo) - var(hi))
    return out


# -- reduction mod p and irreducibility certification -------------------


def _int_coeffs(p: Poly):
    if not p.is_integral:
        raise PolynomialError("integer coefficients required")
    return [int(c) for c in p.coeffs]


def _mtrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mmul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return _mtrim(out)


def _mmod(a, f, m):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], m - 2, m)
    for i in range(len(a) - df - 1, -1, -1):
        c = (a[i + df] * inv_lead) % m
        if c:
            for j, y in enumerate(f):
                a[i + j] = (a[i + j] - c * y) % m
    return _mtrim(a[:df])

def _mgcd(a, b, m):
    a, b = _mtrim(list(a)), _mtrim(list(b))
    while b:
        a, b = b, _mmod(a, b, m)
    return a


def _mpowmod(base, e, f, m):
    result = [1]
    base = _mmod(base, f, m)
    while e:
        if e & 1:
            result = _mmod(_mmul(result, base, m), f, m)
        base = _mmod(_mmul(base, base, m), f, m)
        e >>= 1
    return result


def _prime_factors(n: int):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return sorted(out)


def is_irreducible_mod(p: Poly, q: int) -> bool:
    """Rabin irreducibility test for p reduced modulo the prime q."""
    coeffs = [c % q for c in _int_coeffs(p)]
    f = _mtrim(list(coeffs))
    d = len(f) - 1
    if d < p.degree:
        return False  # leading coefficient vanished mod q
    if d == 0:
        return False
    if d == 1:
        return True
    x = [0, 1]
    for r in _prime_factors(d):
        h = _mpowmod(x, q ** (d // r), f, q)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % q
        g = _mgcd(_mtrim(diff), f, q)
        if len(g) - 1 != 0:
            return False
    h = _mpowmod(x, q ** d, f, q)
    return h == [0, 1]


def certify_irreducible(p: Poly, primes=TRIAL_PRIMES):
    """First prime in `primes` modulo which p is irreducible, else None.

    Irreducibility modulo any prime implies irreducibility over Q for a
    monic integer polynomial, so a hit is a sound certificate; a miss
    proves nothing.
    """
    if not (p.is_monic and p.is_integral and p.degree >= 1):
        raise PolynomialError("irreducibility certification needs a monic integer polynomial")
    for q in primes:
        if is_irreducible_mod(p, q):
            return q
    return None
