"""Interval exchange transformations over a number field.

An IET is a piecewise translation of [0, L) given by subinterval lengths
(field elements) and the permutation telling where each subinterval
lands in the image; translations are always derived from those two, so
inconsistent inputs cannot be represented.  A `circle` flag marks maps
whose endpoints are identified, which is what rotation-by-a-constant
needs.

The Sah-Arnoux-Fathi invariant of the map, sum of length wedge
translation over Q, is returned as an exact antisymmetric rational
matrix in the field's power basis (WedgeClass).  Vanishing of the
invariant does not depend on the basis choice.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .errors import DomainError, FieldMismatchError, InputError, IterationCapError
from .field import AlgNum, NumberField

FIRST_RETURN_CAP = 100_000


def _coerce(field: NumberField, x) -> AlgNum:
    if isinstance(x, AlgNum):
        if x.field is not field and x.field != field:
            raise FieldMismatchError("value belongs to a different number field")
        return x
    if isinstance(x, (int, Fraction)):
        return field.from_rational(x)
    raise InputError(f"cannot interpret {x!r} as a field element")


def _maximum(a: AlgNum, b: AlgNum) -> AlgNum:
    return b if a < b else a


def _minimum(a: AlgNum, b: AlgNum) -> AlgNum:
    return b if b < a else a


class WedgeClass:
    """Antisymmetric rational matrix representing an element of K wedge_Q K."""

    __slots__ = ("field", "rows")

    def __init__(self, field: NumberField, rows):
        rows = tuple(tuple(Fraction(c) for c in row) for row in rows)
        d = field.degree
        if len(rows) != d or any(len(r) != d for r in rows):
            raise InputError("wedge matrix must be d x d")
        for i in range(d):
            for j in range(d):
                if rows[i][j] != -rows[j][i]:
                    raise InputError("wedge matrix must be antisymmetric")
        self.field = field
        self.rows = rows

    @classmethod
    def zero(cls, field: NumberField) -> "WedgeClass":
        d = field.degree
        return cls(field, [[Fraction(0)] * d for _ in range(d)])

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.rows for c in row)

    def __add__(self, other: "WedgeClass") -> "WedgeClass":
        if not isinstance(other, WedgeClass):
            return NotImplemented
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatchError("wedge classes over different fields")
        return WedgeClass(
            self.field,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __neg__(self) -> "WedgeClass":
        return WedgeClass(self.field, [[-c for c in row] for row in self.rows])

    def __sub__(self, other: "WedgeClass") -> "WedgeClass":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WedgeClass):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"WedgeClass({self.rows})"


class IET:
    """Exchange of n subintervals of [0, L), with optional circle semantics."""

    __slots__ = ("field", "total", "lengths", "perm", "circle",
                 "_breaks", "_translations")

    def __init__(self, field: NumberField, total, lengths, perm, circle=False):
        total = _coerce(field, total)
        lengths = tuple(_coerce(field, l) for l in lengths)
        perm = tuple(int(k) for k in perm)
        n = len(lengths)
        if n == 0:
            raise InputError("an IET needs at least one interval")
        if sorted(perm) != list(range(n)):
            raise InputError("perm not a bijection")
        for l in lengths:
            if l.sign() <= 0:
                raise InputError("nonpositive interval length")
        acc = field.zero()
        for l in lengths:
            acc = acc + l
        if acc != total:
            raise InputError("lengths do not sum to the total length")
        self.field = field
        self.total = total
        self.lengths = lengths
        self.perm = perm
        self.circle = bool(circle)
        self._breaks = None
        self._translations = None

    # -- derived data ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.lengths)

    def breaks(self):
        """Partition endpoints a_0 = 0 < a_1 < ... < a_n = L."""
        if self._breaks is None:
            acc = self.field.zero()
            out = [acc]
            for l in self.lengths:
                acc = acc + l
                out.append(acc)
            self._breaks = tuple(out)
        return self._breaks

    def translations(self):
        """Per-interval translations, derived from lengths and perm."""
        if self._translations is None:
            n = self.n
            inv = [0] * n
            for i, k in enumerate(self.perm):
                inv[k] = i
            offsets = [self.field.zero()]
            for k in range(n - 1):
                offsets.append(offsets[-1] + self.lengths[inv[k]])
            breaks = self.breaks()
            self._translations = tuple(
                offsets[self.perm[i]] - breaks[i] for i in range(n)
            )
        return self._translations

    def pieces(self):
        """List of (start, end, translation) triples in domain order."""
        breaks = self.breaks()
        ts = self.translations()
        return [(breaks[i], breaks[i + 1], ts[i]) for i in range(self.n)]

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, field: NumberField, total, circle=False) -> "IET":
        return cls(field, total, [total], [0], circle)

    @classmethod
    def rotation(cls, field: NumberField, total, c, circle=True) -> "IET":
        """x -> x + c (mod total)."""
        total = _coerce(field, total)
        c = _coerce(field, c)
        if c.sign() == 0:
            return cls.identity(field, total, circle)
        if c.sign() < 0 or not c < total:
            raise DomainError("rotation constant outside [0, total)")
        return cls(field, total, [total - c, c], [1, 0], circle)

    @classmethod
    def from_pieces(cls, field: NumberField, total, pieces, circle=False) -> "IET":
        """Build from (start, end, translation) triples; validates that the
        pieces tile [0, L) and that their images tile it as well."""
        total = _coerce(field, total)
        pieces = sorted(pieces, key=lambda p: p[0])
        if not pieces:
            raise InputError("no pieces")
        if pieces[0][0] != field.zero():
            raise InputError("pieces do not start at 0")
        for (u, v, _), (u2, _, _) in zip(pieces, pieces[1:]):
            if v != u2:
                raise InputError("pieces do not tile the domain")
        if pieces[-1][1] != total:
            raise InputError("pieces do not reach the total length")
        images = sorted(
            ((u + t, v + t, i) for i, (u, v, t) in enumerate(pieces)),
            key=lambda p: p[0],
        )
        if images[0][0] != field.zero():
            raise InputError("image intervals do not tile [0, L)")
        for (a, b, _), (a2, _, _) in zip(images, images[1:]):
            if b != a2:
                raise InputError("image intervals do not tile [0, L)")
        if images[-1][1] != total:
            raise InputError("image intervals do not tile [0, L)")
        perm = [0] * len(pieces)
        for slot, (_, _, i) in enumerate(images):
            perm[i] = slot
        lengths = [v - u for u, v, _ in pieces]
        out = cls(field, total, lengths, perm, circle)
        assert tuple(out.translations()) == tuple(t for _, _, t in pieces)
        return out

    @classmethod
    def pair_involution(cls, field: NumberField, block_lengths, pairing,
                        circle=True) -> "IET":
        """The involution swapping equal-length paired blocks in place.

        `pairing` is a 0-based involutive permutation; self-paired blocks
        stay fixed pointwise.  Paired blocks must have exactly equal
        lengths, which is also what makes the result an involution.
        """
        lengths = tuple(_coerce(field, l) for l in block_lengths)
        pairing = tuple(int(k) for k in pairing)
        n = len(lengths)
        if sorted(pairing) != list(range(n)):
            raise InputError("pairing not a bijection")
        for i, j in enumerate(pairing):
            if pairing[j] != i:
                raise InputError("pairing not an involution")
            if j != i and lengths[i] != lengths[j]:
                raise InputError(f"length mismatch within pair ({i}, {j})")
        acc = field.zero()
        for l in lengths:
            acc = acc + l
        return cls(field, acc, lengths, pairing, circle)

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x) -> AlgNum:
        x = _coerce(self.field, x)
        if x.sign() < 0 or not x < self.total:
            raise DomainError("point outside [0, L)")
        breaks = self.breaks()
        lo, hi = 0, self.n  # invariant: breaks[lo] <= x < breaks[hi]
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if x < breaks[mid]:
                hi = mid
            else:
                lo = mid
        return x + self.translations()[lo]

    # -- algebra of maps ------------------------------------------------------

    def compose(self, other: "IET") -> "IET":
        """The IET x -> self(other(x))."""
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatchError("composition of IETs over different fields")
        if other.total != self.total:
            raise DomainError("composition of IETs with different totals")
        pieces = []
        for u, v, s in other.pieces():
            img_lo, img_hi = u + s, v + s
            for c, cp, t in self.pieces():
                a = _maximum(img_lo, c)
                b = _minimum(img_hi, cp)
                if a < b:
                    pieces.append((a - s, b - s, s + t))
        return IET.from_pieces(self.field, self.total, pieces,
                               self.circle and other.circle)

    def inverse(self) -> "IET":
        pieces = [(u + t, v + t, -t) for u, v, t in self.pieces()]
        return IET.from_pieces(self.field, self.total, pieces, self.circle)

    def rotate(self, c) -> "IET":
        """x -> self(x) + c (mod L); requires circle semantics."""
        if not self.circle:
            raise DomainError("rotation requires circle semantics")
        c = _coerce(self.field, c)
        if c.sign() < 0 or not c < self.total:
            raise DomainError("rotation constant outside [0, L)")
        total = self.total
        pieces = []
        for u, v, t in self.pieces():
            t2 = t + c
            if not (u + t2) < total:          # whole image wraps
                pieces.append((u, v, t2 - total))
            elif total < v + t2:              # image straddles the endpoint
                w = total - t2
                pieces.append((u, w, t2))
                pieces.append((w, v, t2 - total))
            else:
                pieces.append((u, v, t2))
        return IET.from_pieces(self.field, total, pieces, True)

    def scale(self, s) -> "IET":
        """Conjugate by x -> s*x: an IET on [0, s*L)."""
        s = _coerce(self.field, s)
        if s.sign() <= 0:
            raise DomainError("scale factor must be positive")
        return IET(self.field, self.total * s,
                   [l * s for l in self.lengths], self.perm, self.circle)

    def first_return(self, b, cap: int = FIRST_RETURN_CAP) -> "IET":
        """The induced first-return map on [0, b)."""
        return self._first_return_with_times(b, cap)[0]

    def _first_return_with_times(self, b, cap: int = FIRST_RETURN_CAP):
        """First-return map plus the return time of each induced piece.

        Subintervals of [0, b) are pushed forward through the map; a piece
        splits whenever its orbit straddles a discontinuity or the point b.
        Each application of the map to a piece costs one unit of the cap.
        """
        b = _coerce(self.field, b)
        if b.sign() <= 0 or self.total < b:
            raise DomainError("return interval must satisfy 0 < b <= L")
        zero = self.field.zero()
        my_pieces = self.pieces()
        work = deque([(zero, b, zero, 0)])  # (x_lo, x_hi, translation so far, steps)
        done = []
        budget = cap
        while work:
            lo, hi, trans, steps = work.popleft()
            budget -= 1
            if budget < 0:
                raise IterationCapError(
                    f"first-return induction exceeded {cap} piece iterations"
                )
            cur_lo, cur_hi = lo + trans, hi + trans
            for c, cp, t in my_pieces:
                a = _maximum(cur_lo, c)
                z = _minimum(cur_hi, cp)
                if not a < z:
                    continue
                ntrans = trans + t
                xs, xe = a - trans, z - trans
                nlo, nhi = xs + ntrans, xe + ntrans
                if not nlo < b:
                    work.append((xs, xe, ntrans, steps + 1))
                elif not b < nhi:
                    done.append((xs, xe, ntrans, steps + 1))
                else:
                    w = b - ntrans
                    done.append((xs, w, ntrans, steps + 1))
                    work.append((w, xe, ntrans, steps + 1))
        done.sort(key=lambda p: p[0])
        iet = IET.from_pieces(self.field, b, [(u, v, t) for u, v, t, _ in done],
                              self.circle)
        times = [s for _, _, _, s in done]
        return iet, times

    # -- canonical form and equality --------------------------------------------

    def canonical(self) -> "IET":
        """Merge adjacent intervals with equal translations."""
        merged = []
        for u, v, t in self.pieces():
            if merged and merged[-1][2] == t:
                merged[-1] = (merged[-1][0], v, t)
            else:
                merged.append((u, v, t))
        if len(merged) == self.n:
            return self
        return IET.from_pieces(self.field, self.total, merged, self.circle)

    def __eq__(self, other) -> bool:
        """Equality as piecewise maps: same field, total, and canonical pieces.

        The circle flag is semantic annotation and is ignored.
        """
        if not isinstance(other, IET):
            return NotImplemented
        if self.field != other.field or self.total != other.total:
            return False
        return self.canonical().pieces() == other.canonical().pieces()

    # -- the invariant ---------------------------------------------------------

    def saf(self) -> WedgeClass:
        """Sum of length wedge translation, as an antisymmetric matrix."""
        d = self.field.degree
        rows = [[Fraction(0)] * d for _ in range(d)]
        for l, t in zip(self.lengths, self.translations()):
            v, w = l.coords, t.coords
            for i in range(d):
                if v[i] or w[i]:
                    for j in range(i + 1, d):
                        m = v[i] * w[j] - w[i] * v[j]
                        if m:
                            rows[i][j] += m
                            rows[j][i] -= m
        return WedgeClass(self.field, rows)

    def __repr__(self):
        kind = "circle" if self.circle else "interval"
        return (f"IET(n={self.n}, total={self.total!r}, perm={self.perm}, "
                f"{kind})")


def cyclic_discontinuities(f: IET):
    """Positions where f is genuinely discontinuous as a circle map.

    A chart breakpoint is spurious on the circle when the neighbouring
    translations agree modulo the total length (the chart seam at 0 is
    treated the same way).
    """
    pieces = f.canonical().pieces()
    total = f.total
    out = []
    n = len(pieces)
    for i in range(n):
        _, v, t = pieces[i]
        t_next = pieces[(i + 1) % n][2]
        diff = t_next - t
        if diff.is_zero() or (diff - total).is_zero() or (diff + total).is_zero():
            continue
        out.append(v if i < n - 1 else f.field.zero())
    return sorted(out)


def rotation_conjugacy(f: IET, g: IET):
    """An offset c with f == R_c o g o R_c^-1, or None when none exists.

    Both maps must be circle IETs over the same field with the same total.
    Candidates are pinned down by matching discontinuity sets, so the
    search is finite and the returned witness is exact.
    """
    if (g.field is not f.field and g.field != f.field) or f.total != g.total:
        return None
    total = f.total
    fd = cyclic_discontinuities(f)
    gd = cyclic_discontinuities(g)
    if not fd and not gd:
        # both are plain rotations; conjugation cannot change the constant
        return f.field.zero() if f == g else None
    if len(fd) != len(gd) or not fd:
        return None
    g0 = gd[0]
    for d in fd:
        c = d - g0
        if c.sign() < 0:
            c = c + total
        rot = IET.rotation(f.field, total, c)
        if rot.compose(g).compose(rot.inverse()) == f:
            return c
    return None
