"""Exact arithmetic in a truncated ring of hyperplane classes.

The ambient configuration spaces are products of projective spaces

    M = D_1 x D_d x (X^1 x ... x X^m) x (X_1 x ... x X_n),

where D_1 = P^2 parametrises lines, D_d = P^{delta(d)} parametrises degree-d
plane curves (delta(d) = d(d+3)/2), and every X factor is a copy of P^2
carrying a marked point.  The X^j factors (variables b_1..b_m) carry marked
points of singular type; the X_i factors (variables a_1..a_n) carry tangency
marked points.

The cohomology ring of such a product is generated by one hyperplane class
per factor, subject only to nilpotency:

    y1^3 = 0,    yd^(delta+1) = 0,    b_j^3 = 0,    a_i^3 = 0.

Ring elements are stored sparsely as a mapping from monomials to exact
integer coefficients; truncation is applied eagerly during multiplication.
Integration extracts the coefficient of the top class, and fiber integration
over the last X_i factor extracts the coefficient of a_n^2.
"""

from __future__ import annotations

from dataclasses import dataclass


def delta(d: int) -> int:
    """Dimension d(d+3)/2 of the space of degree-d plane curves."""
    return d * (d + 3) // 2


@dataclass(frozen=True)
class SpaceSig:
    """Ambient-space descriptor: degree d, m singular points, n tangency points."""

    d: int
    m: int = 0
    n: int = 0

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"degree must be positive, got {self.d}")
        if self.m < 0 or self.n < 0:
            raise ValueError(f"marked-point counts must be non-negative: m={self.m}, n={self.n}")

    @property
    def delta(self) -> int:
        return delta(self.d)

    @property
    def dim(self) -> int:
        """Complex dimension 2 + delta(d) + 2m + 2n."""
        return 2 + self.delta + 2 * self.m + 2 * self.n

    def add_a(self, count: int = 1) -> "SpaceSig":
        """The same space with `count` extra tangency points."""
        return SpaceSig(self.d, self.m, self.n + count)

    def drop_a(self, count: int = 1) -> "SpaceSig":
        """The same space with `count` fewer tangency points."""
        return SpaceSig(self.d, self.m, self.n - count)


# A monomial is (exp of y1, exp of yd, exps of b_1..b_m, exps of a_1..a_n).
Monomial = tuple  # (int, int, tuple[int, ...], tuple[int, ...])


def _mono_degree(mono: Monomial) -> int:
    e1, ed, eb, ea = mono
    return e1 + ed + sum(eb) + sum(ea)


class RingElem:
    """A sparse integer combination of monomials on a fixed ambient space.

    Supports +, -, * (both ring product and integer scaling).  Zero is the
    empty term map.  Multiplication silently drops any monomial whose
    exponents exceed the nilpotency caps.
    """

    __slots__ = ("sig", "terms")

    def __init__(self, sig: SpaceSig, terms: dict | None = None):
        self.sig = sig
        self.terms = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff != 0:
                    self._check_mono(mono)
                    self.terms[mono] = coeff

    def _check_mono(self, mono: Monomial):
        e1, ed, eb, ea = mono
        sig = self.sig
        if len(eb) != sig.m or len(ea) != sig.n:
            raise ValueError(f"monomial {mono} does not fit space {sig}")
        if not (0 <= e1 <= 2 and 0 <= ed <= sig.delta
                and all(0 <= e <= 2 for e in eb) and all(0 <= e <= 2 for e in ea)):
            raise ValueError(f"monomial {mono} violates nilpotency caps for {sig}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, sig: SpaceSig) -> "RingElem":
        return cls(sig)

    @classmethod
    def one(cls, sig: SpaceSig) -> "RingElem":
        return cls.monomial(sig)

    @classmethod
    def monomial(cls, sig: SpaceSig, y1: int = 0, yd: int = 0,
                 b: tuple = (), a: tuple = (), coeff: int = 1) -> "RingElem":
        eb = tuple(b) + (0,) * (sig.m - len(b))
        ea = tuple(a) + (0,) * (sig.n - len(a))
        return cls(sig, {(y1, yd, eb, ea): coeff})

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "RingElem") -> "RingElem":
        if self.sig != other.sig:
            raise ValueError(f"space mismatch: {self.sig} vs {other.sig}")
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, 0) + coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        res = RingElem(self.sig)
        res.terms = out
        return res

    def __neg__(self) -> "RingElem":
        res = RingElem(self.sig)
        res.terms = {mono: -coeff for mono, coeff in self.terms.items()}
        return res

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-other)

    def __mul__(self, other) -> "RingElem":
        if isinstance(other, int):
            res = RingElem(self.sig)
            if other:
                res.terms = {m: c * other for m, c in self.terms.items()}
            return res
        if self.sig != other.sig:
            raise ValueError(f"space mismatch: {self.sig} vs {other.sig}")
        cap_d = self.sig.delta
        out: dict = {}
        for (e1, ed, eb, ea), c1 in self.terms.items():
            for (f1, fd, fb, fa), c2 in other.terms.items():
                g1 = e1 + f1
                if g1 > 2:
                    continue
                gd = ed + fd
                if gd > cap_d:
                    continue
                gb = tuple(x + y for x, y in zip(eb, fb))
                if any(e > 2 for e in gb):
                    continue
                ga = tuple(x + y for x, y in zip(ea, fa))
                if any(e > 2 for e in ga):
                    continue
                mono = (g1, gd, gb, ga)
                c = out.get(mono, 0) + c1 * c2
                if c:
                    out[mono] = c
                else:
                    del out[mono]
        res = RingElem(self.sig)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, RingElem) and self.sig == other.sig
                and self.terms == other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (_mono_degree(m), m)):
            e1, ed, eb, ea = mono
            factors = []
            if e1:
                factors.append("y1" + (f"^{e1}" if e1 > 1 else ""))
            if ed:
                factors.append("yd" + (f"^{ed}" if ed > 1 else ""))
            for j, e in enumerate(eb, 1):
                if e:
                    factors.append(f"b{j}" + (f"^{e}" if e > 1 else ""))
            for i, e in enumerate(ea, 1):
                if e:
                    factors.append(f"a{i}" + (f"^{e}" if e > 1 else ""))
            coeff = self.terms[mono]
            body = "*".join(factors) or "1"
            parts.append(f"{coeff}*{body}" if (coeff != 1 or not factors) else body)
        return " + ".join(parts)

    # -- grading ------------------------------------------------------------

    def degrees(self) -> set:
        return {_mono_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1


# -- generators and standard classes ----------------------------------------

def y1(sig: SpaceSig) -> RingElem:
    return RingElem.monomial(sig, y1=1)


def yd(sig: SpaceSig) -> RingElem:
    return RingElem.monomial(sig, yd=1)


def b(sig: SpaceSig, j: int) -> RingElem:
    if not 1 <= j <= sig.m:
        raise ValueError(f"b-index {j} out of range for {sig}")
    return RingElem.monomial(sig, b=(0,) * (j - 1) + (1,))


def a(sig: SpaceSig, i: int) -> RingElem:
    if not 1 <= i <= sig.n:
        raise ValueError(f"a-index {i} out of range for {sig}")
    return RingElem.monomial(sig, a=(0,) * (i - 1) + (1,))


def diagonal(sig: SpaceSig, i: int, j: int) -> RingElem:
    """Class of the locus x_i = x_j in the plane: a_i^2 + a_i*a_j + a_j^2."""
    if i == j:
        raise ValueError("diagonal requires two distinct indices")
    ai, aj = a(sig, i), a(sig, j)
    return ai * ai + ai * aj + aj * aj


def diagonal_b(sig: SpaceSig, i: int, j: int = 1) -> RingElem:
    """Class of the locus p_j = x_i: b_j^2 + b_j*a_i + a_i^2."""
    bj, ai = b(sig, j), a(sig, i)
    return bj * bj + bj * ai + ai * ai


def collision_divisor(sig: SpaceSig, i: int, j: int) -> RingElem:
    """Divisor a_i + a_j - y1 forcing two points on the line to coincide."""
    if i == j:
        raise ValueError("collision divisor requires two distinct indices")
    return a(sig, i) + a(sig, j) - y1(sig)


def collision_divisor_b(sig: SpaceSig, i: int, j: int = 1) -> RingElem:
    """Divisor b_j + a_i - y1 forcing a marked point onto the singular point."""
    return b(sig, j) + a(sig, i) - y1(sig)


# -- integration and pushforward ---------------------------------------------

def integrate(e: RingElem) -> int:
    """Coefficient of the top monomial y1^2 * yd^delta * prod b_j^2 * prod a_i^2."""
    sig = e.sig
    top = (2, sig.delta, (2,) * sig.m, (2,) * sig.n)
    return e.terms.get(top, 0)


def pushforward_last_a(e: RingElem) -> RingElem:
    """Fiber integration over the last tangency factor.

    Extracts the coefficient of a_n^2 as an element of the space with one
    fewer tangency point.  Satisfies the projection formula
    push(lift(c) * q) = c * push(q).
    """
    sig = e.sig
    if sig.n < 1:
        raise ValueError("pushforward_last_a requires at least one tangency point")
    out = RingElem(sig.drop_a())
    terms = {}
    for (e1, ed, eb, ea), coeff in e.terms.items():
        if ea[-1] == 2:
            terms[(e1, ed, eb, ea[:-1])] = coeff
    out.terms = terms
    return out


def lift_a(e: RingElem, count: int = 1) -> RingElem:
    """Pull back to the space with `count` extra tangency points."""
    out = RingElem(e.sig.add_a(count))
    pad = (0,) * count
    out.terms = {(e1, ed, eb, ea + pad): c for (e1, ed, eb, ea), c in e.terms.items()}
    return out


def collapse_last_a_to_b(e: RingElem, j: int = 1) -> RingElem:
    """Move the last a-exponent onto b_j and forget the last tangency point.

    Monomials whose b_j exponent would exceed the cap are dropped (they are
    zero in the truncated ring).
    """
    sig = e.sig
    if sig.n < 1:
        raise ValueError("collapse requires at least one tangency point")
    if not 1 <= j <= sig.m:
        raise ValueError(f"b-index {j} out of range for {sig}")
    out = RingElem(sig.drop_a())
    terms: dict = {}
    for (e1, ed, eb, ea), coeff in e.terms.items():
        nb = eb[j - 1] + ea[-1]
        if nb > 2:
            continue
        mono = (e1, ed, eb[:j - 1] + (nb,) + eb[j:], ea[:-1])
        c = terms.get(mono, 0) + coeff
        if c:
            terms[mono] = c
        else:
            del terms[mono]
    out.terms = terms
    return out


def merge_b_into_first(e: RingElem) -> RingElem:
    """Move the b_2 exponent onto b_1 and forget the second singular point.

    Monomials whose combined b_1 exponent exceeds the cap are dropped.
    """
    sig = e.sig
    if sig.m != 2:
        raise ValueError(f"merge_b_into_first needs exactly two singular points, got {sig}")
    out = RingElem(SpaceSig(sig.d, 1, sig.n))
    terms: dict = {}
    for (e1, ed, eb, ea), coeff in e.terms.items():
        nb = eb[0] + eb[1]
        if nb > 2:
            continue
        mono = (e1, ed, (nb,), ea)
        c = terms.get(mono, 0) + coeff
        if c:
            terms[mono] = c
        else:
            del terms[mono]
    out.terms = terms
    return out


def add_b(e: RingElem) -> RingElem:
    """Pull back to the space with one extra singular point (new last b)."""
    sig = e.sig
    out = RingElem(SpaceSig(sig.d, sig.m + 1, sig.n))
    out.terms = {(e1, ed, eb + (0,), ea): c for (e1, ed, eb, ea), c in e.terms.items()}
    return out


def rename_b_to_last_a(e: RingElem, j: int) -> RingElem:
    """Re-interpret the b_j marked point as a new last tangency point.

    Used to feed a two-singular-point constraint into an evaluator that
    expects one singular point and one tangency point.  Inverse (on the image)
    of :func:`collapse_last_a_to_b` restricted to monomials with b_j = 0.
    """
    sig = e.sig
    if not 1 <= j <= sig.m:
        raise ValueError(f"b-index {j} out of range for {sig}")
    out = RingElem(SpaceSig(sig.d, sig.m - 1, sig.n + 1))
    out.terms = {
        (e1, ed, eb[:j - 1] + eb[j:], ea + (eb[j - 1],)): coeff
        for (e1, ed, eb, ea), coeff in e.terms.items()
    }
    return out
