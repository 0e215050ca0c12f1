"""Exact polynomials in three carriers.

``RatPoly``
    monomial basis over the rationals.
``BinomPoly``
    integer coefficients on the shifted binomial basis ``C(x+i, d)``.
``ZPoly``
    integer Laurent polynomial in a formal variable ``z`` (lowest exponent -1),
    used for generating functions of the delta statistic.

Binomials with a negative upper argument follow the falling-factorial
definition, so evaluation at negative integers behaves as reciprocity needs.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

from .errors import InconsistentData, NotFactorable, NotRepresentable

Number = int | Fraction


def binom(top: Number, k: int) -> Number:
    """``C(top, k)`` via the falling factorial; exact for any integer or rational top."""
    if k < 0:
        return 0
    if isinstance(top, int):
        if top >= 0:
            return comb(top, k)
        # C(-n, k) = (-1)^k C(n+k-1, k)
        return (-1) ** k * comb(k - top - 1, k)
    num = Fraction(1)
    for j in range(k):
        num *= top - j
    return num / factorial(k)


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q'")
    return Fraction(v)


class RatPoly:
    """Polynomial with exact rational coefficients, stored low degree first."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable | Mapping = ()):
        if isinstance(coeffs, Mapping):
            top = max((int(k) for k in coeffs), default=-1)
            dense = [Fraction(0)] * (top + 1)
            for k, v in coeffs.items():
                if int(k) < 0:
                    raise ValueError("negative exponent in RatPoly")
                dense[int(k)] += _frac(v)
        else:
            dense = [_frac(v) for v in coeffs]
        while dense and dense[-1] == 0:
            dense.pop()
        self._c = tuple(dense)

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "RatPoly":
        return cls([c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __add__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self._c), len(other._c))
        a = self._c + (Fraction(0),) * (n - len(self._c))
        b = other._c + (Fraction(0),) * (n - len(other._c))
        return RatPoly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self._c])

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other) -> "RatPoly":
        if not isinstance(other, RatPoly):
            return RatPoly([c * _frac(other) for c in self._c])
        if not self._c or not other._c:
            return RatPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def negate_argument(self) -> "RatPoly":
        """``p(-x)``."""
        return RatPoly([c if k % 2 == 0 else -c for k, c in enumerate(self._c)])

    def reciprocal(self, n: int) -> "RatPoly":
        """``(-1)^n p(-x)``, the form appearing in combinatorial reciprocity."""
        q = self.negate_argument()
        return -q if n % 2 else q

    def to_json(self) -> dict:
        return {
            "basis": "monomial",
            "coeffs": {str(k): str(c) for k, c in enumerate(self._c) if c},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "RatPoly":
        if obj.get("basis") != "monomial":
            raise ValueError("not a monomial-basis polynomial")
        return cls({int(k): Fraction(v) for k, v in obj["coeffs"].items()})

    def __repr__(self) -> str:
        terms = [f"{c}*x^{k}" for k, c in reversed(list(enumerate(self._c))) if c]
        return f"RatPoly({' + '.join(terms) or '0'})"


_BASIS_CACHE: dict[tuple[int, int], RatPoly] = {}


def binom_monomial(i: int, d: int) -> RatPoly:
    """Monomial expansion of ``C(x+i, d)``."""
    key = (i, d)
    hit = _BASIS_CACHE.get(key)
    if hit is not None:
        return hit
    p = RatPoly([1])
    for j in range(d):
        p = p * RatPoly([i - j, 1])
    p = p * Fraction(1, factorial(d))
    _BASIS_CACHE[key] = p
    return p


def shift_range(d: int) -> range:
    """Admissible shifts for degree ``d``: ``0..d-1`` (``{0}`` when ``d == 0``).

    On this range the family ``C(x+i, d)`` is linearly independent, so a
    coefficient map determines its polynomial and vice versa.
    """
    return range(max(d, 1))


class BinomPoly:
    """``sum_i coeffs[i] * C(x+i, d)`` with integer coefficients."""

    __slots__ = ("d", "_c")

    def __init__(self, d: int, coeffs: Mapping[int, int] | Iterable[int] = ()):
        if d < 0:
            raise ValueError("degree must be non-negative")
        if not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        lim = shift_range(d)
        clean = {}
        for i, c in coeffs.items():
            i = int(i)
            if int(c) != c:
                raise ValueError("BinomPoly coefficients must be integers")
            if c:
                if i not in lim:
                    raise ValueError(f"shift {i} outside 0..{lim.stop - 1} for degree {d}")
                clean[i] = int(c)
        self.d = d
        self._c = dict(sorted(clean.items()))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def vector(self) -> list[int]:
        """Dense coefficient list over the full shift range."""
        return [self._c.get(i, 0) for i in shift_range(self.d)]

    def is_zero(self) -> bool:
        return not self._c

    def __call__(self, x: Number) -> Number:
        return sum(c * binom(x + i, self.d) for i, c in self._c.items())

    def _check(self, other: "BinomPoly"):
        if not isinstance(other, BinomPoly) or other.d != self.d:
            raise ValueError("BinomPoly arithmetic needs equal degrees")

    def __add__(self, other: "BinomPoly") -> "BinomPoly":
        self._check(other)
        out = dict(self._c)
        for i, c in other._c.items():
            out[i] = out.get(i, 0) + c
        return BinomPoly(self.d, out)

    def __neg__(self) -> "BinomPoly":
        return BinomPoly(self.d, {i: -c for i, c in self._c.items()})

    def __sub__(self, other: "BinomPoly") -> "BinomPoly":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, BinomPoly) and self.d == other.d and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.d, tuple(self._c.items())))

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self._c.values())

    def to_monomial(self) -> RatPoly:
        return binom_to_monomial(self)

    def to_json(self) -> dict:
        return {"basis": "binom", "d": self.d, "coeffs": {str(i): c for i, c in self._c.items()}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "BinomPoly":
        if obj.get("basis") != "binom":
            raise ValueError("not a binomial-basis polynomial")
        return cls(int(obj["d"]), {int(k): int(v) for k, v in obj["coeffs"].items()})

    def __repr__(self) -> str:
        if not self._c:
            return f"BinomPoly(d={self.d}, 0)"
        terms = [f"{c}*C(x+{i},{self.d})" for i, c in sorted(self._c.items(), reverse=True)]
        return f"BinomPoly({' + '.join(terms)})"


def binom_to_monomial(p: BinomPoly) -> RatPoly:
    out = RatPoly()
    for i, c in p.coeffs.items():
        out = out + binom_monomial(i, p.d) * c
    return out


def monomial_to_binom(p: RatPoly, d: int) -> BinomPoly:
    """Express ``p`` on ``{C(x+i, d) : i in shift_range(d)}`` with integer coefficients.

    At ``x = k`` (``k = 1..d``) only shifts ``i >= d-k`` are non-zero, so the
    system is triangular; it is solved from the highest shift down and the
    exact residual is then required to vanish.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if d == 0:
        if p.degree > 0:
            raise NotRepresentable(f"{p!r} is not a constant")
        c = p(0)
        if c.denominator != 1:
            raise NotRepresentable(f"{p!r} has a non-integer coefficient on C(x,0)")
        return BinomPoly(0, {0: int(c)})
    coeffs: dict[int, Fraction] = {}
    for k in range(1, d + 1):
        i = d - k
        rest = sum(c * binom(k + j, d) for j, c in coeffs.items())
        coeffs[i] = p(k) - rest  # C(k+i, d) == 1 when k + i == d
    bad = [c for c in coeffs.values() if c.denominator != 1]
    if bad:
        raise NotRepresentable(f"{p!r} needs non-integer coefficients in degree-{d} basis")
    out = BinomPoly(d, {i: int(c) for i, c in coeffs.items()})
    if binom_to_monomial(out) != p:
        raise NotRepresentable(f"{p!r} is not in the span of C(x+i,{d}), i=0..{d - 1}")
    return out


def binom_basis_collapse(p: BinomPoly) -> BinomPoly:
    """Divide the coefficient vector by ``(1, -2, 1)``.

    Uses ``C(x+i+2,n) - 2C(x+i+1,n) + C(x+i,n) = C(x+i,n-2)``: a degree-n
    BinomPoly whose coefficient vector is ``(z-1)^2 * P(z)`` equals the
    degree-(n-2) BinomPoly with coefficients of ``P``.
    """
    if p.d < 2:
        raise NotFactorable("collapse needs degree >= 2")
    q = ZPoly(p.coeffs).divide_by_z_minus_1_squared()
    return BinomPoly(p.d - 2, q.coeffs)


def interpolate(points: Iterable[tuple[int, int]], degree_bound: int) -> RatPoly:
    """Unique polynomial of degree ``<= degree_bound`` through ``points``.

    The first ``degree_bound + 1`` points determine it (Lagrange form); any
    further points must agree exactly.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise InconsistentData("interpolation nodes must be distinct")
    if len(pts) < degree_bound + 1:
        raise InconsistentData(f"need {degree_bound + 1} points, got {len(pts)}")
    base = pts[: degree_bound + 1]
    out = RatPoly()
    for j, (xj, yj) in enumerate(base):
        term = RatPoly([yj])
        for m, (xm, _) in enumerate(base):
            if m != j:
                term = term * RatPoly([-xm / (xj - xm), 1 / (xj - xm)])
        out = out + term
    for x, y in pts[degree_bound + 1:]:
        if out(x) != y:
            raise InconsistentData(f"point ({x}, {y}) disagrees with interpolant {out!r}")
    return out


class ZPoly:
    """Integer Laurent polynomial in ``z`` with exponents ``>= -1``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] = ()):
        if not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        clean = {}
        for k, c in coeffs.items():
            k = int(k)
            if c:
                if k < -1:
                    raise ValueError("ZPoly exponents must be >= -1")
                clean[k] = clean.get(k, 0) + int(c)
        self._c = {k: v for k, v in sorted(clean.items()) if v}

    @classmethod
    def from_histogram(cls, hist: Iterable[int]) -> "ZPoly":
        return cls(dict(enumerate(hist)))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_exponent(self) -> int | None:
        return min(self._c) if self._c else None

    def max_exponent(self) -> int | None:
        return max(self._c) if self._c else None

    def __call__(self, z: Number) -> Number:
        if z == 0 and -1 in self._c:
            raise ZeroDivisionError("z^-1 term at z=0")
        return sum(c * (Fraction(z) ** k if k < 0 else z**k) for k, c in self._c.items())

    def __add__(self, other: "ZPoly") -> "ZPoly":
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return ZPoly(out)

    def __neg__(self) -> "ZPoly":
        return ZPoly({k: -c for k, c in self._c.items()})

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + (-other)

    def __mul__(self, other) -> "ZPoly":
        if isinstance(other, int):
            return ZPoly({k: c * other for k, c in self._c.items()})
        out: dict[int, int] = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return ZPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "ZPoly":
        """Multiply by ``z^k``."""
        return ZPoly({e + k: c for e, c in self._c.items()})

    def times_z_minus_1_squared(self) -> "ZPoly":
        return self * ZPoly({0: 1, 1: -2, 2: 1})

    def divide_by_z_minus_1_squared(self) -> "ZPoly":
        """Exact quotient by ``(z-1)^2``; ``NotFactorable`` on a non-zero remainder."""
        if not self._c:
            return ZPoly()
        lo = min(self._c)
        rem = {k - lo: c for k, c in self._c.items()}
        top = max(rem)
        quot: dict[int, int] = {}
        for k in range(top, 1, -1):
            c = rem.get(k, 0)
            if c:
                quot[k - 2] = c
                rem[k] = 0
                rem[k - 1] = rem.get(k - 1, 0) + 2 * c
                rem[k - 2] = rem.get(k - 2, 0) - c
        if any(rem.get(k, 0) for k in (0, 1)):
            raise NotFactorable(f"{self!r} is not divisible by (z-1)^2")
        return ZPoly({k + lo: c for k, c in quot.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ZPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(self._c.items()))

    def to_json(self) -> dict:
        return {"basis": "z", "coeffs": {str(k): c for k, c in self._c.items()}}

    def __repr__(self) -> str:
        if not self._c:
            return "ZPoly(0)"
        terms = [f"{c}*z^{k}" for k, c in sorted(self._c.items(), reverse=True)]
        return f"ZPoly({' + '.join(terms)})"
