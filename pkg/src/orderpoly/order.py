"""Order polynomials of finite posets.

Two independent routes are provided: counting order-preserving maps and
interpolating, and the descent-statistic formula over linear extensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polys import BinomPoly, RatPoly, interpolate
from .structures import AcyclicDigraph, Poset


def omega_bruteforce(p: Poset, m: int, strict: bool = False) -> int:
    """Number of (strictly) order-preserving maps ``p -> [m]``.

    Elements are assigned in a topological order; each value is bounded below
    by the values already given to smaller elements.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    order = p.as_digraph().topological_order()
    below = {v: [u for u in order if p.lt(u, v)] for v in order}
    val: dict[int, int] = {}
    n = len(order)

    def lower(v: int) -> int:
        lb = 1
        for u in below[v]:
            lb = max(lb, val[u] + 1 if strict else val[u])
        return lb

    def rec(k: int) -> int:
        if k == n:
            return 1
        v = order[k]
        lb = lower(v)
        if k == n - 1:
            return max(0, m - lb + 1)
        total = 0
        for x in range(lb, m + 1):
            val[v] = x
            total += rec(k + 1)
        val.pop(v, None)
        return total

    return rec(0)


def order_polynomial(p: Poset, strict: bool = False) -> RatPoly:
    """``Omega(P, x)`` (or the strict variant) by interpolating exact counts.

    Nodes ``m = 1..n+1`` fix the polynomial; ``n+2, n+3`` are an over-check.
    """
    n = p.n
    pts = [(m, omega_bruteforce(p, m, strict)) for m in range(1, n + 4)]
    return interpolate(pts, n)


def strict_order_polynomial(p: Poset) -> RatPoly:
    return order_polynomial(p, strict=True)


@dataclass(frozen=True)
class DescentProfile:
    omega: dict[int, int]
    w: tuple[int, ...]
    wbar: tuple[int, ...]
    extensions: int = field(default=0)


def ascents(seq) -> int:
    """Plain ascent count of a sequence of numbers."""
    return sum(1 for a, b in zip(seq, seq[1:]) if a < b)


def stanley_descent_form(p: Poset) -> tuple[DescentProfile, BinomPoly, BinomPoly]:
    """Descent tallies over linear extensions and the two order polynomials.

    ``omega`` ranks the lexicographically least linear extension.  Returns
    ``(profile, Omega, Omega_strict)`` with
    ``Omega = sum_s w_s C(x+n-1-s, n)`` and the strict one using ``wbar``.
    """
    n = p.n
    exts = p.linear_extensions()
    omega = {v: i + 1 for i, v in enumerate(exts[0])} if n else {}
    w = [0] * max(n, 1)
    wbar = [0] * max(n, 1)
    for pi in exts:
        ranks = [omega[v] for v in pi]
        up = ascents(ranks)
        down = max(n - 1, 0) - up
        w[down] += 1
        wbar[up] += 1
    if n == 0:
        return DescentProfile({}, (), (), 1), BinomPoly(0, {0: 1}), BinomPoly(0, {0: 1})
    Om = BinomPoly(n, {n - 1 - s: c for s, c in enumerate(w)})
    Omb = BinomPoly(n, {n - 1 - s: c for s, c in enumerate(wbar)})
    return DescentProfile(omega, tuple(w), tuple(wbar), len(exts)), Om, Omb


def order_polynomial_binom(p: Poset | AcyclicDigraph) -> BinomPoly:
    """``Omega`` as a degree-n BinomPoly via the descent formula."""
    if isinstance(p, AcyclicDigraph):
        p = p.closure()
    return stanley_descent_form(p)[1]


def strict_order_polynomial_binom(p: Poset | AcyclicDigraph) -> BinomPoly:
    if isinstance(p, AcyclicDigraph):
        p = p.closure()
    return stanley_descent_form(p)[2]


def ascent_form(p: Poset) -> BinomPoly:
    """``sum_pi C(x + ascents_omega(pi), n)`` over linear extensions."""
    prof, _, _ = stanley_descent_form(p)
    hist: dict[int, int] = {}
    for pi in p.linear_extensions():
        k = ascents([prof.omega[v] for v in pi])
        hist[k] = hist.get(k, 0) + 1
    return BinomPoly(p.n, hist)


@dataclass
class ReciprocityReport:
    holds: bool
    pointwise: list[tuple[int, int, int]]
    omega: RatPoly
    strict: RatPoly

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "pointwise": [list(t) for t in self.pointwise],
            "omega": self.omega.to_json(),
            "strict_omega": self.strict.to_json(),
        }


def reciprocity_check(p: Poset) -> ReciprocityReport:
    """Compare strict counts at ``m = 1..n+2`` with ``(-1)^n Omega(-m)``."""
    n = p.n
    _, Om, _ = stanley_descent_form(p)
    pts = []
    ok = True
    for m in range(1, n + 3):
        lhs = omega_bruteforce(p, m, strict=True)
        rhs = (-1) ** n * Om(-m)
        pts.append((m, lhs, int(rhs)))
        ok &= lhs == rhs
    om = Om.to_monomial()
    strict = strict_order_polynomial(p)
    ok &= strict == om.reciprocal(n)
    return ReciprocityReport(bool(ok), pts, om, strict)
