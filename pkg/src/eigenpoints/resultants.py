"""Bivariate elimination through subresultant pseudo-remainder sequences.

For the planar solver we eliminate the second variable from two
polynomials in Q[x, y].  Polynomials are handled as vectors in y whose
coefficients are dense univariate polynomials in x; the PRS yields (up to
harmless scalar factors) the resultant in x and the degree-one
subresultant u(x) y + v(x) used for back-substitution.
"""

from __future__ import annotations

from . import unipoly
from .multipoly import Polynomial
from .rationals import ZERO


class EliminationDegenerate(Exception):
    """The pair of curves shares a component; the intersection is not finite."""


def to_bivar(p: Polynomial) -> list:
    """A 2-variable Polynomial as a list over y-degrees of x-unipolys."""
    if p.nvars != 2:
        raise ValueError("expected a bivariate polynomial")
    if p.is_zero():
        return []
    dy = max(m[1] for m in p.terms)
    out = [[] for _ in range(dy + 1)]
    for (ex, ey), c in p.terms.items():
        col = out[ey]
        while len(col) <= ex:
            col.append(ZERO)
        col[ex] = c
    return [unipoly.trim(col) for col in out]


def _bv_trim(b: list) -> list:
    while b and not b[-1]:
        b.pop()
    return b


def _bv_deg(b: list) -> int:
    return len(b) - 1


def _bv_scale(b: list, u: list) -> list:
    return _bv_trim([unipoly.mul(col, u) for col in b])


def _bv_exact_div(b: list, u: list) -> list:
    return [unipoly.exact_div(col, u) if col else [] for col in b]


def _bv_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else []
        y = b[i] if i < len(b) else []
        out.append(unipoly.sub(x, y))
    return _bv_trim(out)


def _bv_shift_mul(b: list, u: list, k: int) -> list:
    """b * u(x) * y^k."""
    return _bv_trim([[] for _ in range(k)] + [unipoly.mul(col, u) for col in b])


def pseudo_remainder(a: list, b: list) -> list:
    """prem(a, b) in y: lc(b)^(deg a - deg b + 1) * a modulo b."""
    if not b:
        raise ZeroDivisionError("pseudo-division by zero")
    r = [list(col) for col in a]
    lb = b[-1]
    e = _bv_deg(a) - _bv_deg(b) + 1
    while r and _bv_deg(r) >= _bv_deg(b):
        lr = r[-1]
        r = _bv_sub(_bv_scale(r, lb), _bv_shift_mul(b, lr, _bv_deg(r) - _bv_deg(b)))
        e -= 1
    if e > 0:
        scale = lb
        for _ in range(e - 1):
            scale = unipoly.mul(scale, lb)
        r = _bv_scale(r, scale) if e >= 1 else r
    return r


def subresultant_prs(a: list, b: list) -> list:
    """The subresultant polynomial remainder sequence starting from (a, b)."""
    if _bv_deg(a) < _bv_deg(b):
        a, b = b, a
    prs = [a, b]
    g = _one()
    h = _one()
    while True:
        delta = _bv_deg(a) - _bv_deg(b)
        r = pseudo_remainder(a, b)
        if not r:
            break
        divisor = unipoly.mul(g, _power(h, delta))
        r = _bv_exact_div(r, divisor)
        r = _bv_trim(r)
        prs.append(r)
        a, b = b, r
        g = a[-1]
        if delta >= 1:
            h = unipoly.exact_div(_power(g, delta), _power(h, delta - 1))
        elif delta == 0:
            pass  # h unchanged
        if _bv_deg(b) <= 0:
            break
    return prs


def _one() -> list:
    from .rationals import rational

    return [rational(1)]


def _power(u: list, k: int) -> list:
    out = _one()
    for _ in range(k):
        out = unipoly.mul(out, u)
    return out


class EliminationResult:
    """Eliminant in x plus the degree-one subresultant for back-substitution."""

    __slots__ = ("eliminant", "sub1", "prs")

    def __init__(self, eliminant, sub1, prs):
        self.eliminant = eliminant
        self.sub1 = sub1
        self.prs = prs


def eliminate_y(p1: Polynomial, p2: Polynomial) -> EliminationResult:
    """Eliminate y from two bivariate polynomials.

    Returns the eliminant (unipoly in x, equal to the resultant up to a
    rational factor) and, when present in the sequence, the pair (u, v)
    with u(x) y + v(x) the degree-one subresultant.  Raises
    EliminationDegenerate when the inputs share a curve component.
    """
    a, b = to_bivar(p1), to_bivar(p2)
    if not a or not b:
        raise EliminationDegenerate("zero polynomial in the elimination pair")
    # shared content in x alone means a common vertical-line component
    ca = _content_x(a)
    cb = _content_x(b)
    common = unipoly.gcd(ca, cb)
    if unipoly.deg(common) > 0:
        raise EliminationDegenerate("common factor independent of y")
    if _bv_deg(a) == 0 and _bv_deg(b) == 0:
        raise EliminationDegenerate("neither polynomial involves y")
    if _bv_deg(a) == 0:
        return EliminationResult(_power_list(a[0], _bv_deg(b)), None, [])
    if _bv_deg(b) == 0:
        return EliminationResult(_power_list(b[0], _bv_deg(a)), None, [])
    prs = subresultant_prs(a, b)
    last = prs[-1]
    if _bv_deg(last) > 0:
        raise EliminationDegenerate("common factor of positive y-degree")
    sub1 = None
    for elem in prs:
        if _bv_deg(elem) == 1:
            u = elem[1]
            v = elem[0] if elem[0] else []
            sub1 = (u, v)
    eliminant = last[0]
    return EliminationResult(eliminant, sub1, prs)


def _power_list(u: list, k: int) -> list:
    return _power(u, k)


def _content_x(b: list) -> list:
    c = []
    for col in b:
        c = unipoly.gcd(c, col)
    return c


def specialize_x(b: list, x0) -> list:
    """Substitute an exact x value; returns a unipoly in y."""
    return unipoly.trim([unipoly.evaluate(col, x0) if col else ZERO for col in b])
