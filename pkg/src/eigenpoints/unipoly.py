"""Dense univariate polynomials over the exact rationals.

Coefficient lists are ascending in degree with no trailing zeros; the zero
polynomial is the empty list.  These are the workhorses behind eliminants:
exact gcd, square-free decomposition, and the Hilbert-numerator division.
"""

from __future__ import annotations

from math import gcd as int_gcd

from .rationals import ZERO, rational


def trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def deg(c: list) -> int:
    return len(c) - 1


def add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [ZERO] * n
    for i, x in enumerate(a):
        out[i] = out[i] + x
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return trim(out)


def neg(a: list) -> list:
    return [-x for x in a]


def sub(a: list, b: list) -> list:
    return add(a, neg(b))


def scale(a: list, c) -> list:
    if c == 0:
        return []
    return [x * c for x in a]


def mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_exact(a: list, b: list) -> tuple[list, list]:
    """Quotient and remainder over the rationals; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    q = [ZERO] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    while len(r) >= len(b) and trim(r):
        k = len(r) - len(b)
        c = r[-1] / lb
        q[k] = c
        for i, y in enumerate(b):
            r[k + i] = r[k + i] - c * y
        r.pop()
        trim(r)
    return trim(q), trim(r)


def exact_div(a: list, b: list) -> list:
    q, r = divmod_exact(a, b)
    if r:
        raise ArithmeticError("division was not exact")
    return q


def evaluate(c: list, x):
    """Horner evaluation; works for rational, float or complex x."""
    total = ZERO if not isinstance(x, (float, complex)) else 0.0
    for coef in reversed(c):
        total = total * x + coef
    return total


def derivative(c: list) -> list:
    return trim([c[i] * i for i in range(1, len(c))])


def _coeff_bits(c: list) -> int:
    return max(
        int(v.numerator).bit_length() + int(v.denominator).bit_length() for v in c
    )


def evaluate_complex(c: list, x: complex) -> complex:
    """Horner at a complex point, at enough precision to absorb cancellation.

    Exact coefficients can be astronomically larger than the value they
    produce; double-precision Horner would lose every digit.  Precision is
    chosen from the largest coefficient.
    """
    if not c:
        return 0j
    try:
        import gmpy2
    except ImportError:  # pragma: no cover
        return complex(evaluate([float(v) for v in c], complex(x)))
    with gmpy2.context(precision=_coeff_bits(c) + 128):
        z = gmpy2.mpc(complex(x))
        total = gmpy2.mpc(0)
        for coef in reversed(c):
            total = total * z + coef
        return complex(total)


def refined_values(eliminant: list, polys: list, z0: complex, extra_bits: int = 160):
    """Newton-refine a floating root of ``eliminant`` and evaluate there.

    The refinement runs at a precision matching the coefficient sizes, so
    evaluating companion polynomials (whose derivatives can be enormous)
    at the refined root stays meaningful.  Returns (root, values) as
    gmpy2 mpc objects when gmpy2 is present, floats otherwise; values stay
    exact-precision until the caller combines them.
    """
    try:
        import gmpy2
    except ImportError:  # pragma: no cover
        z = complex(z0)
        return z, [complex(evaluate([float(v) for v in p], z)) for p in polys]
    bits = max(_coeff_bits(p) for p in [eliminant, *polys] if p)
    bits += extra_bits
    de = derivative(eliminant)
    with gmpy2.context(precision=bits):
        z = gmpy2.mpc(complex(z0))
        tol = gmpy2.mpfr(2) ** (-(bits - 24))
        for _ in range(80):
            p = gmpy2.mpc(0)
            for coef in reversed(eliminant):
                p = p * z + coef
            dp = gmpy2.mpc(0)
            for coef in reversed(de):
                dp = dp * z + coef
            if dp == 0:
                break
            step = p / dp
            z = z - step
            if abs(step) <= tol * (1 + abs(z)):
                break
        values = []
        for poly in polys:
            total = gmpy2.mpc(0)
            for coef in reversed(poly):
                total = total * z + coef
            values.append(total)
    return z, values


def newton_correction(c: list, x: complex):
    """One exact-coefficient Newton datum at a complex point.

    Returns (step, scaled_residual) with step = p(x)/p'(x) (None where the
    derivative vanishes) and scaled_residual = |p(x)| / max|coeff|, both
    computed at cancellation-proof precision.
    """
    dc = derivative(c)
    try:
        import gmpy2
    except ImportError:  # pragma: no cover
        cf = [float(v) for v in c]
        p = evaluate(cf, complex(x))
        dp = evaluate([float(v) for v in dc], complex(x))
        scale = max(abs(v) for v in cf)
        return (None if dp == 0 else complex(p / dp)), abs(p) / scale
    with gmpy2.context(precision=_coeff_bits(c) + 128):
        z = gmpy2.mpc(complex(x))
        p = gmpy2.mpc(0)
        for coef in reversed(c):
            p = p * z + coef
        dp = gmpy2.mpc(0)
        for coef in reversed(dc):
            dp = dp * z + coef
        scale = max(abs(v) for v in c)
        residual = float(abs(p) / scale)
        if dp == 0:
            return None, residual
        return complex(p / dp), residual


def content_primitive(c: list) -> tuple:
    """Write c = content * primitive with primitive integer coefficients.

    The primitive part has integer entries, gcd 1 and positive leading
    coefficient; content is an exact rational (zero for the zero poly).
    """
    if not c:
        return ZERO, []
    den_lcm = 1
    for x in c:
        d = x.denominator
        den_lcm = den_lcm * d // int_gcd(den_lcm, d)
    ints = [int(x * den_lcm) for x in c]
    g = 0
    for v in ints:
        g = int_gcd(g, abs(v))
    if ints[-1] < 0:
        g = -g
    prim = [v // g for v in ints]
    return rational(g, den_lcm), prim


def monic(c: list) -> list:
    if not c:
        return []
    lc = c[-1]
    return [x / lc for x in c]


def gcd(a: list, b: list) -> list:
    """Monic gcd via a primitive pseudo-remainder sequence (no fraction blowup)."""
    _, p = content_primitive(a)
    _, q = content_primitive(b)
    if not p:
        return monic([rational(x) for x in q])
    if not q:
        return monic([rational(x) for x in p])
    if len(p) < len(q):
        p, q = q, p
    while q:
        r = _pseudo_rem_int(p, q)
        _, r = content_primitive([rational(x) for x in r])
        p, q = q, r
    return monic([rational(x) for x in p])


def _pseudo_rem_int(a: list, b: list) -> list:
    """Pseudo-remainder of integer coefficient lists: lc(b)^k * a mod b."""
    r = list(a)
    lb = b[-1]
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        lr = r[-1]
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[k + i] -= lr * y
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def squarefree_decomposition(c: list) -> list:
    """Yun's algorithm: returns [(factor_i, multiplicity_i)] with factors monic,
    squarefree, pairwise coprime and c = lc * prod factor_i^mult_i."""
    if not c:
        raise ValueError("zero polynomial")
    if len(c) == 1:
        return []
    p = monic(c)
    dp = derivative(p)
    a = gcd(p, dp)
    out = []
    if deg(a) == 0:
        return [(p, 1)]
    b = exact_div(p, a)
    d = sub(exact_div(dp, a), derivative(b))
    i = 1
    while deg(b) > 0:
        g = gcd(b, d)
        if deg(g) > 0:
            out.append((monic(g), i))
        b2 = exact_div(b, g) if deg(g) > 0 else b
        d = sub(exact_div(d, g) if deg(g) > 0 else d, derivative(b2))
        b = b2
        i += 1
    return out


def is_squarefree(c: list) -> bool:
    return deg(gcd(c, derivative(c))) == 0


def from_multipoly(p) -> list:
    """Convert a 1-variable Polynomial to a coefficient list."""
    if p.nvars != 1:
        raise ValueError("polynomial is not univariate")
    if not p.terms:
        return []
    out = [ZERO] * (p.degree() + 1)
    for (e,), coef in p.terms.items():
        out[e] = coef
    return trim(out)


def to_multipoly(c: list, nvars: int = 1, var: int = 0):
    from .multipoly import Polynomial

    terms = {}
    for e, coef in enumerate(c):
        if coef != 0:
            mono = tuple(e if i == var else 0 for i in range(nvars))
            terms[mono] = coef
    return Polynomial(nvars, terms)
