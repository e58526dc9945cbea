"""Grevlex Buchberger and FGLM lex conversion for zero-dimensional ideals.

The solver eliminates through this pipeline: a graded reverse
lexicographic basis is computed with Buchberger's algorithm (fraction-free
over the integers, Gebauer-Moeller pair pruning), the quotient staircase
is read off, and FGLM converts to lexicographic order, where a system in
shape position is just an eliminant in the last variable plus one
back-substitution polynomial per remaining variable.
"""

from __future__ import annotations

from heapq import heappop, heappush
from math import gcd as int_gcd

from . import unipoly
from .backend import kernel as K
from .multipoly import Polynomial
from .rationals import ZERO, rational


class EliminationError(RuntimeError):
    pass


class PositiveDimensionalError(EliminationError):
    """The ideal is not zero-dimensional: the staircase is infinite."""


# -- conversions ------------------------------------------------------------


def poly_to_intdict(p: Polynomial) -> dict:
    """Clear denominators and strip content; scaling is irrelevant to ideals."""
    if p.is_zero():
        return {}
    den = 1
    for c in p.terms.values():
        d = c.denominator
        den = den * d // int_gcd(den, d)
    out = {m: int(c * den) for m, c in p.terms.items()}
    return K.strip_content(out)


def intdict_to_poly(d: dict, nvars: int) -> Polynomial:
    return Polynomial(nvars, {m: rational(c) for m, c in d.items()})


def _prepared(g: dict):
    lm, lc = K.leading_term(g)
    return (lm, lc, g)


# -- Buchberger -------------------------------------------------------------


def buchberger(polys, nvars: int, max_reductions: int = 200_000):
    """Reduced grevlex basis of the ideal generated by ``polys``.

    Returns a list of content-free integer term dicts with positive leading
    coefficients, tail-reduced and sorted by leading monomial.
    """
    gens = []
    for p in polys:
        d = poly_to_intdict(p) if isinstance(p, Polynomial) else K.strip_content(dict(p))
        if d:
            gens.append(d)
    if not gens:
        raise EliminationError("all generators are zero")

    basis: list[dict] = []       # every accepted polynomial, used for reduction
    prepared: list[tuple] = []   # (lm, lc, terms) triples aligned with basis
    active: list[int] = []       # indices that still generate pairs
    pairs: list = []             # min-heap of (order key of lcm, i, j)

    def lm(i):
        return prepared[i][0]

    def add_poly(h: dict):
        """Gebauer-Moeller update of the pair set with the new polynomial."""
        ih = len(basis)
        basis.append(h)
        prepared.append(_prepared(h))
        lmh = lm(ih)
        # candidate pairs (g, ih), grouped by their lcm
        groups: dict = {}
        for g in active:
            groups.setdefault(K.mono_lcm(lmh, lm(g)), []).append(g)
        # M criterion: drop groups whose lcm is properly divisible by another
        lcms = list(groups)
        surviving = [
            l1
            for l1 in lcms
            if not any(l2 != l1 and K.mono_divides(l2, l1) for l2 in lcms)
        ]
        # F + first Buchberger criterion: one pair per lcm, none if a
        # coprime-lead pair produces that lcm
        new_pairs = []
        for l1 in surviving:
            members = groups[l1]
            if any(_coprime(lmh, lm(g)) for g in members):
                continue
            new_pairs.append((min(members), ih))
        # prune old pairs killed by the new leading monomial
        survivors = []
        while pairs:
            key, i, j = heappop(pairs)
            lij = K.mono_lcm(lm(i), lm(j))
            if (
                K.mono_divides(lmh, lij)
                and K.mono_lcm(lm(i), lmh) != lij
                and K.mono_lcm(lmh, lm(j)) != lij
            ):
                continue
            survivors.append((key, i, j))
        for entry in survivors:
            heappush(pairs, entry)
        for i, j in new_pairs:
            lij = K.mono_lcm(lm(i), lm(j))
            heappush(pairs, (K.order_key(lij), i, j))
        # retire active members whose lead the newcomer divides
        active[:] = [g for g in active if not K.mono_divides(lmh, lm(g))]
        active.append(ih)

    for g in sorted(gens, key=lambda d: K.order_key(K.leading_term(d)[0])):
        r, _ = K.reduce_full(g, prepared)
        r = K.strip_content(r)
        if r:
            add_poly(r)

    reductions = 0
    while pairs:
        _, i, j = heappop(pairs)
        s = K.spoly(*prepared[i], *prepared[j])
        if not s:
            continue
        r, _ = K.reduce_full(s, prepared)
        r = K.strip_content(r)
        if r:
            add_poly(r)
        reductions += 1
        if reductions > max_reductions:
            raise EliminationError("Buchberger reduction budget exceeded")

    # interreduce: minimal leads, then tail reduction
    minimal = []
    for i in sorted(active, key=lambda i: (K.order_key(lm(i)), i)):
        if not any(K.mono_divides(lm(j), lm(i)) for j in minimal):
            minimal.append(i)
    triples = [prepared[i] for i in minimal]
    reduced = []
    for pos, i in enumerate(minimal):
        others = triples[:pos] + triples[pos + 1 :]
        r, _ = K.reduce_full(basis[i], others)
        reduced.append(K.strip_content(r))
    reduced.sort(key=lambda d: K.order_key(K.leading_term(d)[0]))
    return reduced


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# -- staircase --------------------------------------------------------------


def quotient_basis(gb: list, nvars: int) -> list:
    """Monomials under the staircase of a zero-dimensional grevlex basis.

    Raises PositiveDimensionalError when some variable has no pure power
    among the leading monomials (infinite staircase).
    """
    leads = [K.leading_term(g)[0] for g in gb]
    caps = []
    for i in range(nvars):
        cap = None
        for m in leads:
            if all(e == 0 for k, e in enumerate(m) if k != i):
                cap = m[i] if cap is None else min(cap, m[i])
        if cap is None:
            raise PositiveDimensionalError(f"no pure power of variable {i} in the lead ideal")
        caps.append(cap)
    out = []
    mono = [0] * nvars

    def rec(i):
        if i == nvars:
            m = tuple(mono)
            if not any(K.mono_divides(lead, m) for lead in leads):
                out.append(m)
            return
        for e in range(caps[i] + 1):
            mono[i] = e
            rec(i + 1)
        mono[i] = 0

    rec(0)
    out.sort(key=K.order_key)
    return out


# -- FGLM -------------------------------------------------------------------


class LexBasis:
    """Lexicographic basis data produced by FGLM.

    Attributes: ``dimension`` (quotient dimension), ``elements`` (the lex
    basis as rational Polynomials), ``eliminant`` (unipoly coefficient list
    of the minimal polynomial of the last variable), ``shape`` (map from
    variable index to unipoly coefficients h_i with x_i - h_i(last) in the
    basis; complete exactly when the ideal is in shape position).
    """

    def __init__(self, nvars, dimension, elements, eliminant, shape):
        self.nvars = nvars
        self.dimension = dimension
        self.elements = elements
        self.eliminant = eliminant
        self.shape = shape

    def in_shape_position(self) -> bool:
        return (
            len(self.eliminant) - 1 == self.dimension
            and all(i in self.shape for i in range(self.nvars - 1))
        )


def multiplication_matrices(gb: list, basis_monos: list, nvars: int):
    """Columns of the multiplication-by-x_i operators on the quotient."""
    prepared = [_prepared(g) for g in gb]
    index = {m: k for k, m in enumerate(basis_monos)}
    D = len(basis_monos)
    mats = []
    cache = {}
    for i in range(nvars):
        cols = []
        for b in basis_monos:
            mm = tuple(e + (1 if k == i else 0) for k, e in enumerate(b))
            if mm in index:
                col = [ZERO] * D
                col[index[mm]] = rational(1)
            elif mm in cache:
                col = cache[mm]
            else:
                r, lam = K.reduce_full({mm: 1}, prepared)
                col = [ZERO] * D
                for m, c in r.items():
                    col[index[m]] = rational(c, lam)
                cache[mm] = col
            cols.append(col)
        mats.append(cols)
    return mats


def fglm(gb: list, nvars: int) -> LexBasis:
    """Convert a zero-dimensional grevlex basis to the reduced lex basis."""
    basis_monos = quotient_basis(gb, nvars)
    D = len(basis_monos)
    if D == 0:
        return LexBasis(nvars, 0, [Polynomial.constant(nvars, rational(1))], [rational(1)], {})
    mats = multiplication_matrices(gb, basis_monos, nvars)

    # echelon rows: (pivot position, vector, combo dict over processed lex monos)
    echelon = []
    lex_staircase = {}       # mono -> vector (as list)
    gb_leads = []
    elements = []
    heap = [(0,) * nvars]
    seen = {(0,) * nvars}
    parents = {}

    def vec_of(m):
        if sum(m) == 0:
            v = [ZERO] * D
            v[basis_monos.index((0,) * nvars)] = rational(1)
            return v
        i, parent = parents[m]
        pv = lex_staircase[parent]
        cols = mats[i]
        v = [ZERO] * D
        for j, c in enumerate(pv):
            if c == 0:
                continue
            col = cols[j]
            for k in range(D):
                if col[k] != 0:
                    v[k] = v[k] + c * col[k]
        return v

    while heap:
        m = heappop(heap)
        if any(K.mono_divides(lead, m) for lead in gb_leads):
            continue
        v = vec_of(m)
        # reduce against the echelon, tracking the combination
        combo = {}
        w = list(v)
        for pivot, row, row_combo in echelon:
            c = w[pivot]
            if c == 0:
                continue
            for k in range(pivot, D):
                if row[k] != 0:
                    w[k] = w[k] - c * row[k]
            for b, cc in row_combo.items():
                combo[b] = combo.get(b, ZERO) + c * cc
        nz = next((k for k in range(D) if w[k] != 0), None)
        if nz is None:
            # dependency: m - sum combo[b] * b is a lex basis element
            terms = {m: rational(1)}
            for b, cc in combo.items():
                if cc != 0:
                    terms[b] = terms.get(b, ZERO) - cc
            elements.append(Polynomial(nvars, terms))
            gb_leads.append(m)
        else:
            # w = vec(m) - sum combo[b] vec(b); store row = w/lead with the
            # matching combination so later reductions stay expressible
            lead = w[nz]
            row = [x / lead for x in w]
            row_combo = {m: rational(1) / lead}
            for b, cc in combo.items():
                if cc != 0:
                    row_combo[b] = row_combo.get(b, ZERO) - cc / lead
            echelon.append((nz, row, row_combo))
            lex_staircase[m] = v
            for i in range(nvars):
                child = tuple(e + (1 if k == i else 0) for k, e in enumerate(m))
                if child not in seen:
                    seen.add(child)
                    parents[child] = (i, m)
                    heappush(heap, child)

    if len(lex_staircase) != D:
        raise EliminationError("FGLM staircase size mismatch")

    last = nvars - 1
    eliminant = None
    shape = {}
    for lead, p in zip(gb_leads, elements):
        if all(e == 0 for e in lead[:last]):
            # pure power of the last variable: the eliminant (found first,
            # since lex enumeration starts with those powers)
            coeffs = [ZERO] * (lead[last] + 1)
            ok = True
            for mono, c in p.terms.items():
                if any(mono[k] for k in range(last)):
                    ok = False
                    break
                coeffs[mono[last]] = c
            if ok and eliminant is None:
                eliminant = coeffs
        if sum(lead) == 1 and lead[last] == 0:
            i = lead.index(1)
            rest = {mono: -c for mono, c in p.terms.items() if mono != lead}
            if all(all(e == 0 for e in mono[:last]) for mono in rest):
                h = [ZERO] * (max((mono[last] for mono in rest), default=0) + 1)
                for mono, c in rest.items():
                    h[mono[last]] = c
                shape[i] = unipoly.trim(h)
    if eliminant is None:
        raise EliminationError("lex basis lacks a univariate eliminant")
    return LexBasis(nvars, D, elements, unipoly.trim(eliminant), shape)
