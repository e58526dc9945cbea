"""Exact intersection theory on the surfaces carrying eigenpoint curves.

Deleting two columns of the eigenscheme matrix cuts out a smooth surface
S containing the line L of the deleted coordinates; its Picard group is
modeled as an integer lattice <H, L> with H^2 = deg S, H.L = 1 and
L^2 = 2-d.  The curves from single deletions have class (d-1)H + L, and
every numeric identity in the geometry (their mutual intersection giving
the eigenscheme length, adjunction genera, the Riemann-Roch count behind
the enlargement bound, the alpha/beta integrality dichotomy, and the
27-line census of the cubic-surface case) is an exact statement about
this lattice, checked here with integer arithmetic only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .counts import eigencurve_degree, eigensurface_degree, expected_count
from .rationals import rational


@dataclass(frozen=True)
class DivisorClass:
    coords: tuple

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * a for a in self.coords))

    def __repr__(self):
        return f"DivisorClass{self.coords}"


@dataclass(frozen=True)
class SurfaceLattice:
    rank: int
    labels: tuple
    gram: tuple  # tuple of tuples, symmetric integer matrix
    canonical: DivisorClass
    hyperplane: DivisorClass
    line: DivisorClass

    def dot(self, a: DivisorClass, b: DivisorClass) -> int:
        if len(a.coords) != self.rank or len(b.coords) != self.rank:
            raise ValueError("divisor class rank mismatch")
        total = 0
        for i, ai in enumerate(a.coords):
            if ai == 0:
                continue
            row = self.gram[i]
            for j, bj in enumerate(b.coords):
                if bj:
                    total += ai * row[j] * bj
        return total

    def degree(self, c: DivisorClass) -> int:
        return self.dot(c, self.hyperplane)

    def genus(self, c: DivisorClass) -> int:
        """Adjunction genus ((K + C).C)/2 + 1; raises on odd pairing."""
        val = self.dot(self.canonical + c, c)
        if val % 2:
            raise ArithmeticError(f"(K+C).C = {val} is odd: class not representable")
        return val // 2 + 1


def eigensurface_lattice(n: int, d: int) -> SurfaceLattice:
    """The rank-2 lattice <H, L> of the two-column-deleted surface.

    H^2 is the surface degree, H.L = 1, L^2 = 2-d; the canonical class is
    (n-3)L + ((n-3)(d-1) + d-n-1)H.  The case (n, d) = (3, 3) is served by
    the rank-7 cubic-surface model with L taken to be one fixed line.
    """
    if n < 3 or d < 3:
        raise ValueError("need n >= 3 and d >= 3")
    if (n, d) == (3, 3):
        return cubic_surface_lattice()[0]
    h2 = eigensurface_degree(n, d)
    gram = ((h2, 1), (1, 2 - d))
    k_l = n - 3
    k_h = (n - 3) * (d - 1) + d - n - 1
    return SurfaceLattice(
        rank=2,
        labels=("H", "L"),
        gram=gram,
        canonical=DivisorClass((k_h, k_l)),
        hyperplane=DivisorClass((1, 0)),
        line=DivisorClass((0, 1)),
    )


def eigencurve_class(n: int, d: int) -> DivisorClass:
    """(d-1)H + L on the eigensurface; degree-checked against the formula."""
    lat = eigensurface_lattice(n, d)
    c = lat.hyperplane.scale(d - 1) + lat.line
    expected = eigencurve_degree(n, d)
    got = lat.degree(c)
    if got != expected:
        raise ArithmeticError(
            f"inconsistent lattice: curve degree {got} != formula {expected}"
        )
    return c


def ci_degree(lat: SurfaceLattice, c0: DivisorClass, c1: DivisorClass) -> int:
    """Intersection number of two curve classes on the surface."""
    return lat.dot(c0, c1)


def adjunction_genus(lat: SurfaceLattice, c: DivisorClass) -> int:
    return lat.genus(c)


def alpha_beta_solutions(d: int):
    """Both solutions of the degree/genus class equations on S.

    A curve class alpha H + beta L of the right degree and genus obeys
    d alpha + beta = d^2 - d + 1 and a quadratic; the two solutions are
    (d-1, 1) and ((d^2-d+2)/d, -1), and only the first is integral for
    d >= 3 (d divides d^2-d+2 iff d divides 2).
    """
    if d < 3:
        raise ValueError("need d >= 3")
    first = (rational(d - 1), rational(1))
    second = (rational(d * d - d + 2, d), rational(-1))
    for alpha, beta in (first, second):
        if d * alpha + beta != d * d - d + 1:
            raise ArithmeticError("linear degree equation violated")
        lhs = 2 * d**3 - 7 * d * (d - 1) - 4
        rhs = (
            d * alpha * alpha
            + (2 - d) * beta * beta
            + 2 * alpha * beta
            + (d - 4) * (alpha * d + beta)
        )
        if lhs != rhs:
            raise ArithmeticError("quadratic genus equation violated")
    if first[0].denominator != 1:
        raise ArithmeticError("first solution should be integral")
    second_integral = second[0].denominator == 1
    if second_integral != (d in (1, 2)):
        raise ArithmeticError("integrality dichotomy violated")
    return first, second


def riemann_roch_chi(d: int) -> dict:
    """Euler characteristic of O_S((d-1)H + L) on a degree-d surface in P^3.

    Lattice side: chi = ((d-1)H + L).((d-1)H + L - K)/2 + 1 + p_a(S) with
    K = (d-4)H and p_a(S) = C(d-1, 3); closed form 3 C(d,2) + 3 + C(d-1,3).
    The two must agree exactly; the enlargement bound is chi - 2.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    gram = ((d, 1), (1, 2 - d))
    lat = SurfaceLattice(
        rank=2,
        labels=("H", "L"),
        gram=gram,
        canonical=DivisorClass((d - 4, 0)),
        hyperplane=DivisorClass((1, 0)),
        line=DivisorClass((0, 1)),
    )
    c = lat.hyperplane.scale(d - 1) + lat.line
    c_minus_k = c + lat.canonical.scale(-1)
    pairing = lat.dot(c, c_minus_k)
    if pairing % 2:
        raise ArithmeticError("Riemann-Roch pairing is odd")
    pa = comb(d - 1, 3)
    chi_lattice = pairing // 2 + 1 + pa
    chi_closed = 3 * comb(d, 2) + 3 + comb(d - 1, 3)
    if chi_lattice != chi_closed:
        raise ArithmeticError(
            f"lattice chi {chi_lattice} disagrees with closed form {chi_closed}"
        )
    return {"d": d, "chi": chi_lattice, "bound": chi_lattice - 2}


def enlargement_bound(d: int) -> int:
    """Largest general point count embeddable in an order-d eigenscheme (P^3)."""
    return riemann_roch_chi(d)["bound"]


def cubic_surface_lattice():
    """The rank-7 blown-up-plane model of the cubic surface, with line census.

    Basis (l, e_1..e_6), Gram diag(1, -1, ..., -1), K = -3l + sum e_i,
    H = -K.  The 27 lines are the e_j, the l - e_i - e_j and the
    2l - (five e's); each has self-intersection -1, genus 0 and degree 1,
    and each L' + 2H has degree 7 and genus 5.
    """
    rank = 7
    labels = ("l", "e1", "e2", "e3", "e4", "e5", "e6")
    gram = tuple(
        tuple((1 if i == j == 0 else (-1 if i == j else 0)) for j in range(rank))
        for i in range(rank)
    )
    canonical = DivisorClass((-3, 1, 1, 1, 1, 1, 1))
    hyperplane = DivisorClass((3, -1, -1, -1, -1, -1, -1))

    lines = []
    for j in range(1, 7):
        coords = [0] * rank
        coords[j] = 1
        lines.append(DivisorClass(tuple(coords)))
    for i, j in combinations(range(1, 7), 2):
        coords = [1] + [0] * 6
        coords[i] = -1
        coords[j] = -1
        lines.append(DivisorClass(tuple(coords)))
    for missing in range(1, 7):
        coords = [2] + [-1] * 6
        coords[missing] = 0
        lines.append(DivisorClass(tuple(coords)))

    lat = SurfaceLattice(
        rank=rank,
        labels=labels,
        gram=gram,
        canonical=canonical,
        hyperplane=hyperplane,
        line=lines[0],
    )
    if len(lines) != 27:
        raise ArithmeticError("line census size is not 27")
    for line in lines:
        if lat.dot(line, line) != -1:
            raise ArithmeticError(f"{line} has wrong self-intersection")
        if lat.genus(line) != 0:
            raise ArithmeticError(f"{line} has wrong genus")
        if lat.degree(line) != 1:
            raise ArithmeticError(f"{line} has wrong degree")
        curve = line + hyperplane.scale(2)
        if lat.degree(curve) != 7 or lat.genus(curve) != 5:
            raise ArithmeticError(f"{line} + 2H fails the degree-7/genus-5 check")
    return lat, lines


def identity_report(n: int, d: int) -> dict:
    """All lattice identities for one (n, d), as a pass/fail dictionary."""
    lat = eigensurface_lattice(n, d)
    c = eigencurve_class(n, d)
    deg_z = ci_degree(lat, c, c)
    out = {
        "n": n,
        "d": d,
        "gram": [list(r) for r in lat.gram],
        "curve_class": list(c.coords),
        "ci_degree": deg_z,
        "expected_count": expected_count(n, d),
        "ci_matches_count": deg_z == expected_count(n, d),
        "line_genus": lat.genus(lat.line),
    }
    if n == 3:
        g = adjunction_genus(lat, c)
        closed = d**3 - 7 * d * (d - 1) // 2 - 1
        out["curve_genus"] = g
        out["genus_closed_form"] = closed
        out["genus_matches"] = g == closed
        rr = riemann_roch_chi(d)
        out["riemann_roch"] = rr
        first, second = alpha_beta_solutions(d)
        out["alpha_beta"] = {
            "first": [str(first[0]), str(first[1])],
            "second": [str(second[0]), str(second[1])],
            "dichotomy": True,
        }
    return out
